//! Regular SAMS(n,2) for `n = 1, 5 (mod 6)`.
//!
//! A `2 x n` seed array is placed column by column into the cells of the
//! diagonal Latin square `B` that hold symbols `m` and `m+2` (`n = 2m+1`).
//! Columns of the seed land in columns of `W`, forward diagonals of the seed
//! land in rows of `W`. For `n = 1 (mod 6)` this is already a regular
//! SAMS(n,2); for `n = 6k-1` the left diagonal sums to `2n+3` and two column
//! exchanges repair it. `n = 5` is served by a stored grid.

use crate::error::{Error, Result};
use crate::fixtures;
use crate::kotzig::RectArray;
use crate::latin::{check_admissible, f_inv, g_shift};
use crate::square::Square;

/// The `2 x n` seed over `[1, 2n]`.
pub fn seed_pair(n: usize) -> Result<RectArray> {
    check_admissible(n, 5)?;
    let m = (n - 1) / 2;
    let top = (1..=n)
        .map(|j| match j {
            j if j < m => n + j,
            j if j < n => n + j + 1,
            _ => n,
        } as u64)
        .collect::<Vec<_>>();
    let bottom = (1..=n)
        .map(|j| match j {
            j if j <= m => j,
            j if j == m + 1 => 3 * m + 1,
            j => j - 1,
        } as u64)
        .collect::<Vec<_>>();
    RectArray::from_rows(&[top, bottom])
}

/// Places the seed: `a(1,s)` goes to `(f(m, g(s)), g(s))` and `a(2,s)` to
/// `(f(m+2, g(s)), g(s))`.
pub fn build_w(n: usize) -> Result<Square> {
    let seed = seed_pair(n)?;
    let m = (n - 1) / 2;
    let mut w = Square::zeros(n)?;
    for s in 1..=n {
        let col = g_shift(s, n);
        w.set(f_inv(n, m, col), col, seed.get(1, s));
        w.set(f_inv(n, m + 2, col), col, seed.get(2, s));
    }
    Ok(w)
}

/// Swaps column `k` with `k+2` and column `n+1-k` with `n-1-k`, where
/// `n = 6k-1`. Refused for `k = 1`, where the two exchanges collide.
pub fn repair_wstar(w: &Square, n: usize) -> Result<Square> {
    if w.order() != n {
        return Err(Error::OrderMismatch(w.order(), n));
    }
    if n % 6 != 5 {
        return Err(Error::Order { n, reason: "column repair applies to n = 5 (mod 6) only" });
    }
    let k = (n + 1) / 6;
    if k < 2 {
        return Err(Error::Order { n, reason: "column repair is undefined for n = 5" });
    }
    let swap = |j: usize| match j {
        j if j == k => k + 2,
        j if j == k + 2 => k,
        j if j == n + 1 - k => n - 1 - k,
        j if j == n - 1 - k => n + 1 - k,
        j => j,
    };
    Ok(w.permute_columns(swap))
}

/// Regular SAMS(n,2) for every admissible `n >= 5`, with sum set `[n+1, 3n+2]`.
pub fn sams_d2(n: usize) -> Result<Square> {
    check_admissible(n, 5)?;
    match n {
        5 => Ok(fixtures::sams_5_2()),
        n if n % 6 == 1 => build_w(n),
        n => repair_wstar(&build_w(n)?, n),
    }
}
