//! Regular SAMS(n,4) for `n = 1, 5 (mod 6)`, `n >= 7`, by a single
//! placement of a `4 x n` seed array.
//!
//! Seed entry `(i', j')` goes to row `<i'-j'-1>_n`, column `<2j'-3>_n`. Seed
//! columns stay columns and seed forward diagonals become rows; the cells
//! used are exactly those where `B` holds `n-4`, `n-2`, `n` or `2`.

use crate::error::Result;
use crate::kotzig::RectArray;
use crate::latin::{check_admissible, wrap};
use crate::square::Square;

/// The `4 x n` seed with rows over `[2n+1,3n]`, `[2,n+1]`, `[n+2,2n] + {1}`
/// and `[3n+1,4n]`.
pub fn seed_quad(n: usize) -> Result<RectArray> {
    check_admissible(n, 7)?;
    let m = (n - 1) / 2;
    let r1 = (1..=n)
        .map(|j| if j % 2 == 1 { 2 * n + j.div_ceil(2) } else { 2 * n + m + 1 + j / 2 } as u64)
        .collect::<Vec<_>>();
    let r2 = (1..=n).map(|j| (n + 2 - j) as u64).collect::<Vec<_>>();
    let r3 = (1..=n)
        .map(|j| match j {
            1 => 1,
            j if j % 2 == 1 => n + j.div_ceil(2),
            j => n + m + 1 + j / 2,
        } as u64)
        .collect::<Vec<_>>();
    let r4 = (1..=n).map(|j| (4 * n + 1 - j) as u64).collect::<Vec<_>>();
    RectArray::from_rows(&[r1, r2, r3, r4])
}

#[inline]
pub(crate) fn place_row(n: usize, i: usize, j: usize) -> usize {
    wrap(i as i64 - j as i64 - 1, n)
}

#[inline]
pub(crate) fn place_col(n: usize, j: usize) -> usize {
    wrap(2 * j as i64 - 3, n)
}

/// Regular SAMS(n,4) with sum set `[7n+2, 9n+3]`, left diagonal `8n+2` and
/// right diagonal `9n+3`.
pub fn sams_d4(n: usize) -> Result<Square> {
    let seed = seed_quad(n)?;
    let mut sq = Square::zeros(n)?;
    for i in 1..=4 {
        for j in 1..=n {
            sq.set(place_row(n, i, j), place_col(n, j), seed.get(i, j));
        }
    }
    Ok(sq)
}
