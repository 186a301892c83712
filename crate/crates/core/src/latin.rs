//! The bracket operator `<a>_n`, the diagonal Latin square `b(i,j) = <2i+j-1>_n`
//! and the index maps every placement construction is built from.

use crate::error::{Error, Result};
use crate::square::Square;
use crate::verify::{verify_diagonal_latin, VerificationReport};

/// Representative of `a mod n` in `1..=n` (`n` itself when `n | a`).
/// Negative `a` is accepted.
pub fn bracket(a: i64, n: i64) -> Result<i64> {
    if n <= 0 {
        return Err(Error::NonPositiveModulus(n));
    }
    Ok(wrap(a, n as usize) as i64)
}

/// Infallible bracket for internal index arithmetic.
#[inline]
pub(crate) fn wrap(a: i64, n: usize) -> usize {
    let r = a.rem_euclid(n as i64) as usize;
    if r == 0 {
        n
    } else {
        r
    }
}

/// True for `n >= 5` with `n = 1` or `5 (mod 6)`.
pub fn is_admissible_order(n: usize) -> bool {
    n >= 5 && matches!(n % 6, 1 | 5)
}

pub(crate) fn check_admissible(n: usize, min: usize) -> Result<()> {
    if !matches!(n % 6, 1 | 5) {
        return Err(Error::Order { n, reason: "order must be 1 or 5 mod 6" });
    }
    if n < min {
        return Err(Error::Order { n, reason: "order below the construction's minimum" });
    }
    Ok(())
}

/// `n x n` Latin square over `1..=n` whose two main diagonals are transversals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalLatinSquare {
    square: Square,
}

impl DiagonalLatinSquare {
    pub fn order(&self) -> usize {
        self.square.order()
    }

    /// Symbol at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.square.get(i, j) as usize
    }

    pub fn as_square(&self) -> &Square {
        &self.square
    }

    pub fn verify(&self) -> VerificationReport {
        verify_diagonal_latin(&self.square)
    }
}

/// Builds `b(i,j) = <2i+j-1>_n`. Only orders `1, 5 (mod 6)` from 5 up give a
/// diagonal Latin square; others are rejected.
pub fn build_b(n: usize) -> Result<DiagonalLatinSquare> {
    check_admissible(n, 5)?;
    let square = Square::from_fn(n, |i, j| latin_symbol(n, i, j) as u64)?;
    Ok(DiagonalLatinSquare { square })
}

#[inline]
pub(crate) fn latin_symbol(n: usize, i: usize, j: usize) -> usize {
    wrap((2 * i + j) as i64 - 1, n)
}

/// Row `i` of column `j` holding symbol `x` in `build_b(n)`: the solution of
/// `<2i+j-1>_n = x`, i.e. `i = <(x-j+1)(n+1)/2>_n`. `n` must be odd.
#[inline]
pub fn f_inv(n: usize, x: usize, j: usize) -> usize {
    debug_assert!(n % 2 == 1);
    let half = (n as i64 + 1) / 2;
    // Reduce first so the product stays small for any order.
    let t = (x as i64 - j as i64 + 1).rem_euclid(n as i64);
    wrap(t * half, n)
}

/// `g(s) = <m+2s-1>_n` with `m = (n-1)/2`; a bijection on `1..=n` for odd `n`.
#[inline]
pub fn g_shift(s: usize, n: usize) -> usize {
    let m = (n - 1) / 2;
    wrap((m + 2 * s) as i64 - 1, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(14, 7), Ok(7));
        assert_eq!(bracket(15, 7), Ok(1));
        assert_eq!(bracket(-3, 11), Ok(8));
        assert_eq!(bracket(0, 1), Ok(1));
        assert_eq!(bracket(3, 0), Err(Error::NonPositiveModulus(0)));
        assert_eq!(bracket(3, -2), Err(Error::NonPositiveModulus(-2)));
    }

    #[test]
    fn first_rows() {
        let b7 = build_b(7).unwrap();
        assert_eq!(b7.as_square(), &fixtures::latin_7());
        let b11 = build_b(11).unwrap();
        assert_eq!(b11.as_square().row(1), &[2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 1]);
    }

    #[test]
    fn rejects_orders_outside_the_family() {
        for n in [0, 1, 2, 3, 4, 6, 9, 15, 21] {
            assert!(build_b(n).is_err(), "n = {n}");
        }
        // n = 9 would give a left diagonal that is not a transversal.
        let b9 = Square::from_fn(9, |i, j| latin_symbol(9, i, j) as u64).unwrap();
        assert!(!verify_diagonal_latin(&b9).is_valid());
    }

    #[test]
    fn center_cell() {
        for n in (5..80).filter(|&n| is_admissible_order(n)) {
            let m = (n - 1) / 2;
            assert_eq!(build_b(n).unwrap().get(m + 1, m + 1), m + 1);
        }
    }

    #[test]
    fn f_inv_examples() {
        assert_eq!(f_inv(7, 3, 4), 7);
        assert_eq!(f_inv(7, 5, 4), 1);
    }

    #[test]
    fn g_shift_examples() {
        assert_eq!(g_shift(1, 7), 4);
        assert_eq!(g_shift(7, 11), 7);
        let mut image: Vec<usize> = (1..=13).map(|s| g_shift(s, 13)).collect();
        image.sort_unstable();
        assert_eq!(image, (1..=13).collect::<Vec<_>>());
    }

    /// Table-lookup inverse, kept independent of the closed form.
    fn f_inv_table(b: &DiagonalLatinSquare, x: usize, j: usize) -> usize {
        (1..=b.order()).find(|&i| b.get(i, j) == x).expect("Latin column")
    }

    #[test]
    fn f_inv_matches_lookup() {
        for n in (5..=61).filter(|&n| is_admissible_order(n)) {
            let b = build_b(n).unwrap();
            for x in 1..=n {
                for j in 1..=n {
                    assert_eq!(f_inv(n, x, j), f_inv_table(&b, x, j), "n={n} x={x} j={j}");
                }
            }
            for i in 1..=n {
                for j in 1..=n {
                    assert_eq!(f_inv(n, b.get(i, j), j), i);
                }
            }
        }
    }

    #[test]
    fn built_squares_are_diagonal_latin_and_point_symmetric() {
        for n in (5..=101).filter(|&n| is_admissible_order(n)) {
            let b = build_b(n).unwrap();
            assert!(b.verify().is_valid(), "n = {n}");
            for i in 1..=n {
                for j in 1..=n {
                    assert_eq!(b.get(i, j) + b.get(n + 1 - i, n + 1 - j), n + 1);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn bracket_is_the_representative(a in -1_000_000i64..1_000_000, n in 1i64..500) {
            let r = bracket(a, n).unwrap();
            prop_assert!((1..=n).contains(&r));
            prop_assert_eq!((a - r).rem_euclid(n), 0);
        }
    }
}
