//! Symmetric diagonal Kotzig arrays and symmetric forward-diagonals arrays.
//!
//! A *symmetric diagonal Kotzig array* is a `d x n` array whose rows are
//! permutations of `1..=n`, with constant column sums, constant forward
//! diagonal sums and `a(i,j) + a(d+1-i, n+1-j) = n+1`.
//!
//! An SFD(t,n) relaxes the first property to "the entries are `nt`
//! consecutive integers" and the last to "the point-symmetric pair sums are
//! constant". [`sfd`] lifts row `i` of a Kotzig array by `n(i-1)` and adds
//! an offset `l`, giving an SFD over `[1+l, nt+l]`.
//!
//! The forward diagonal starting at `(1, j)` collects `(i, <j+i-1>_n)` for
//! every row `i`, wrapping cyclically.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::latin::wrap;
use crate::verify::{Location, Property, VerificationReport};

/// A `d x n` array of positive integers with `d <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectArray {
    d: usize,
    n: usize,
    cells: Vec<u64>,
}

impl RectArray {
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        let d = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        if d == 0 || n == 0 {
            return Err(Error::Shape("array must have at least one row and column".into()));
        }
        if d > n {
            return Err(Error::Shape(format!("{d} rows exceed {n} columns")));
        }
        let mut cells = Vec::with_capacity(d * n);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::RaggedRow { row: i + 1, expected: n, actual: r.len() });
            }
            if let Some(j) = r.iter().position(|&v| v == 0) {
                return Err(Error::Shape(format!("cell ({}, {}) is zero", i + 1, j + 1)));
            }
            cells.extend_from_slice(r);
        }
        Ok(Self { d, n, cells })
    }

    fn from_row_vecs(rows: Vec<Vec<u64>>) -> Self {
        Self::from_rows(&rows).expect("constructed rows are well-formed")
    }

    pub fn rows(&self) -> usize {
        self.d
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        assert!((1..=self.d).contains(&i) && (1..=self.n).contains(&j), "({i}, {j}) out of range");
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.cells[(i - 1) * self.n..i * self.n]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u64]> {
        self.cells.chunks(self.n)
    }

    pub fn column_sums(&self) -> Vec<u64> {
        (1..=self.n).map(|j| (1..=self.d).map(|i| self.get(i, j)).sum()).collect()
    }

    /// Sum of the forward diagonal starting at `(1, j)`, for each `j`.
    pub fn forward_diagonal_sums(&self) -> Vec<u64> {
        (1..=self.n).map(|j| (1..=self.d).map(|i| self.get(i, wrap((j + i) as i64 - 1, self.n))).sum()).collect()
    }

    /// `a(i,j) + a(d+1-i, n+1-j)` over every cell, row-major.
    pub fn point_symmetry_sums(&self) -> Vec<u64> {
        let (d, n) = (self.d, self.n);
        (1..=d)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j) + self.get(d + 1 - i, n + 1 - j))
            .collect()
    }

    /// Every entry plus `delta`.
    pub fn offset(&self, delta: u64) -> RectArray {
        RectArray { d: self.d, n: self.n, cells: self.cells.iter().map(|v| v + delta).collect() }
    }

    fn stack(blocks: &[&RectArray]) -> RectArray {
        let rows = blocks.iter().flat_map(|b| b.row_iter().map(<[u64]>::to_vec)).collect();
        Self::from_row_vecs(rows)
    }
}

impl fmt::Display for RectArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.cells.iter().max().map_or(1, |m| m.to_string().len());
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// The four base heights a Kotzig array is assembled from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alpha {
    Three,
    Four,
    Five,
    Six,
}

impl Alpha {
    pub fn rows(self) -> usize {
        match self {
            Alpha::Three => 3,
            Alpha::Four => 4,
            Alpha::Five => 5,
            Alpha::Six => 6,
        }
    }

    fn from_rows(d: usize) -> Option<Alpha> {
        match d {
            3 => Some(Alpha::Three),
            4 => Some(Alpha::Four),
            5 => Some(Alpha::Five),
            6 => Some(Alpha::Six),
            _ => None,
        }
    }

    /// Splits `d >= 3` as `4k + alpha` with `alpha` in 3..=6.
    pub fn decompose(d: usize) -> Option<(usize, Alpha)> {
        if d < 3 {
            return None;
        }
        let alpha = (d - 3) % 4 + 3;
        Some(((d - alpha) / 4, Alpha::from_rows(alpha)?))
    }
}

fn check_odd(n: usize, min: usize) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(Error::Order { n, reason: "Kotzig arrays need an odd number of columns" });
    }
    if n < min {
        return Err(Error::Order { n, reason: "too few columns for the requested rows" });
    }
    Ok(())
}

fn a3_rows(n: usize) -> Vec<Vec<u64>> {
    let first: Vec<u64> = (1..=n).map(|j| if j % 2 == 1 { n - (j - 1) / 2 } else { (n + 1 - j) / 2 } as u64).collect();
    let second = (1..=n as u64).collect();
    let third = (1..=n).map(|j| (n + 1) as u64 - first[n - j]).collect();
    vec![first, second, third]
}

/// `B_1` (rows 1-2 of `A_4`) and `B_2` (rows 3-4).
fn b_blocks(n: usize) -> (RectArray, RectArray) {
    let h = n.div_ceil(2);
    let b1: Vec<u64> = (1..=n)
        .map(|j| match j {
            j if j < h => j,
            j if j < n => j + 1,
            _ => h,
        } as u64)
        .collect();
    let b2: Vec<u64> = (1..=n)
        .map(|j| match j {
            1 => h,
            j if j <= h => n + 2 - j,
            j => n + 1 - j,
        } as u64)
        .collect();
    let mirror = |row: &[u64]| -> Vec<u64> { (1..=n).map(|j| (n + 1) as u64 - row[n - j]).collect() };
    let b3 = mirror(&b2);
    let b4 = mirror(&b1);
    (RectArray::from_row_vecs(vec![b1, b2]), RectArray::from_row_vecs(vec![b3, b4]))
}

fn a5_rows(n: usize) -> Vec<Vec<u64>> {
    let h = n.div_ceil(2);
    let c1: Vec<u64> = (1..=n).map(|j| ((h * (j - 1)) % n + 1) as u64).collect();
    let rev: Vec<u64> = (1..=n).map(|j| (n + 1 - j) as u64).collect();
    let id: Vec<u64> = (1..=n as u64).collect();
    let c5 = (1..=n).map(|j| (j + h) as u64 - c1[j - 1]).collect();
    vec![c1, rev.clone(), id, rev, c5]
}

/// The base arrays `A_3`, `A_4`, `A_5` and `A_6 = (A_3; A_3)`.
pub fn kotzig_base(alpha: Alpha, n: usize) -> Result<RectArray> {
    check_odd(n, alpha.rows().max(3))?;
    Ok(match alpha {
        Alpha::Three => RectArray::from_row_vecs(a3_rows(n)),
        Alpha::Four => {
            let (b1, b2) = b_blocks(n);
            RectArray::stack(&[&b1, &b2])
        }
        Alpha::Five => RectArray::from_row_vecs(a5_rows(n)),
        Alpha::Six => {
            let a3 = RectArray::from_row_vecs(a3_rows(n));
            RectArray::stack(&[&a3, &a3])
        }
    })
}

fn check_rows(d: usize, n: usize) -> Result<()> {
    check_odd(n, 3)?;
    if d < 3 || d > n {
        return Err(Error::Shape(format!("Kotzig array needs 3 <= d <= n, got d={d}, n={n}")));
    }
    Ok(())
}

/// Symmetric diagonal Kotzig array of any height `3 <= d <= n`, `n` odd.
///
/// Heights up to 6 are the base arrays. Taller ones write `d = 4k + alpha`
/// and stack `k` copies of `B_1`, then `A_alpha`, then `k` copies of `B_2`.
pub fn kotzig(d: usize, n: usize) -> Result<RectArray> {
    check_rows(d, n)?;
    let (k, alpha) = Alpha::decompose(d).expect("d >= 3");
    let core = kotzig_base(alpha, n)?;
    if k == 0 {
        return Ok(core);
    }
    let (b1, b2) = b_blocks(n);
    let mut blocks = vec![&b1; k];
    blocks.push(&core);
    blocks.extend(std::iter::repeat_n(&b2, k));
    Ok(RectArray::stack(&blocks))
}

/// The alternative stacking `(A_3; B_1 x (k-1); A_alpha; B_2 x (k-1); A_3)`
/// for heights `d = 4k + 2 + alpha` with `k >= 1`, i.e. `d >= 9`.
pub fn kotzig_f(d: usize, n: usize) -> Result<RectArray> {
    check_rows(d, n)?;
    let (k, alpha) = match d.checked_sub(2).and_then(Alpha::decompose) {
        Some((k, alpha)) if k >= 1 => (k, alpha),
        _ => return Err(Error::Shape(format!("d={d} is not 4k+2+alpha with k >= 1"))),
    };
    let a3 = kotzig_base(Alpha::Three, n)?;
    let core = kotzig_base(alpha, n)?;
    let (b1, b2) = b_blocks(n);
    let mut blocks = vec![&a3];
    blocks.extend(std::iter::repeat_n(&b1, k - 1));
    blocks.push(&core);
    blocks.extend(std::iter::repeat_n(&b2, k - 1));
    blocks.push(&a3);
    Ok(RectArray::stack(&blocks))
}

/// SFD(t,n) over `[1+l, nt+l]`: `kotzig(t,n)` with row `i` raised by
/// `n(i-1) + l`.
pub fn sfd(t: usize, n: usize, l: u64) -> Result<RectArray> {
    let base = kotzig(t, n)?;
    let cells = base.cells.iter().enumerate().map(|(k, &v)| v + (n * (k / n)) as u64 + l).collect();
    Ok(RectArray { d: t, n, cells })
}

fn check_constant(
    values: &[u64],
    property: Property,
    what: &str,
    loc: fn(usize) -> Location,
    report: &mut VerificationReport,
) {
    let Some(&first) = values.first() else { return };
    let off: Vec<Location> = values.iter().enumerate().filter(|(_, &v)| v != first).map(|(k, _)| loc(k + 1)).collect();
    if !off.is_empty() {
        let lo = values.iter().min().unwrap();
        let hi = values.iter().max().unwrap();
        report.push(property, format!("{what} range over [{lo},{hi}]"), off);
    }
}

fn check_lines(arr: &RectArray, report: &mut VerificationReport) {
    check_constant(&arr.column_sums(), Property::ColumnSum, "column sums", Location::Column, report);
    check_constant(
        &arr.forward_diagonal_sums(),
        Property::ForwardDiagonalSum,
        "forward diagonal sums",
        Location::ForwardDiagonal,
        report,
    );
}

fn symmetry_breaks(arr: &RectArray, target: Option<u64>) -> (Vec<Location>, u64) {
    let sums = arr.point_symmetry_sums();
    let target = target.unwrap_or(sums[0]);
    let off = sums
        .iter()
        .enumerate()
        .filter(|(_, &s)| s != target)
        .map(|(k, _)| Location::Cell(k / arr.n + 1, k % arr.n + 1))
        .collect();
    (off, target)
}

/// Checks the four symmetric diagonal Kotzig array properties.
pub fn verify_kotzig(arr: &RectArray) -> VerificationReport {
    let mut report = VerificationReport::new();
    let n = arr.n as u64;
    for (i, row) in arr.row_iter().enumerate() {
        let set: BTreeSet<u64> = row.iter().copied().collect();
        if set.len() != arr.n || set.iter().any(|&v| v > n) {
            report.push(Property::RowPermutation, "row is not a permutation of 1..n", vec![Location::Row(i + 1)]);
        }
    }
    check_lines(arr, &mut report);
    let (off, _) = symmetry_breaks(arr, Some(n + 1));
    if !off.is_empty() {
        report.push(Property::PointSymmetry, format!("a(i,j) + a(d+1-i,n+1-j) != {}", n + 1), off);
    }
    report
}

/// Checks the SFD properties, with the entries required to be exactly
/// `[1+l, nt+l]`.
pub fn verify_sfd(arr: &RectArray, l: u64) -> VerificationReport {
    let mut report = VerificationReport::new();
    let count = (arr.d * arr.n) as u64;
    let mut sorted = arr.cells.clone();
    sorted.sort_unstable();
    if !sorted.iter().copied().eq(1 + l..=count + l) {
        report.push(Property::ElementSet, format!("entries are not exactly [{},{}]", 1 + l, count + l), vec![]);
    }
    check_lines(arr, &mut report);
    let (off, target) = symmetry_breaks(arr, None);
    if !off.is_empty() {
        report.push(Property::PointSymmetry, format!("point-symmetric pair sums differ from {target}"), off);
    }
    report
}

/// Checks the extended symmetry claimed for even-height SFDs built from
/// Kotzig arrays: with `t = 2e`, for all `x, y` in `1..=n`,
///
/// * `f(i,<i+x>) + f(2e+1-i, n+1-<i+x>) = 2en+1+2l`, and
/// * `sum_{i<=e} f(i,<i+x>) + sum_{i>e} f(i,<i+x+y>) = (2en+1+2l) e`.
///
/// Failures of the second clause are listed per `(x, y)` as a
/// `Cell(x, y)` location.
pub fn verify_extended_symmetry(arr: &RectArray, l: u64) -> VerificationReport {
    let mut report = VerificationReport::new();
    let (t, n) = (arr.d, arr.n);
    if t % 2 == 1 {
        report.push(Property::PointSymmetry, "extended symmetry needs an even number of rows", vec![]);
        return report;
    }
    let e = t / 2;
    let target = (t * n) as u64 + 1 + 2 * l;
    let at = |i: usize, shift: usize| wrap((i + shift) as i64, n);
    let mut pair_breaks = Vec::new();
    for x in 1..=n {
        for i in 1..=t {
            let j = at(i, x);
            if arr.get(i, j) + arr.get(t + 1 - i, n + 1 - j) != target {
                pair_breaks.push(Location::Cell(i, j));
            }
        }
    }
    if !pair_breaks.is_empty() {
        report.push(Property::PointSymmetry, format!("shifted pair sums differ from {target}"), pair_breaks);
    }
    let mut split_breaks = Vec::new();
    for x in 1..=n {
        let upper: u64 = (1..=e).map(|i| arr.get(i, at(i, x))).sum();
        for y in 1..=n {
            let lower: u64 = (e + 1..=t).map(|i| arr.get(i, at(i, x + y))).sum();
            if upper + lower != target * e as u64 {
                split_breaks.push(Location::Cell(x, y));
            }
        }
    }
    if !split_breaks.is_empty() {
        report.push(
            Property::ForwardDiagonalSum,
            format!("split diagonal sums differ from {} for {} (x, y) pair(s)", target * e as u64, split_breaks.len()),
            split_breaks,
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn decompose_heights() {
        assert_eq!(Alpha::decompose(3), Some((0, Alpha::Three)));
        assert_eq!(Alpha::decompose(6), Some((0, Alpha::Six)));
        assert_eq!(Alpha::decompose(7), Some((1, Alpha::Three)));
        assert_eq!(Alpha::decompose(10), Some((1, Alpha::Six)));
        assert_eq!(Alpha::decompose(13), Some((2, Alpha::Five)));
        assert_eq!(Alpha::decompose(2), None);
    }

    #[test]
    fn a3_of_order_3() {
        let a = kotzig_base(Alpha::Three, 3).unwrap();
        assert_eq!(a, RectArray::from_rows(&[[3, 1, 2], [1, 2, 3], [2, 3, 1]]).unwrap());
        assert!(verify_kotzig(&a).is_valid());
    }

    #[test]
    fn a5_first_row() {
        let a = kotzig_base(Alpha::Five, 5).unwrap();
        assert_eq!(a.row(1), &[1, 4, 2, 5, 3]);
    }

    #[test]
    fn a4_first_row_for_13() {
        let a = kotzig_base(Alpha::Four, 13).unwrap();
        assert_eq!(a.row(1), &[1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 7]);
    }

    #[test]
    fn stacked_rows_match_worked_arrays() {
        let k6 = kotzig(6, 11).unwrap();
        assert_eq!(k6.row(1), &[11, 5, 10, 4, 9, 3, 8, 2, 7, 1, 6]);
        assert_eq!(k6.row(4), k6.row(1));
        let k7 = kotzig(7, 13).unwrap();
        assert_eq!(k7.row(2), &[7, 13, 12, 11, 10, 9, 8, 6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn sfd_matches_worked_arrays() {
        assert_eq!(sfd(6, 11, 0).unwrap(), fixtures::sfd_6_11());
        assert_eq!(sfd(6, 11, 22).unwrap(), fixtures::sfd_6_11_shifted());
        assert_eq!(sfd(7, 13, 0).unwrap(), fixtures::sfd_7_13());
        assert_eq!(sfd(7, 13, 26).unwrap(), fixtures::sfd_7_13_shifted());
        assert_eq!(sfd(7, 13, 0).unwrap().get(4, 7), 46);
    }

    #[test]
    fn small_sfd() {
        let s = sfd(3, 3, 0).unwrap();
        assert!(verify_sfd(&s, 0).is_valid());
        let mut all: Vec<u64> = s.row_iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (1..=9).collect::<Vec<_>>());
        // Asking for the wrong offset is an element-set failure only.
        let r = verify_sfd(&s, 1);
        assert!(r.has(Property::ElementSet));
        assert!(!r.has(Property::ColumnSum));
    }

    #[test]
    fn swapped_entries_break_column_sums() {
        let a = kotzig_base(Alpha::Three, 5).unwrap();
        let mut rows: Vec<Vec<u64>> = a.row_iter().map(<[u64]>::to_vec).collect();
        rows[0].swap(0, 1);
        let r = verify_kotzig(&RectArray::from_rows(&rows).unwrap());
        assert!(r.has(Property::ColumnSum));
        assert!(!r.has(Property::RowPermutation));
    }

    #[test]
    fn kotzig_f_examples() {
        let f9 = kotzig_f(9, 11).unwrap();
        let a3 = kotzig_base(Alpha::Three, 11).unwrap();
        assert_eq!(f9, RectArray::stack(&[&a3, &a3, &a3]));
        assert!(verify_kotzig(&f9).is_valid());
        let f10 = kotzig_f(10, 13).unwrap();
        assert_eq!(f10.rows(), 10);
        assert!(verify_kotzig(&f10).is_valid());
        assert!(verify_kotzig(&kotzig(10, 13).unwrap()).is_valid());
        assert!(kotzig_f(8, 13).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(kotzig(3, 4).is_err());
        assert!(kotzig(2, 5).is_err());
        assert!(kotzig(6, 5).is_err());
        assert!(kotzig_base(Alpha::Five, 3).is_err());
        assert!(RectArray::from_rows(&[[1u64, 2], [3, 4], [5, 6]]).is_err());
        assert!(RectArray::from_rows(&[[1u64, 0]]).is_err());
    }

    #[test]
    fn kotzig_properties_over_odd_orders() {
        for n in (3..=51).step_by(2) {
            for d in 3..=n {
                let a = kotzig(d, n).unwrap();
                let r = verify_kotzig(&a);
                assert!(r.is_valid(), "kotzig({d}, {n}):\n{r}");
                let expected = (d * (n + 1) / 2) as u64;
                assert!(a.column_sums().iter().all(|&s| s == expected));
                assert!(a.forward_diagonal_sums().iter().all(|&s| s == expected));
                if let Ok(f) = kotzig_f(d, n) {
                    assert!(verify_kotzig(&f).is_valid(), "kotzig_f({d}, {n})");
                }
            }
        }
    }

    #[test]
    fn extended_symmetry_on_even_heights() {
        for n in (5..=31).step_by(2) {
            for t in (4..=n).step_by(2) {
                for l in [0, 17] {
                    let s = sfd(t, n, l).unwrap();
                    let r = verify_extended_symmetry(&s, l);
                    assert!(r.is_valid(), "sfd({t}, {n}, {l}):\n{r}");
                }
            }
        }
    }
}
