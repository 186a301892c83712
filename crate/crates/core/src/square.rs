//! The `Square` grid and the line statistics computed from it.
//!
//! All public coordinates are 1-based `(row, col)` pairs in `1..=n`.
//! Storage is a dense row-major `Vec<u64>` with explicit zeros.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// Largest value a cell may hold. Keeps every line sum of any order we can
/// allocate well inside `u64`.
pub const MAX_CELL: u64 = u32::MAX as u64;

/// An `n x n` grid of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Square {
    n: usize,
    cells: Vec<u64>,
}

impl Square {
    /// All-zero square of order `n`.
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        Ok(Self { n, cells: vec![0; n * n] })
    }

    /// Builds a square from `n*n` row-major cells.
    pub fn from_cells(n: usize, cells: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if cells.len() != n * n {
            return Err(Error::CellCount { n, expected: n * n, actual: cells.len() });
        }
        if let Some(pos) = cells.iter().position(|&v| v > MAX_CELL) {
            return Err(Error::CellTooLarge { row: pos / n + 1, col: pos % n + 1, value: cells[pos], bound: MAX_CELL });
        }
        Ok(Self { n, cells })
    }

    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::RaggedRow { row: i + 1, expected: n, actual: row.len() });
            }
            cells.extend_from_slice(row);
        }
        Self::from_cells(n, cells)
    }

    /// Builds a square by evaluating `f(i, j)` at every 1-based cell.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u64) -> Result<Self> {
        let mut cells = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                cells.push(f(i, j));
            }
        }
        Self::from_cells(n, cells)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Value at 1-based `(i, j)`. Panics when out of range.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "cell ({i}, {j}) out of range");
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v <= MAX_CELL);
        self.cells[(i - 1) * self.n + (j - 1)] = v;
    }

    /// Row-major cells.
    pub fn cells(&self) -> &[u64] {
        &self.cells
    }

    pub fn row(&self, i: usize) -> &[u64] {
        let start = (i - 1) * self.n;
        &self.cells[start..start + self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.cells.chunks(self.n)
    }

    /// Positive cells as `((i, j), value)` in row-major order.
    pub fn positive_cells(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        let n = self.n;
        self.cells.iter().enumerate().filter(|(_, &v)| v > 0).map(move |(k, &v)| ((k / n + 1, k % n + 1), v))
    }

    pub fn total(&self) -> u64 {
        self.cells.iter().sum()
    }

    pub fn sum_profile(&self) -> SumProfile {
        sum_profile(self)
    }

    pub fn density_profile(&self) -> DensityProfile {
        density_profile(self)
    }

    /// The square turned through 180 degrees: `(i, j) -> (n+1-i, n+1-j)`.
    pub fn rotate_180(&self) -> Square {
        let mut cells = self.cells.clone();
        cells.reverse();
        Square { n: self.n, cells }
    }

    pub fn transpose(&self) -> Square {
        let n = self.n;
        let cells = (0..n * n).map(|k| self.cells[(k % n) * n + k / n]).collect();
        Square { n, cells }
    }

    /// Applies `f` to each column index: column `j` of the result is column
    /// `perm(j)` of `self`.
    pub(crate) fn permute_columns(&self, perm: impl Fn(usize) -> usize) -> Square {
        Square::from_fn(self.n, |i, j| self.get(i, perm(j))).expect("same shape")
    }
}

impl fmt::Debug for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Square(n={})", self.n)?;
        fmt::Display::fmt(self, f)
    }
}

/// Fixed-width grid with zeros rendered as blanks.
impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.cells.iter().max().map_or(1, |m| m.to_string().len());
        for row in self.rows() {
            let line: Vec<String> =
                row.iter().map(|&v| if v == 0 { " ".repeat(width) } else { format!("{v:>width$}") }).collect();
            writeln!(f, "{}", line.join(" ").trim_end())?;
        }
        Ok(())
    }
}

impl Add for &Square {
    type Output = Square;

    /// Cellwise sum. Panics on order mismatch; use [`crate::compose`] for the
    /// checked composition.
    fn add(self, rhs: &Square) -> Square {
        assert_eq!(self.n, rhs.n, "order mismatch");
        let cells = self.cells.iter().zip(&rhs.cells).map(|(a, b)| a + b).collect();
        Square { n: self.n, cells }
    }
}

/// Row, column and both main-diagonal sums of a square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumProfile {
    pub row_sums: Vec<u64>,
    pub col_sums: Vec<u64>,
    /// Sum over cells `(i, i)`.
    pub left_diag: u64,
    /// Sum over cells `(i, n+1-i)`.
    pub right_diag: u64,
}

impl SumProfile {
    /// All `2n+2` line sums: rows, columns, left diagonal, right diagonal.
    pub fn lines(&self) -> impl Iterator<Item = u64> + '_ {
        self.row_sums.iter().chain(&self.col_sums).copied().chain([self.left_diag, self.right_diag])
    }

    pub fn sum_set(&self) -> BTreeSet<u64> {
        self.lines().collect()
    }

    pub fn min(&self) -> u64 {
        self.lines().min().expect("at least 4 lines")
    }

    pub fn max(&self) -> u64 {
        self.lines().max().expect("at least 4 lines")
    }

    /// True when the `2n+2` sums are pairwise distinct and consecutive.
    pub fn is_consecutive(&self) -> bool {
        let count = self.row_sums.len() * 2 + 2;
        let set = self.sum_set();
        set.len() == count && self.max() - self.min() + 1 == count as u64
    }

    /// True when every line sum is the same.
    pub fn is_constant(&self) -> bool {
        let first = self.left_diag;
        self.lines().all(|s| s == first)
    }
}

pub fn sum_profile(sq: &Square) -> SumProfile {
    let n = sq.n;
    let mut row_sums = vec![0u64; n];
    let mut col_sums = vec![0u64; n];
    let mut left_diag = 0;
    let mut right_diag = 0;
    for (k, &v) in sq.cells.iter().enumerate() {
        let (r, c) = (k / n, k % n);
        row_sums[r] += v;
        col_sums[c] += v;
        if r == c {
            left_diag += v;
        }
        if r + c == n - 1 {
            right_diag += v;
        }
    }
    SumProfile { row_sums, col_sums, left_diag, right_diag }
}

/// Count of strictly positive cells on each of the `2n+2` lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityProfile {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub left_diag: usize,
    pub right_diag: usize,
}

impl DensityProfile {
    pub fn lines(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().chain(&self.cols).copied().chain([self.left_diag, self.right_diag])
    }

    /// True when every line has exactly `d` positive entries.
    pub fn is_regular(&self, d: usize) -> bool {
        self.lines().all(|c| c == d)
    }
}

impl Add for &DensityProfile {
    type Output = DensityProfile;

    fn add(self, rhs: &DensityProfile) -> DensityProfile {
        let zip = |a: &[usize], b: &[usize]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        DensityProfile {
            rows: zip(&self.rows, &rhs.rows),
            cols: zip(&self.cols, &rhs.cols),
            left_diag: self.left_diag + rhs.left_diag,
            right_diag: self.right_diag + rhs.right_diag,
        }
    }
}

pub fn density_profile(sq: &Square) -> DensityProfile {
    let n = sq.n;
    let mut rows = vec![0; n];
    let mut cols = vec![0; n];
    let mut left_diag = 0;
    let mut right_diag = 0;
    for (k, &v) in sq.cells.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let (r, c) = (k / n, k % n);
        rows[r] += 1;
        cols[c] += 1;
        if r == c {
            left_diag += 1;
        }
        if r + c == n - 1 {
            right_diag += 1;
        }
    }
    DensityProfile { rows, cols, left_diag, right_diag }
}

/// The support: 1-based coordinates of every positive cell.
pub fn support(sq: &Square) -> BTreeSet<(usize, usize)> {
    sq.positive_cells().map(|(ij, _)| ij).collect()
}

/// Cells positive in both squares, row-major.
pub fn support_overlap(m: &Square, other: &Square) -> Result<Vec<(usize, usize)>> {
    if m.n != other.n {
        return Err(Error::OrderMismatch(m.n, other.n));
    }
    let n = m.n;
    Ok(m.cells
        .iter()
        .zip(&other.cells)
        .enumerate()
        .filter(|(_, (a, b))| **a > 0 && **b > 0)
        .map(|(k, _)| (k / n + 1, k % n + 1))
        .collect())
}

/// Two squares are compatible when their supports are disjoint.
pub fn compatible(m: &Square, other: &Square) -> Result<bool> {
    Ok(support_overlap(m, other)?.is_empty())
}
