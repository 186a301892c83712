//! Verifiers for regular SAMS / SMS and the shared report type.
//!
//! Every verifier checks all of its clauses and lists each failure; none of
//! them stop at the first violation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::square::{DensityProfile, Square, SumProfile};

/// Which property a violation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// Positive entries must be exactly a prescribed run of integers, each once.
    ElementSet,
    /// Line sums must be `2n+2` distinct consecutive integers.
    SumSet,
    /// Line sums must all be equal.
    ConstantSum,
    /// Every line must hold the same number of positive entries.
    Density,
    /// Rows and columns of a Latin square must be permutations.
    LatinLine,
    /// Both main diagonals of a diagonal Latin square must be transversals.
    Transversal,
    RowPermutation,
    ColumnSum,
    ForwardDiagonalSum,
    PointSymmetry,
}

impl Property {
    pub fn id(self) -> &'static str {
        match self {
            Property::ElementSet => "element-set",
            Property::SumSet => "sum-set",
            Property::ConstantSum => "constant-sum",
            Property::Density => "density",
            Property::LatinLine => "latin-line",
            Property::Transversal => "transversal",
            Property::RowPermutation => "row-permutation",
            Property::ColumnSum => "column-sum",
            Property::ForwardDiagonalSum => "forward-diagonal-sum",
            Property::PointSymmetry => "point-symmetry",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A line or cell of a square or rectangular array, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Cell(usize, usize),
    Row(usize),
    Column(usize),
    LeftDiagonal,
    RightDiagonal,
    /// Forward diagonal starting at `(1, j)`.
    ForwardDiagonal(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Cell(i, j) => write!(f, "cell ({i},{j})"),
            Location::Row(i) => write!(f, "row {i}"),
            Location::Column(j) => write!(f, "column {j}"),
            Location::LeftDiagonal => f.write_str("left diagonal"),
            Location::RightDiagonal => f.write_str("right diagonal"),
            Location::ForwardDiagonal(j) => write!(f, "forward diagonal {j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub property: Property,
    pub detail: String,
    pub locations: Vec<Location>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has(&self, property: Property) -> bool {
        self.violations.iter().any(|v| v.property == property)
    }

    pub fn push(&mut self, property: Property, detail: impl Into<String>, locations: Vec<Location>) {
        self.violations.push(Violation { property, detail: detail.into(), locations });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid");
        }
        for v in &self.violations {
            write!(f, "[{}] {}", v.property, v.detail)?;
            if !v.locations.is_empty() {
                let locs: Vec<String> = v.locations.iter().map(ToString::to_string).collect();
                write!(f, " at {}", locs.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_density_arg(n: usize, d: usize) -> Result<()> {
    if d < 1 || d >= n {
        return Err(Error::Density { n, d, max: n.saturating_sub(1) });
    }
    Ok(())
}

/// Checks that the positive cells are exactly `lo..lo+count`, each once.
pub(crate) fn check_element_run(sq: &Square, lo: u64, count: u64, report: &mut VerificationReport) {
    let hi = lo + count - 1;
    let mut seen: BTreeMap<u64, Vec<Location>> = BTreeMap::new();
    let mut outside = Vec::new();
    for ((i, j), v) in sq.positive_cells() {
        if v < lo || v > hi {
            outside.push((v, Location::Cell(i, j)));
        } else {
            seen.entry(v).or_default().push(Location::Cell(i, j));
        }
    }
    for (v, loc) in outside {
        report.push(Property::ElementSet, format!("value {v} outside [{lo},{hi}]"), vec![loc]);
    }
    for (v, locs) in seen.iter().filter(|(_, l)| l.len() > 1) {
        report.push(Property::ElementSet, format!("value {v} occurs {} times", locs.len()), locs.clone());
    }
    let missing: Vec<u64> = (lo..=hi).filter(|v| !seen.contains_key(v)).collect();
    if !missing.is_empty() {
        report.push(
            Property::ElementSet,
            format!("{} value(s) of [{lo},{hi}] missing: {}", missing.len(), abbreviate(&missing)),
            vec![],
        );
    }
}

fn abbreviate(values: &[u64]) -> String {
    const SHOWN: usize = 8;
    let mut s: Vec<String> = values.iter().take(SHOWN).map(ToString::to_string).collect();
    if values.len() > SHOWN {
        s.push("...".into());
    }
    s.join(",")
}

fn line_locations(n: usize) -> Vec<Location> {
    (1..=n)
        .map(Location::Row)
        .chain((1..=n).map(Location::Column))
        .chain([Location::LeftDiagonal, Location::RightDiagonal])
        .collect()
}

pub(crate) fn check_density(density: &DensityProfile, d: usize, report: &mut VerificationReport) {
    let n = density.rows.len();
    for (count, loc) in density.lines().zip(line_locations(n)) {
        if count != d {
            report.push(Property::Density, format!("{count} positive entries, expected {d}"), vec![loc]);
        }
    }
}

fn check_consecutive(profile: &SumProfile, report: &mut VerificationReport) {
    let n = profile.row_sums.len();
    let mut by_sum: BTreeMap<u64, Vec<Location>> = BTreeMap::new();
    for (s, loc) in profile.lines().zip(line_locations(n)) {
        by_sum.entry(s).or_default().push(loc);
    }
    for (s, locs) in by_sum.iter().filter(|(_, l)| l.len() > 1) {
        report.push(Property::SumSet, format!("sum {s} repeated on {} lines", locs.len()), locs.clone());
    }
    let (min, max) = (profile.min(), profile.max());
    let span = max - min + 1;
    if span != (2 * n + 2) as u64 {
        report.push(
            Property::SumSet,
            format!("sums span [{min},{max}] ({span} values), expected {} consecutive", 2 * n + 2),
            vec![],
        );
    }
}

/// Verifies a regular SAMS(n,d): positive entries exactly `1..=nd`, the
/// `2n+2` line sums consecutive and distinct, and `d` positives per line.
pub fn verify_regular_sams(sq: &Square, d: usize) -> Result<VerificationReport> {
    let n = sq.order();
    check_density_arg(n, d)?;
    let mut report = VerificationReport::new();
    check_element_run(sq, 1, (n * d) as u64, &mut report);
    check_consecutive(&sq.sum_profile(), &mut report);
    check_density(&sq.density_profile(), d, &mut report);
    Ok(report)
}

/// Verifies a regular sparse magic square with entries `lo..lo+nd`: equal
/// line sums everywhere and `d` positives per line. `lo = 1` is the plain
/// SMS(n,d); larger `lo` covers shifted copies.
pub fn verify_regular_sms(sq: &Square, d: usize, lo: u64) -> Result<VerificationReport> {
    let n = sq.order();
    check_density_arg(n, d)?;
    if lo == 0 {
        return Err(Error::ZeroBase);
    }
    let mut report = VerificationReport::new();
    check_element_run(sq, lo, (n * d) as u64, &mut report);
    let profile = sq.sum_profile();
    if !profile.is_constant() {
        let target = profile.left_diag;
        let off: Vec<Location> =
            profile.lines().zip(line_locations(n)).filter(|(s, _)| *s != target).map(|(_, l)| l).collect();
        report.push(
            Property::ConstantSum,
            format!("line sums range over [{},{}]; left diagonal is {target}", profile.min(), profile.max()),
            off,
        );
    }
    check_density(&sq.density_profile(), d, &mut report);
    Ok(report)
}

/// Verifies that `sq` is a diagonal Latin square over `1..=n`.
pub fn verify_diagonal_latin(sq: &Square) -> VerificationReport {
    let n = sq.order();
    let mut report = VerificationReport::new();
    let is_perm = |vals: &mut dyn Iterator<Item = u64>| {
        let mut seen = vec![false; n + 1];
        let mut ok = true;
        for v in vals {
            ok &= (1..=n as u64).contains(&v) && !std::mem::replace(&mut seen[v as usize], true);
        }
        ok
    };
    for i in 1..=n {
        if !is_perm(&mut sq.row(i).iter().copied()) {
            report.push(Property::LatinLine, "row is not a permutation of 1..n", vec![Location::Row(i)]);
        }
        if !is_perm(&mut (1..=n).map(|r| sq.get(r, i))) {
            report.push(Property::LatinLine, "column is not a permutation of 1..n", vec![Location::Column(i)]);
        }
    }
    if !is_perm(&mut (1..=n).map(|i| sq.get(i, i))) {
        report.push(Property::Transversal, "left diagonal is not a transversal", vec![Location::LeftDiagonal]);
    }
    if !is_perm(&mut (1..=n).map(|i| sq.get(i, n + 1 - i))) {
        report.push(Property::Transversal, "right diagonal is not a transversal", vec![Location::RightDiagonal]);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn sams_5_2_is_valid() {
        let r = verify_regular_sams(&fixtures::sams_5_2(), 2).unwrap();
        assert!(r.is_valid(), "{r}");
    }

    #[test]
    fn swapping_1_and_6_breaks_the_sum_set() {
        // Row 1 becomes (6,1,0,0,0). Column 2 now sums to 10 like row 2, and
        // the left diagonal rises to 16 like row 4.
        let mut rows = fixtures::SAMS_5_2;
        rows[0].swap(0, 1);
        let sq = Square::from_rows(&rows).unwrap();
        let p = sq.sum_profile();
        assert_eq!(p.col_sums[..2], [11, 10]);
        assert_eq!(p.left_diag, 16);
        let r = verify_regular_sams(&sq, 2).unwrap();
        assert!(!r.is_valid());
        assert!(r.has(Property::SumSet));
        assert!(!r.has(Property::ElementSet));
        assert!(!r.has(Property::Density));
    }

    #[test]
    fn zero_square_fails_every_clause() {
        let r = verify_regular_sams(&Square::zeros(5).unwrap(), 2).unwrap();
        assert!(r.has(Property::ElementSet));
        assert!(r.has(Property::SumSet));
        assert!(r.has(Property::Density));
        assert!(!verify_regular_sms(&Square::zeros(5).unwrap(), 2, 1).unwrap().is_valid());
    }

    #[test]
    fn density_argument_is_a_domain_error() {
        let sq = fixtures::sams_5_2();
        assert!(matches!(verify_regular_sams(&sq, 5), Err(Error::Density { .. })));
        assert!(matches!(verify_regular_sams(&sq, 0), Err(Error::Density { .. })));
        assert!(matches!(verify_regular_sms(&sq, 2, 0), Err(Error::ZeroBase)));
    }

    #[test]
    fn latin_7_fixture_is_diagonal() {
        assert!(verify_diagonal_latin(&fixtures::latin_7()).is_valid());
        // The cyclic square of order 3 is Latin but its left diagonal is constant.
        let cyclic = Square::from_fn(3, |i, j| ((i + j) % 3 + 1) as u64).unwrap();
        let r = verify_diagonal_latin(&cyclic);
        assert!(r.has(Property::Transversal) && !r.has(Property::LatinLine));
    }

    #[test]
    fn report_display_lists_locations() {
        let mut r = VerificationReport::new();
        r.push(Property::Density, "1 positive entries, expected 2", vec![Location::Row(3)]);
        assert_eq!(r.to_string(), "[density] 1 positive entries, expected 2 at row 3\n");
    }
}
