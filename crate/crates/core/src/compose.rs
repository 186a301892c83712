//! Regular sparse magic squares by SFD embedding, composition with a
//! density-2 square, and the top-level [`generate`] dispatch.

use std::fmt;

use crate::density2::sams_d2;
use crate::density4::sams_d4;
use crate::error::{Error, Result};
use crate::kotzig::sfd;
use crate::latin::{check_admissible, f_inv, is_admissible_order, wrap};
use crate::search::{search, SearchConfig, Verdict};
use crate::square::{support_overlap, Square};
use crate::verify::verify_regular_sams;

/// Latin symbol slot used by SFD row `i` (1-based) of a `t`-row array.
///
/// Odd `t`: the identity. Even `t = 2e`: rows past `e` skip one slot, so the
/// middle symbol `m+1` is never used.
pub fn embed_row_slots(t: usize) -> Vec<usize> {
    let e = t / 2;
    (1..=t).map(|i| if t.is_multiple_of(2) && i > e { i + 1 } else { i }).collect()
}

/// Latin symbols `<2i'-2e-1+m>_n` carrying the embedded rows, in row order.
pub fn embed_symbols(n: usize, t: usize) -> Vec<usize> {
    let m = (n - 1) / 2;
    let e = t / 2;
    embed_row_slots(t).into_iter().map(|slot| wrap((2 * slot + m) as i64 - 2 * e as i64 - 1, n)).collect()
}

/// Symbols of `B` that may carry the density-2 square.
pub fn density2_symbols(n: usize) -> [usize; 4] {
    let m = (n - 1) / 2;
    [m - 2, m, m + 2, m + 4]
}

/// Regular SMS(n,t) over `{0} + [1, nt]`, built by placing SFD(t,n) entry
/// `(i, j)` into column `<2j+m>_n` at the row where `B` holds the symbol of
/// embedded row `i`. Every line sums to `(1+nt)t/2`.
///
/// Requires admissible `n >= 11` and `4 <= t <= n-5`. The support avoids
/// every cell where `B` holds `m-2`, `m`, `m+2` or `m+4`.
pub fn sms_embed(n: usize, t: usize) -> Result<Square> {
    check_admissible(n, 11)?;
    if t < 4 || t + 5 > n {
        return Err(Error::Density { n, d: t, max: n - 5 });
    }
    let m = (n - 1) / 2;
    let symbols = embed_symbols(n, t);
    let reserved = density2_symbols(n);
    assert!(t / 2 + 2 <= m, "embedding needs e <= m-2");
    assert!(
        symbols.iter().all(|s| !reserved.contains(s)),
        "embedded symbols {symbols:?} meet the density-2 symbols {reserved:?}"
    );
    let c = sfd(t, n, 0)?;
    let mut sq = Square::zeros(n)?;
    for (i, &sym) in symbols.iter().enumerate() {
        for j in 1..=n {
            let col = wrap((2 * j + m) as i64, n);
            sq.set(f_inv(n, sym, col), col, c.get(i + 1, j));
        }
    }
    Ok(sq)
}

/// Adds `delta` to every positive cell; zeros stay zero.
pub fn shift_nonzero(sq: &Square, delta: u64) -> Square {
    let cells = sq.cells().iter().map(|&v| if v > 0 { v + delta } else { 0 }).collect();
    Square::from_cells(sq.order(), cells).expect("shift keeps the shape")
}

fn density_of(sq: &Square) -> Result<usize> {
    let n = sq.order();
    let count = sq.positive_cells().count();
    if count == 0 || !count.is_multiple_of(n) {
        return Err(Error::Shape(format!("{count} positive cells is not a multiple of n = {n}")));
    }
    Ok(count / n)
}

fn check_pair(m: &Square, other: &Square) -> Result<(usize, usize)> {
    let overlap = support_overlap(m, other)?;
    if !overlap.is_empty() {
        return Err(Error::Incompatible(overlap));
    }
    Ok((density_of(m)?, density_of(other)?))
}

/// Combines a regular SMS(n,d1) `magic` with a compatible SAMS(n,d2)
/// `anti`: the magic square's entries are raised by `n*d2` and the two
/// are added. The result is a SAMS(n,d1+d2) whose sum set is that of `anti`
/// translated by the raised magic constant.
///
/// Overlapping supports are an error, never summed.
pub fn compose(magic: &Square, anti: &Square) -> Result<Square> {
    let (_, d2) = check_pair(magic, anti)?;
    let n = magic.order();
    Ok(&shift_nonzero(magic, (n * d2) as u64) + anti)
}

/// The mirrored composition: the anti-magic square's entries are raised by
/// `n*d1` instead, leaving the magic square's values at the bottom.
pub fn compose_shift_sams(magic: &Square, anti: &Square) -> Result<Square> {
    let (d1, _) = check_pair(magic, anti)?;
    let n = magic.order();
    Ok(magic + &shift_nonzero(anti, (n * d1) as u64))
}

/// Which construction produced a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Density-2 placement (with the column repair when `n = 5 mod 6`).
    Density2,
    /// Density-4 direct placement.
    Density4,
    /// Embedded SMS(n,t) composed with the density-2 square.
    Compose { t: usize },
    /// A stored grid.
    Hardcoded,
    /// Found by the backtracking search.
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Density2 => f.write_str("density2"),
            Provenance::Density4 => f.write_str("density4"),
            Provenance::Compose { t } => write!(f, "compose(t={t})"),
            Provenance::Hardcoded => f.write_str("hardcoded"),
            Provenance::Oracle => f.write_str("oracle"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefusalKind {
    /// No regular SAMS exists for these parameters.
    Nonexistent,
    /// One exists, but its construction is not implemented here.
    ExternalConstruction,
    /// Parameters outside what this library addresses.
    OutOfDomain,
}

impl RefusalKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RefusalKind::Nonexistent => "nonexistent",
            RefusalKind::ExternalConstruction => "external_construction",
            RefusalKind::OutOfDomain => "out_of_domain",
        }
    }
}

impl fmt::Display for RefusalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refusal {
    pub kind: RefusalKind,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenerationOutcome {
    Constructed { square: Square, provenance: Provenance },
    Refused(Refusal),
}

impl GenerationOutcome {
    pub fn square(&self) -> Option<&Square> {
        match self {
            GenerationOutcome::Constructed { square, .. } => Some(square),
            GenerationOutcome::Refused(_) => None,
        }
    }

    pub fn refusal(&self) -> Option<&Refusal> {
        match self {
            GenerationOutcome::Refused(r) => Some(r),
            GenerationOutcome::Constructed { .. } => None,
        }
    }

    fn refused(kind: RefusalKind, reason: impl Into<String>) -> Self {
        GenerationOutcome::Refused(Refusal { kind, reason: reason.into() })
    }
}

#[derive(Debug, Clone, Default)]
pub struct GenerateOptions {
    /// When set, densities whose construction is external are attempted by
    /// the search oracle under this configuration.
    pub oracle_fallback: Option<SearchConfig>,
}

/// Builds a regular SAMS(n,d) or explains why not. Equivalent to
/// [`generate_with`] with default options.
pub fn generate(n: usize, d: usize) -> Result<GenerationOutcome> {
    generate_with(n, d, &GenerateOptions::default())
}

/// Dispatch over `d`:
///
/// | `d`            | result                                       |
/// |----------------|----------------------------------------------|
/// | `1`            | refused, nonexistent                         |
/// | `2`            | density-2 construction                       |
/// | `4`, `n >= 7`  | density-4 construction                       |
/// | `6..=n-3`      | `compose(sms_embed(n, d-2), sams_d2(n))`     |
/// | `3, 5, n-2, n-1` | refused as external (or oracle, if enabled) |
///
/// `d >= n`, `d = 0` and orders outside `1, 5 (mod 6)` are out of domain.
/// A constructed square is always re-verified; a failure is returned as
/// [`Error::SelfCheckFailed`].
pub fn generate_with(n: usize, d: usize, opts: &GenerateOptions) -> Result<GenerationOutcome> {
    use RefusalKind::*;
    if d == 0 || d >= n {
        return Ok(GenerationOutcome::refused(OutOfDomain, format!("density {d} must satisfy 1 <= d < n = {n}")));
    }
    if d == 1 {
        return Ok(GenerationOutcome::refused(
            Nonexistent,
            "a regular SAMS(n,1) never exists: its row sums and column sums are the same n values",
        ));
    }
    if !is_admissible_order(n) {
        return Ok(GenerationOutcome::refused(OutOfDomain, format!("order {n} is not 1 or 5 mod 6 with n >= 5")));
    }
    let (square, provenance) = match d {
        2 if n == 5 => (sams_d2(n)?, Provenance::Hardcoded),
        2 => (sams_d2(n)?, Provenance::Density2),
        4 if n >= 7 => (sams_d4(n)?, Provenance::Density4),
        d if (6..=n - 3).contains(&d) => {
            let magic = sms_embed(n, d - 2)?;
            (compose(&magic, &sams_d2(n)?)?, Provenance::Compose { t: d - 2 })
        }
        d => return Ok(external(n, d, opts)),
    };
    let report = verify_regular_sams(&square, d)?;
    if !report.is_valid() {
        return Err(Error::SelfCheckFailed { n, d, report });
    }
    Ok(GenerationOutcome::Constructed { square, provenance })
}

fn external(n: usize, d: usize, opts: &GenerateOptions) -> GenerationOutcome {
    let which = if d == n - 1 {
        "d = n-1: regular SAMS(n,n-1) exists for every n >= 4 by a separate construction"
    } else if d == n - 2 {
        "d = n-2: regular SAMS(n,n-2) exists for every n >= 4 by a separate construction"
    } else {
        "d in {3,5}: regular SAMS(n,d) exists for every n >= d by a separate construction"
    };
    if let Some(cfg) = &opts.oracle_fallback {
        match search(n, d, cfg) {
            Ok(out) if out.verdict == Verdict::Found => {
                let square = out.witness.expect("found implies witness");
                return GenerationOutcome::Constructed { square, provenance: Provenance::Oracle };
            }
            Ok(out) => {
                return GenerationOutcome::refused(
                    RefusalKind::ExternalConstruction,
                    format!("{which}; oracle fallback ended with {}", out.verdict),
                )
            }
            Err(e) => {
                return GenerationOutcome::refused(
                    RefusalKind::ExternalConstruction,
                    format!("{which}; oracle fallback rejected: {e}"),
                )
            }
        }
    }
    GenerationOutcome::refused(RefusalKind::ExternalConstruction, which)
}
