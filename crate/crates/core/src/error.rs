use thiserror::Error;

use crate::verify::VerificationReport;

/// Errors raised by constructions and verifiers when their inputs fall
/// outside the supported domain.
///
/// Verification *failures* are not errors; they are reported through
/// [`VerificationReport`]. The one exception is [`Error::SelfCheckFailed`],
/// raised when a construction produced a square its own verifier rejects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    EmptyOrder,

    #[error("expected {expected} cells for order {n}, got {actual}")]
    CellCount { n: usize, expected: usize, actual: usize },

    #[error("row {row} has {actual} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, actual: usize },

    #[error("cell ({row}, {col}) holds {value}, above the supported bound {bound}")]
    CellTooLarge { row: usize, col: usize, value: u64, bound: u64 },

    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(i64),

    #[error("density {d} is outside [1, {max}] for order {n}")]
    Density { n: usize, d: usize, max: usize },

    #[error("order {n} is not supported here: {reason}")]
    Order { n: usize, reason: &'static str },

    #[error("invalid array shape: {0}")]
    Shape(String),

    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("supports overlap at {} cell(s), first at {:?}", .0.len(), .0.first())]
    Incompatible(Vec<(usize, usize)>),

    #[error("base value must be at least 1")]
    ZeroBase,

    #[error("invalid search configuration: {0}")]
    SearchConfig(&'static str),

    #[error("construction for n={n}, d={d} failed its own verification:\n{report}")]
    SelfCheckFailed { n: usize, d: usize, report: VerificationReport },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
