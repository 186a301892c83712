//! Constructions, verifiers and a search oracle for regular sparse anti-magic
//! squares of order `n = 1, 5 (mod 6)`.
//!
//! A *sparse anti-magic square* SAMS(n,d) is an `n x n` array over
//! `{0, 1, ..., nd}` using each of `1..=nd` exactly once, whose `n` row sums,
//! `n` column sums and two main-diagonal sums form `2n+2` consecutive
//! integers. It is *regular* when every row, column and main diagonal holds
//! exactly `d` positive entries.
//!
//! [`generate`] dispatches to the density-2 and density-4 direct
//! constructions and to the composition of an embedded sparse magic square
//! with a density-2 square. Every square it returns has passed
//! [`verify_regular_sams`]. The [`search`] module is an independent
//! backtracking oracle for small orders.
//!
//! Coordinates are 1-based `(row, col)` throughout the public API.

pub mod compose;
pub mod density2;
pub mod density4;
pub mod error;
pub mod fixtures;
pub mod kotzig;
pub mod latin;
pub mod par;
pub mod search;
pub mod square;
pub mod sweep;
pub mod verify;

pub use compose::{
    compose, compose_shift_sams, generate, generate_with, shift_nonzero, sms_embed, GenerateOptions, GenerationOutcome,
    Provenance, Refusal, RefusalKind,
};
pub use density2::{build_w, repair_wstar, sams_d2, seed_pair};
pub use density4::{sams_d4, seed_quad};
pub use error::{Error, Result};
pub use kotzig::{kotzig, kotzig_base, kotzig_f, sfd, verify_kotzig, verify_sfd, Alpha, RectArray};
pub use latin::{bracket, build_b, f_inv, g_shift, is_admissible_order, DiagonalLatinSquare};
pub use par::Execution;
pub use search::{cross_check, search, CrossCheck, SearchConfig, SearchMode, SearchOutcome, Verdict};
pub use square::{compatible, density_profile, sum_profile, support, DensityProfile, Square, SumProfile};
pub use sweep::{sweep, SweepRow, SweepStatus};
pub use verify::{verify_regular_sams, verify_regular_sms, Location, Property, VerificationReport, Violation};
