//! Knot invariants and screening of generalized torsion orders in knot groups.

mod ingest;
mod invariants;
mod record;
mod report;

pub use ingest::{batch_screen, read_knot_csv, screen_csv, BatchEntry};
pub use invariants::{
    branched_cover_order, cyclic_divisibility, cyclic_divisibility_test, determinant, homologically_fibered_check,
    seifert_to_alexander, torus_alexander, CoverOrder, CyclicDivisibility, FiberedStatus,
};
pub use record::KnotRecord;
pub use report::{
    knot_obstruction_report, AppliedResult, CoverEntry, KnotObstructionReport, KnotReportOptions, KnotVerdict, Scope,
    ScopedExclusion,
};

use crate::alexmod::AlexError;
use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnotError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Alex(#[from] AlexError),
    #[error("torus knot parameters ({p}, {q}) are not coprime")]
    NotCoprime { p: u64, q: u64 },
    #[error("{name}: not an Alexander polynomial of a knot: {message}")]
    InvalidAlexander { name: String, message: String },
    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifertMatrix(String),
    #[error("{name}: Seifert matrix gives {from_seifert}, record has {given}")]
    SeifertMismatch { name: String, from_seifert: String, given: String },
    #[error("genus is required for this check")]
    MissingGenus,
    #[error("row {row}: {message}")]
    Csv { row: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
