//! Modules over `Z[t^±1]`: presentations, elementary ideals, integer actions
//! of `t` and per-factor spectrum reports.

mod action;
pub(crate) mod linalg;
mod presentation;
mod report;

pub use action::{
    companion, kronecker_power, module_spectrum_membership, module_spectrum_membership_with, tensor_alexander,
    IntActionModule, IntMatrix, ModuleCertificate, ModuleElement, ModuleSearchOutcome,
};
pub use presentation::{LaurentMatrix, ModulePresentation};
pub use report::{
    restriction_report, restriction_report_for_polynomial, restriction_report_with, ExcludedValue, FactorReport,
    RestrictionOptions, RestrictionReport,
};

use crate::polyring::PolyError;
use crate::spectrum::SpectrumError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlexError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix parse error: {0}")]
    Parse(String),
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant is zero")]
    ZeroDeterminant,
    #[error("exact division failed")]
    DivisionFailure,
    #[error("{generators} generators exceeds the minor enumeration cap of {cap}")]
    TooManyGenerators { generators: usize, cap: usize },
    #[error("polynomial must be monic with positive degree")]
    NotMonic,
    #[error("tensor power {base}^{power} exceeds dimension cap {cap}")]
    DimensionOverflow { base: usize, power: u32, cap: usize },
    #[error("Alexander polynomial of the torsion part is zero")]
    ZeroAlexander,
    #[error("search state budget exceeded after {states} states")]
    StateBudgetExceeded { states: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
