//! Exclusions and membership certificates for `t(h)`, the set of
//! augmentations of positive multiples of `h`.

mod constraint;
mod obstruction;
mod search;
mod window;

pub use constraint::{Obstruction, Reason, SpectrumConstraint};
pub use obstruction::{
    all_obstructions, basic_obstructions, divides_one_plus_power, excluded_set, mahler_obstruction, nonempty_test,
    prime_power_obstruction, Exclusions,
};
pub use search::{find_certificate, find_certificate_with, MembershipCertificate, SearchOptions, SearchOutcome};
pub use window::{
    cyclotomic_closed_form, spectrum_window, spectrum_window_with, SpectrumStatus, SpectrumWindowReport,
    WindowEntry, WindowOptions,
};

use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("search state budget exceeded after {states} states")]
    StateBudgetExceeded { states: usize },
    #[error("zero polynomial not allowed here")]
    ZeroInput,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
