//! Explicit finite groups and exact spectra `t(g)` computed from products of
//! conjugacy classes.

mod group;
mod hom;
mod input;
pub mod perm;
mod window;

pub use group::{ConjugacyClasses, Elem, FiniteGroup};
pub use hom::{monotonicity_check, Homomorphism};
pub use input::{corpus, group_from_json, GroupSpec};
pub use window::{gord2_characterization_check, p_group_check, t_window, Gord2Triple, SpectrumWindow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("unknown element '{0}'")]
    UnknownElement(String),
    #[error("group JSON: {0}")]
    Json(String),
}
