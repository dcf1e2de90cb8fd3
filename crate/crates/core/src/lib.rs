//! Obstructions to generalized torsion orders: polynomial spectra, cyclotomic
//! resultants, Alexander modules, knot screening and a finite-group oracle.

pub mod alexmod;
pub mod config;
pub mod groups;
pub mod knots;
pub mod polyring;
pub mod spectrum;

pub use alexmod::{AlexError, IntActionModule, IntMatrix, LaurentMatrix, ModulePresentation};
pub use groups::{FiniteGroup, GroupError};
pub use knots::{KnotError, KnotRecord};
pub use polyring::{cyclotomic, factor, parse_poly, resultant, resultant_with_cyclotomic, IntLaurentPoly, PolyError};
pub use spectrum::{excluded_set, spectrum_window, SpectrumError, SpectrumWindowReport};
