pub mod group;
pub mod knot;
pub mod module;
pub mod poly;
pub mod spectrum;

use gtorsion::{parse_poly, IntLaurentPoly};

use crate::output::CliError;

pub fn poly_arg(s: &str) -> Result<IntLaurentPoly, CliError> {
    parse_poly(s).map_err(|e| CliError::Input(format!("{s:?}: {e}")))
}
