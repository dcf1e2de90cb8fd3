use clap::{Args, Subcommand};
use gtorsion::polyring::{
    count_positive_roots, cyclotomic, factor, mahler_measure, resultant, resultant_with_cyclotomic, Factorization,
};
use serde_json::json;

use super::poly_arg;
use crate::output::{CliError, Report};
use crate::Bounds;

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[command(subcommand)]
    op: PolyOp,
}

#[derive(Debug, Subcommand)]
enum PolyOp {
    /// Irreducible factorization over the integers.
    Factor { poly: String },
    /// The k-th cyclotomic polynomial.
    Cyclotomic { k: u64 },
    /// Resultant of two polynomials.
    Resultant { f: String, g: String },
    /// R_k(h) = |Res(h, Φ_k)|.
    CyclotomicResultant { poly: String, k: u64 },
    /// Mahler measure.
    Mahler { poly: String },
    /// Number of positive real roots (Sturm).
    PositiveRoots { poly: String },
}

fn factor_text(f: &Factorization) -> String {
    let mut parts = Vec::new();
    if f.unit_sign < 0 {
        parts.push("-1".to_string());
    }
    if !num_bigint::BigInt::from(1).eq(&f.content) {
        parts.push(f.content.to_string());
    }
    if f.monomial_shift != 0 {
        parts.push(format!("t^{}", f.monomial_shift));
    }
    for (p, m) in &f.factors {
        parts.push(if *m == 1 { format!("({p})") } else { format!("({p})^{m}") });
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

pub fn run(args: &PolyArgs, bounds: &Bounds) -> Result<Report, CliError> {
    Ok(match &args.op {
        PolyOp::Factor { poly } => {
            let h = poly_arg(poly)?;
            let f = factor(&h).map_err(CliError::input)?;
            let text = format!("{h} = {}\n{} irreducible factor(s)\n", factor_text(&f), f.factors.len());
            Report::new(text, &json!({ "input": h, "factorization": f }))
        }
        PolyOp::Cyclotomic { k } => {
            if *k == 0 {
                return Err(CliError::Input("cyclotomic index must be positive".into()));
            }
            let c = cyclotomic(*k);
            Report::new(format!("{c}\n"), &json!({ "k": k, "polynomial": c }))
        }
        PolyOp::Resultant { f, g } => {
            let (a, b) = (poly_arg(f)?, poly_arg(g)?);
            let r = resultant(&a, &b).map_err(CliError::input)?;
            Report::new(format!("{r}\n"), &json!({ "f": a, "g": b, "resultant": r.to_string() }))
        }
        PolyOp::CyclotomicResultant { poly, k } => {
            let h = poly_arg(poly)?;
            let r = resultant_with_cyclotomic(&h, *k).map_err(CliError::input)?;
            Report::new(format!("{r}\n"), &json!({ "h": h, "k": k, "value": r.to_string() }))
        }
        PolyOp::Mahler { poly } => {
            let h = poly_arg(poly)?;
            let m = mahler_measure(&h, bounds.tol).map_err(CliError::input)?;
            Report::new(format!("{m:.9}\n"), &json!({ "h": h, "mahler_measure": m }))
        }
        PolyOp::PositiveRoots { poly } => {
            let h = poly_arg(poly)?;
            let n = count_positive_roots(&h).map_err(CliError::input)?;
            Report::new(format!("{n}\n"), &json!({ "h": h, "positive_roots": n }))
        }
    })
}
