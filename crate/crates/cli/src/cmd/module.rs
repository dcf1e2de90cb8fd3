use clap::{Args, Subcommand};
use gtorsion::alexmod::{
    module_spectrum_membership, restriction_report_with, tensor_alexander, ModuleSearchOutcome, RestrictionOptions,
};
use gtorsion::{IntActionModule, LaurentMatrix, ModulePresentation};
use num_bigint::BigInt;
use serde_json::json;

use super::poly_arg;
use crate::output::{set, CliError, Report};
use crate::Bounds;

#[derive(Debug, Args)]
pub struct ModuleArgs {
    #[command(subcommand)]
    source: Source,
}

#[derive(Debug, Subcommand)]
enum Source {
    /// Z^d with t acting by the companion matrix of a monic polynomial.
    Companion {
        poly: String,
        #[command(subcommand)]
        action: Action,
    },
    /// Presentation matrix file: one row per line, entries separated by ';'.
    Matrix {
        path: String,
        #[command(subcommand)]
        action: Action,
    },
}

#[derive(Debug, Subcommand)]
enum Action {
    /// Per-factor spectrum constraints of Δ_0 of the torsion part.
    Report {
        /// Also certify members for each factor.
        #[arg(long)]
        certify: bool,
    },
    /// Search for a positive f with f·m = 0 and ε(f) = n.
    Member {
        /// Comma-separated integer vector.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        vec: Vec<i64>,
        #[arg(long)]
        n: u64,
    },
    /// Elementary ideal generator Δ_k, rank and Δ of the torsion part.
    Alexander {
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Δ_0 of the m-th tensor power (companion modules only).
    Tensor {
        #[arg(long)]
        m: u32,
    },
}

pub fn run(args: &ModuleArgs, b: &Bounds) -> Result<Report, CliError> {
    let (presentation, module, action) = match &args.source {
        Source::Companion { poly, action } => {
            let h = poly_arg(poly)?;
            let m = IntActionModule::companion(&h).map_err(CliError::input)?;
            (m.presentation(), Some(m), action)
        }
        Source::Matrix { path, action } => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
            let m: LaurentMatrix = text.parse().map_err(CliError::input)?;
            (ModulePresentation::new(m), None, action)
        }
    };
    match action {
        Action::Report { certify } => report(&presentation, b, *certify),
        Action::Member { vec, n } => {
            let m = module.ok_or_else(|| CliError::Input("membership needs a companion module".into()))?;
            let elem = m.element(vec.iter().map(|&x| BigInt::from(x)).collect()).map_err(CliError::input)?;
            let deg_bound = b.deg_bound.unwrap_or_else(|| gtorsion::config::default_deg_bound(m.dimension()));
            if *n == 0 {
                return Err(CliError::Input("n must be positive".into()));
            }
            let out = module_spectrum_membership(&elem, *n, deg_bound).map_err(CliError::input)?;
            Ok(match &out {
                ModuleSearchOutcome::Found(c) => Report::new(
                    format!("f = {} annihilates m, ε(f) = {n}\n", c.f),
                    &json!({ "n": n, "found": true, "certificate": c.f }),
                ),
                ModuleSearchOutcome::NotFoundWithinBound => Report::new(
                    format!("no annihilating positive f with ε(f) = {n} up to degree {deg_bound}\n"),
                    &json!({ "n": n, "found": false, "deg_bound": deg_bound }),
                ),
            })
        }
        Action::Alexander { k } => {
            let dk = presentation.elementary_ideal_gcd(*k).map_err(CliError::input)?;
            let torsion = presentation.alexander_of_torsion().map_err(CliError::input)?;
            let rank = presentation.rank();
            Ok(Report::new(
                format!("Δ_{k} = {dk}\nrank = {rank}\nΔ_0(TM) = {torsion}\n"),
                &json!({ "k": k, "delta_k": dk, "rank": rank, "torsion_alexander": torsion }),
            ))
        }
        Action::Tensor { m } => {
            let module = module.ok_or_else(|| CliError::Input("tensor powers need a companion module".into()))?;
            let t = tensor_alexander(&module.action, *m).map_err(CliError::input)?;
            Ok(Report::new(format!("{t}\n"), &json!({ "m": m, "alexander": t })))
        }
    }
}

fn report(p: &ModulePresentation, b: &Bounds, certify: bool) -> Result<Report, CliError> {
    let opts = RestrictionOptions { window: b.window, deg_bound: b.deg_bound, k_max: b.k_max, certify };
    let r = match restriction_report_with(p, opts) {
        Ok(r) => r,
        Err(gtorsion::AlexError::ZeroAlexander) => {
            return Err(CliError::Refused { code: "ZERO_ALEXANDER", message: "Δ_0 of the torsion part is zero".into() })
        }
        Err(e) => return Err(CliError::input(e)),
    };
    let mut text = format!("Δ_0(TM) = {}\n", r.alexander);
    for f in &r.factors {
        let ex: Vec<u64> = f.excluded.iter().map(|e| e.n).collect();
        let mult = if f.multiplicity > 1 { format!("^{}", f.multiplicity) } else { String::new() };
        text.push_str(&format!("  factor ({}){mult}: excluded {}", f.factor, set(&ex)));
        if certify {
            text.push_str(&format!(", members {}", set(&f.members)));
        }
        text.push('\n');
    }
    text.push_str(&format!("universal exclusion in 1..={}: {}\n", r.window, set(&r.universal_exclusion)));
    for n in &r.notes {
        text.push_str(&format!("note: {n}\n"));
    }
    Ok(Report::new(text, &r))
}
