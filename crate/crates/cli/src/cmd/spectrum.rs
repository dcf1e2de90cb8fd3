use clap::{Args, Subcommand};
use gtorsion::config::{default_deg_bound, max_states};
use gtorsion::polyring::factor;
use gtorsion::spectrum::{
    excluded_set, find_certificate_with, spectrum_window_with, SearchOptions, SearchOutcome, SpectrumStatus,
    WindowOptions,
};
use gtorsion::IntLaurentPoly;
use serde_json::json;

use super::poly_arg;
use crate::output::{set, CliError, Report};
use crate::Bounds;

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(subcommand)]
    op: SpectrumOp,
}

#[derive(Debug, Subcommand)]
enum SpectrumOp {
    /// Classify every n in 1..=N as member, excluded or unknown.
    Window { poly: String },
    /// Obstructions only.
    Excluded { poly: String },
    /// Search for a certificate that n lies in t(h).
    Certificate { poly: String, n: u64 },
}

fn require_irreducible(h: &IntLaurentPoly) -> Result<(), CliError> {
    if h.is_zero() {
        return Err(CliError::Input("zero polynomial".into()));
    }
    if h.span() == 0 {
        return Ok(());
    }
    let f = factor(h).map_err(CliError::input)?;
    if !f.is_irreducible() {
        return Err(CliError::Refused {
            code: "REDUCIBLE_INPUT",
            message: format!(
                "{h} is reducible ({} distinct factors); use `module companion \"{h}\" report` for per-factor analysis",
                f.factors.len()
            ),
        });
    }
    Ok(())
}

pub fn run(args: &SpectrumArgs, b: &Bounds) -> Result<Report, CliError> {
    match &args.op {
        SpectrumOp::Window { poly } => {
            let h = poly_arg(poly)?;
            require_irreducible(&h)?;
            let opts = WindowOptions {
                window: b.window,
                deg_bound: b.deg_bound.unwrap_or_else(|| default_deg_bound(h.span())),
                k_max: b.k_max,
                max_states: max_states(),
            };
            let r = spectrum_window_with(&h, opts);
            let mut text = format!("h = {}\nwindow 1..={}\n", r.h, r.window);
            text.push_str(&format!("members: {}\n", set(&r.members())));
            text.push_str(&format!("excluded: {}\n", set(&r.excluded())));
            if !r.unknown().is_empty() {
                text.push_str(&format!("unknown: {}\n", set(&r.unknown())));
            }
            for e in &r.entries {
                match &e.status {
                    SpectrumStatus::Member(c) => text.push_str(&format!("  {:>3} member: {} = ({}) * ({})\n", e.n, c.product, c.h, c.cofactor)),
                    SpectrumStatus::Excluded(rs) => {
                        let codes: Vec<String> = rs.iter().map(|r| r.code()).collect();
                        text.push_str(&format!("  {:>3} excluded: {}\n", e.n, codes.join(", ")))
                    }
                    SpectrumStatus::Unknown(note) => text.push_str(&format!("  {:>3} unknown: {note}\n", e.n)),
                }
            }
            for n in &r.notes {
                text.push_str(&format!("note: {n}\n"));
            }
            Ok(Report::new(text, &r))
        }
        SpectrumOp::Excluded { poly } => {
            let h = poly_arg(poly)?;
            require_irreducible(&h)?;
            let ex = excluded_set(&h, b.window, b.k_max);
            let mut text = format!("excluded: {}\n", set(&ex.excluded_values()));
            for o in &ex.obstructions {
                text.push_str(&format!("  {}: {} ({})\n", o.reason.code(), o.constraint, o.reason.detail()));
            }
            Ok(Report::new(text, &ex))
        }
        SpectrumOp::Certificate { poly, n } => {
            let h = poly_arg(poly)?;
            if *n == 0 {
                return Err(CliError::Input("n must be positive".into()));
            }
            let opts = SearchOptions {
                deg_bound: b.deg_bound.unwrap_or_else(|| default_deg_bound(h.span())),
                max_states: max_states(),
            };
            let out = find_certificate_with(&h, *n, opts).map_err(CliError::input)?;
            Ok(match out {
                SearchOutcome::Found(c) => Report::new(
                    format!("{} = ({}) * ({})\n", c.product, c.h, c.cofactor),
                    &json!({ "n": n, "found": true, "certificate": c }),
                ),
                SearchOutcome::NotFoundWithinBound => Report::new(
                    format!("no certificate for n = {n} within degree {}\n", opts.deg_bound),
                    &json!({ "n": n, "found": false, "deg_bound": opts.deg_bound }),
                ),
            })
        }
    }
}
