use std::fs::File;

use clap::Args;
use gtorsion::knots::{
    branched_cover_order, knot_obstruction_report, screen_csv, BatchEntry, CoverOrder, KnotObstructionReport,
    KnotReportOptions, Scope,
};
use gtorsion::KnotRecord;
use serde_json::json;

use super::poly_arg;
use crate::output::{set, CliError, Report};
use crate::Bounds;

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["torus", "alex", "csv"])))]
pub struct KnotArgs {
    /// Torus knot T(p, q).
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    torus: Option<Vec<u64>>,
    /// Alexander polynomial.
    #[arg(long)]
    alex: Option<String>,
    /// CSV table: name, alexander, genus, fibered, seifert_dim, seifert.
    #[arg(long)]
    csv: Option<String>,
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    genus: Option<u32>,
    /// The knot is fibered.
    #[arg(long)]
    fibered: bool,
    /// Assert that the commutator subgroup is residually torsion-free nilpotent.
    #[arg(long)]
    assume_rtfn: bool,
    /// Only print |H_1| of the k-fold branched cover.
    #[arg(long)]
    cover: Option<u64>,
    /// Largest prime-power cover screened in the report.
    #[arg(long, default_value_t = gtorsion::config::DEFAULT_COVER_MAX)]
    cover_max: u64,
}

fn report_text(r: &KnotObstructionReport) -> String {
    let mut t = format!("{}: Δ = {}\n", r.name, r.alexander);
    let irr = match r.irreducible {
        Some(true) => "irreducible",
        Some(false) => "reducible",
        None => "unknown",
    };
    t.push_str(&format!("  Δ {irr}, det = {}\n", r.determinant));
    if let Some(c) = &r.cyclic {
        t.push_str(&format!("  Δ divides t^{} - 1\n", c.k));
    }
    for a in &r.applied {
        t.push_str(&format!("  [{}] {} ({})\n", a.code, a.statement, a.scope_note));
    }
    if let Some(c) = &r.universal_constraint {
        if let Some((&(p, 0), Some(q))) = c.allowed_moduli.iter().next().map(|m| (m, c.threshold)) {
            t.push_str(&format!("  t(g) ⊂ {p}ℕ ∪ ℕ≥{q} for all g\n"));
        }
    }
    t.push_str(&format!("  excluded in 1..={}: {}\n", r.window, set(&r.excluded())));
    t.push_str(&format!("    for all g: {}\n", set(&r.excluded_in_scope(Scope::AllElements))));
    t.push_str(&format!("    for g outside G'': {}\n", set(&r.excluded_in_scope(Scope::OutsideSecondDerived))));
    for v in r.verdicts.iter().filter(|v| v.excluded) {
        let codes: Vec<&str> = v.exclusions.iter().map(|e| e.code.as_str()).collect();
        t.push_str(&format!("    {:>3}: {}\n", v.n, codes.join(", ")));
    }
    if r.torsion_in_metabelian_quotient {
        t.push_str("  Δ has no positive real root: G/G'' has a generalized torsion element\n");
    }
    for n in &r.notes {
        t.push_str(&format!("  note: {n}\n"));
    }
    t
}

pub fn run(args: &KnotArgs, b: &Bounds) -> Result<Report, CliError> {
    let opts = KnotReportOptions { window: b.window, k_max: b.k_max, cover_max: args.cover_max, assume_rtfn: args.assume_rtfn };
    if let Some(path) = &args.csv {
        let file = File::open(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        let entries = screen_csv(file, &opts);
        let mut text = String::new();
        for e in &entries {
            match e {
                BatchEntry::Report(r) => text.push_str(&report_text(r)),
                BatchEntry::Error { row, message } => text.push_str(&format!("row {row}: error: {message}\n")),
            }
        }
        return Ok(Report::new(text, &entries));
    }
    let mut knot = if let Some(pq) = &args.torus {
        KnotRecord::torus(pq[0], pq[1]).map_err(CliError::input)?
    } else {
        let alex = args.alex.as_deref().expect("clap enforces a source");
        KnotRecord::new(args.name.clone().unwrap_or_else(|| "K".into()), poly_arg(alex)?).map_err(CliError::input)?
    };
    if let Some(n) = &args.name {
        knot.name = n.clone();
    }
    if let Some(g) = args.genus {
        knot.genus = Some(g);
    }
    if args.fibered {
        knot.fibered = Some(true);
    }
    if let Some(k) = args.cover {
        let order = branched_cover_order(&knot, k).map_err(CliError::input)?;
        let text = match &order {
            CoverOrder::Order { order } => format!("|H_1(Σ_{k})| = {order}\n"),
            CoverOrder::NotQhs { d } => format!("Σ_{k} is not a rational homology sphere (Φ_{d} divides Δ)\n"),
        };
        return Ok(Report::new(text, &json!({ "knot": knot.name, "k": k, "cover": order })));
    }
    let r = knot_obstruction_report(&knot, &opts);
    Ok(Report::new(report_text(&r), &r))
}
