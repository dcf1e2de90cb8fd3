use clap::{Args, Subcommand};
use gtorsion::groups::{gord2_characterization_check, group_from_json, p_group_check, t_window};
use gtorsion::FiniteGroup;
use serde_json::json;

use crate::output::{set, CliError, Report};
use crate::Bounds;

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[command(subcommand)]
    source: Source,
}

#[derive(Debug, Subcommand)]
enum Source {
    /// <a, b | a^m, b^s, b a b^-1 = a^-1>.
    Metacyclic {
        m: usize,
        s: usize,
        #[command(subcommand)]
        action: Action,
    },
    /// Permutation generators in cycle notation, separated by ';'. Generators are named g0, g1, ...
    Perm {
        generators: String,
        #[command(subcommand)]
        action: Action,
    },
    /// Cyclic group of order n, generator a
    Cyclic {
        n: usize,
        #[command(subcommand)]
        action: Action,
    },
    /// Dihedral group of order 2n.
    Dihedral {
        n: usize,
        #[command(subcommand)]
        action: Action,
    },
    /// Dicyclic group of order 4n (n = 2: quaternions).
    Dicyclic {
        n: usize,
        #[command(subcommand)]
        action: Action,
    },
    /// Symmetric group on n points (n <= 7)
    Symmetric {
        n: usize,
        #[command(subcommand)]
        action: Action,
    },
    /// Group described by a JSON file.
    Json {
        path: String,
        #[command(subcommand)]
        action: Action,
    },
}

#[derive(Debug, Subcommand)]
enum Action {
    /// Members of t(g) in 1..=N and gord(g).
    TWindow { element: String },
    /// Every non-identity element has t(g) ⊂ pℕ in the window.
    PCheck { p: u64 },
    /// The three order-two conditions for g.
    Gord2 { element: String },
    /// Order and conjugacy class sizes.
    Info,
}

pub fn run(args: &GroupArgs, b: &Bounds) -> Result<Report, CliError> {
    let (group, action) = match &args.source {
        Source::Metacyclic { m, s, action } => (FiniteGroup::metacyclic(*m, *s), action),
        Source::Perm { generators, action } => {
            let gens: Vec<&str> = generators.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
            (FiniteGroup::from_permutations(&gens), action)
        }
        Source::Cyclic { n, action } => (FiniteGroup::cyclic(*n), action),
        Source::Dihedral { n, action } => (FiniteGroup::dihedral(*n), action),
        Source::Dicyclic { n, action } => (FiniteGroup::dicyclic(*n), action),
        Source::Symmetric { n, action } => (FiniteGroup::symmetric(*n), action),
        Source::Json { path, action } => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
            (group_from_json(&text), action)
        }
    };
    let g = group.map_err(CliError::input)?;
    match action {
        Action::TWindow { element } => {
            let x = g.element_from_word(element).map_err(CliError::input)?;
            let w = t_window(&g, x, b.window);
            let gord = w.gord.map_or("none in window".to_string(), |v| v.to_string());
            let mut text = format!("t({element}) ∩ [1, {}] = {}\ngord = {gord}, ord = {}\n", b.window, set(&w.members), w.element_order);
            if let (Some(pre), Some(per)) = (w.preperiod, w.period) {
                text.push_str(&format!("eventually periodic from n = {pre} with period {per}\n"));
            }
            Ok(Report::new(text, &w))
        }
        Action::PCheck { p } => {
            let prime = g.p_group_prime();
            if prime != Some(*p) && g.order() > 1 {
                return Err(CliError::Refused {
                    code: "NOT_P_GROUP",
                    message: format!("group of order {} is not a {p}-group", g.order()),
                });
            }
            let res = p_group_check(&g, *p, b.window);
            let text = match res {
                Ok(()) => format!("pass: every g ≠ 1 has t(g) ∩ [1, {}] ⊂ {p}ℕ\n", b.window),
                Err(x) => format!("FAIL: element #{x} has a member not divisible by {p}\n"),
            };
            Ok(Report::new(text, &json!({ "p": p, "order": g.order(), "pass": res.is_ok(), "counterexample": res.err() })))
        }
        Action::Gord2 { element } => {
            let x = g.element_from_word(element).map_err(CliError::input)?;
            let t = gord2_characterization_check(&g, x);
            let text = format!(
                "2 ∈ t(g): {}\ng ~ g^-1: {}\ng = y x^-1 with y^2 = x^2: {}\n",
                t.two_in_spectrum, t.conjugate_to_inverse, t.square_root_form
            );
            Ok(Report::new(text, &t))
        }
        Action::Info => {
            let sizes: Vec<u64> = g.conjugacy_classes().classes.iter().map(|c| c.len() as u64).collect();
            let text = format!("order {}\ngenerators {}\nclass sizes {}\n", g.order(), g.labels().join(", "), set(&sizes));
            Ok(Report::new(text, &json!({ "order": g.order(), "generators": g.labels(), "class_sizes": sizes })))
        }
    }
}
