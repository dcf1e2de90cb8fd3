use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::invariants::{
    big_as_string, branched_cover_order, cyclic_divisibility_test, determinant, homologically_fibered_check,
    CoverOrder, CyclicDivisibility, FiberedStatus,
};
use super::KnotRecord;
use crate::alexmod::{restriction_report_for_polynomial, RestrictionOptions};
use crate::polyring::number::{ceil_root, prime_power};
use crate::polyring::factor;
use crate::spectrum::{nonempty_test, SpectrumConstraint};

/// Which elements of the knot group a verdict speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Every `g` in the group; needs a residually torsion-free nilpotent commutator subgroup.
    AllElements,
    /// `g` outside the second derived subgroup.
    OutsideSecondDerived,
}

impl Scope {
    pub fn describe(self) -> &'static str {
        match self {
            Scope::AllElements => "valid for all g, requires residually torsion-free nilpotent commutator subgroup",
            Scope::OutsideSecondDerived => "valid for g outside the second derived subgroup",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScopedExclusion {
    pub code: String,
    pub scope: Scope,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotVerdict {
    pub n: u64,
    pub excluded: bool,
    pub exclusions: Vec<ScopedExclusion>,
}

/// A statement that applied to this knot, with the hypotheses it relies on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppliedResult {
    pub code: String,
    pub scope: Scope,
    pub scope_note: String,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverEntry {
    pub k: u64,
    pub order: CoverOrder,
    /// `ceil(|H_1|^{1/(k-1)})` for prime-power `k`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KnotObstructionReport {
    pub name: String,
    pub alexander: crate::polyring::IntLaurentPoly,
    /// `None` when the factorization could not be completed.
    pub irreducible: Option<bool>,
    #[serde(serialize_with = "big_as_string")]
    pub determinant: BigInt,
    pub fibered_status: Option<FiberedStatus>,
    pub cyclic: Option<CyclicDivisibility>,
    pub covers: Vec<CoverEntry>,
    pub window: u64,
    pub verdicts: Vec<KnotVerdict>,
    pub applied: Vec<AppliedResult>,
    /// The constraint valid for every element, when one was established.
    pub universal_constraint: Option<SpectrumConstraint>,
    /// `Δ` has no positive real root, so `G / G''` has a generalized torsion element.
    pub torsion_in_metabelian_quotient: bool,
    pub notes: Vec<String>,
}

impl KnotObstructionReport {
    /// Values excluded under at least one scope.
    pub fn excluded(&self) -> Vec<u64> {
        self.verdicts.iter().filter(|v| v.excluded).map(|v| v.n).collect()
    }

    /// Values excluded under the given scope.
    pub fn excluded_in_scope(&self, scope: Scope) -> Vec<u64> {
        self.verdicts.iter().filter(|v| v.exclusions.iter().any(|e| e.scope == scope)).map(|v| v.n).collect()
    }

    pub fn verdict(&self, n: u64) -> Option<&KnotVerdict> {
        self.verdicts.iter().find(|v| v.n == n)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct KnotReportOptions {
    pub window: u64,
    pub k_max: u64,
    /// Prime-power covers `k <= cover_max` are screened.
    pub cover_max: u64,
    /// Caller asserts the commutator subgroup is residually torsion-free nilpotent.
    pub assume_rtfn: bool,
}

impl Default for KnotReportOptions {
    fn default() -> Self {
        KnotReportOptions {
            window: crate::config::DEFAULT_WINDOW,
            k_max: crate::config::DEFAULT_K_MAX,
            cover_max: crate::config::DEFAULT_COVER_MAX,
            assume_rtfn: false,
        }
    }
}

impl KnotReportOptions {
    pub fn with_window(window: u64) -> Self {
        KnotReportOptions { window, ..Default::default() }
    }
}

pub fn knot_obstruction_report(knot: &KnotRecord, opts: &KnotReportOptions) -> KnotObstructionReport {
    let delta = &knot.alexander;
    let mut notes = Vec::new();
    let mut applied = Vec::new();
    let mut verdicts: Vec<KnotVerdict> =
        (1..=opts.window).map(|n| KnotVerdict { n, excluded: false, exclusions: Vec::new() }).collect();
    let mut exclude = |n: u64, code: &str, scope: Scope, detail: String| {
        if n >= 1 && n <= opts.window {
            let v = &mut verdicts[(n - 1) as usize];
            v.excluded = true;
            v.exclusions.push(ScopedExclusion { code: code.to_string(), scope, detail });
        }
    };

    let irreducible = if delta.span() == 0 {
        Some(false)
    } else {
        match factor(delta) {
            Ok(fz) => Some(fz.is_irreducible()),
            Err(e) => {
                notes.push(format!("factorization failed ({e}); irreducibility-gated results skipped"));
                None
            }
        }
    };
    let det = determinant(knot);
    let fibered_status = match homologically_fibered_check(knot) {
        Ok(s) => Some(s),
        Err(_) => {
            notes.push("genus unknown; homological fiberedness not checked".into());
            None
        }
    };
    let cyclic = cyclic_divisibility_test(knot);

    // Theorem main, through the irreducible factors of Δ.
    if delta.span() > 0 {
        let ropts = RestrictionOptions { window: opts.window, deg_bound: None, k_max: opts.k_max, certify: false };
        match restriction_report_for_polynomial(delta, ropts) {
            Ok(r) => {
                if irreducible == Some(false) {
                    notes.push("Δ is reducible; the cover-homology and determinant bounds are replaced by per-factor analysis".into());
                }
                let reducible = r.factors.len() > 1;
                for &n in &r.universal_exclusion {
                    let detail = if reducible {
                        "excluded by every irreducible factor of Δ".to_string()
                    } else {
                        let reasons: Vec<String> = r.factors[0]
                            .excluded
                            .iter()
                            .find(|e| e.n == n)
                            .map(|e| e.reasons.iter().map(|r| r.code()).collect())
                            .unwrap_or_default();
                        format!("n ∉ t(Δ): {}", reasons.join(", "))
                    };
                    exclude(n, "THEOREM_MAIN", Scope::OutsideSecondDerived, detail);
                }
                applied.push(AppliedResult {
                    code: "THEOREM_MAIN".into(),
                    scope: Scope::OutsideSecondDerived,
                    scope_note: Scope::OutsideSecondDerived.describe().into(),
                    statement: "t(g) is contained in t(h) for some irreducible factor h of Δ".into(),
                });
                notes.extend(r.notes);
                for f in r.factors {
                    notes.extend(f.notes.into_iter().map(|s| format!("{}: {s}", f.factor)));
                }
            }
            Err(e) => notes.push(format!("per-factor analysis failed: {e}")),
        }
    }

    // Cover homology and the determinant bound, both gated on irreducibility.
    let mut covers = Vec::new();
    for k in 2..=opts.cover_max {
        let order = match branched_cover_order(knot, k) {
            Ok(o) => o,
            Err(e) => {
                notes.push(format!("cover {k}: {e}"));
                continue;
            }
        };
        let mut threshold = None;
        if let (Some((p, _)), CoverOrder::Order { order: h1 }) = (prime_power(k), &order) {
            let t = ceil_root(h1, (k - 1) as u32).to_u64().unwrap_or(u64::MAX);
            threshold = Some(t);
            if irreducible == Some(true) {
                let code = format!("TG_KNOT({k})");
                for n in (1..t.min(opts.window.saturating_add(1))).filter(|n| n % p != 0) {
                    exclude(
                        n,
                        &code,
                        Scope::OutsideSecondDerived,
                        format!("{p} ∤ n and n < |H_1(Σ_{k})|^(1/{}) = {h1}^(1/{})", k - 1, k - 1),
                    );
                }
                if t > 1 {
                    applied.push(AppliedResult {
                        code,
                        scope: Scope::OutsideSecondDerived,
                        scope_note: format!("{}, Δ irreducible required", Scope::OutsideSecondDerived.describe()),
                        statement: format!("n ∈ {p}ℕ or n ≥ {t}"),
                    });
                }
            }
        }
        covers.push(CoverEntry { k, order, threshold });
    }
    if irreducible == Some(true) && !det.is_zero() {
        let d = det.to_u64().unwrap_or(u64::MAX);
        for n in (1..d.min(opts.window.saturating_add(1))).filter(|n| n % 2 == 1) {
            exclude(n, "DETERMINANT", Scope::OutsideSecondDerived, format!("n odd and n < det = {det}"));
        }
        if d > 1 {
            applied.push(AppliedResult {
                code: "DETERMINANT".into(),
                scope: Scope::OutsideSecondDerived,
                scope_note: format!("{}, Δ irreducible required", Scope::OutsideSecondDerived.describe()),
                statement: format!("odd n satisfy n ≥ {det}"),
            });
        }
    }

    // Theorem for homologically fibered knots with Δ | t^k - 1.
    let mut universal_constraint = None;
    if let Some(c) = &cyclic {
        if let Some((p, _, q, _)) = c.two_prime() {
            let hypothesis = knot.fibered == Some(true) || opts.assume_rtfn;
            let degree_ok = match (knot.fibered, knot.genus) {
                (_, Some(g)) => delta.span() as u64 == 2 * u64::from(g),
                (Some(true), None) => true,
                _ => false,
            };
            if !hypothesis {
                notes.push(format!(
                    "Δ divides t^{} - 1, but THEOREM_KNOT needs the fibered flag or an asserted residually torsion-free nilpotent commutator subgroup",
                    c.k
                ));
            } else if !degree_ok {
                notes.push("THEOREM_KNOT needs deg Δ = 2·genus, which is not established".into());
            } else {
                let constraint = SpectrumConstraint::multiples_or_at_least(p, q);
                for n in (1..=opts.window).filter(|&n| !constraint.allows(n)) {
                    exclude(n, "THEOREM_KNOT", Scope::AllElements, format!("Δ | t^{} - 1: t(g) ⊂ {p}ℕ ∪ ℕ≥{q}", c.k));
                }
                applied.push(AppliedResult {
                    code: "THEOREM_KNOT".into(),
                    scope: Scope::AllElements,
                    scope_note: Scope::AllElements.describe().into(),
                    statement: format!("t(g) ⊂ {p}ℕ ∪ ℕ≥{q} for all g"),
                });
                universal_constraint = Some(constraint);
            }
        }
    }

    KnotObstructionReport {
        name: knot.name.clone(),
        alexander: delta.clone(),
        irreducible,
        determinant: det,
        fibered_status,
        cyclic,
        covers,
        window: opts.window,
        verdicts,
        applied,
        universal_constraint,
        torsion_in_metabelian_quotient: nonempty_test(delta) && delta.span() > 0,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::IntLaurentPoly;

    fn opts(window: u64) -> KnotReportOptions {
        KnotReportOptions::with_window(window)
    }

    #[test]
    fn t37_window() {
        let r = knot_obstruction_report(&KnotRecord::torus(3, 7).unwrap(), &opts(6));
        let ex = r.excluded();
        for n in [2, 4, 5] {
            assert!(ex.contains(&n), "{n}");
        }
        assert!(!ex.contains(&3) && !ex.contains(&6));
        assert_eq!(r.excluded_in_scope(Scope::AllElements), vec![1, 2, 4, 5]);
    }

    #[test]
    fn t25_fibered() {
        let r = knot_obstruction_report(&KnotRecord::torus(2, 5).unwrap(), &opts(10));
        assert_eq!(r.universal_constraint, Some(SpectrumConstraint::multiples_or_at_least(2, 5)));
        assert_eq!(r.excluded_in_scope(Scope::AllElements), vec![1, 3]);
        assert!(r.applied.iter().any(|a| a.code == "THEOREM_KNOT"));
        assert!(r.torsion_in_metabelian_quotient);
    }

    #[test]
    fn theorem_knot_needs_hypothesis() {
        let k = KnotRecord::new("10_132?", IntLaurentPoly::from_coeffs(&[1, -1, 1, -1, 1])).unwrap().with_genus(2);
        let r = knot_obstruction_report(&k, &opts(10));
        assert!(r.universal_constraint.is_none());
        assert!(r.excluded_in_scope(Scope::AllElements).is_empty());
        let asserted = KnotReportOptions { assume_rtfn: true, ..opts(10) };
        let r = knot_obstruction_report(&k, &asserted);
        assert_eq!(r.excluded_in_scope(Scope::AllElements), vec![1, 3]);
    }

    #[test]
    fn himeno_order_three_excluded() {
        for q in [5u64, 7, 11, 13, 25] {
            let r = knot_obstruction_report(&KnotRecord::torus(2, q).unwrap(), &opts(6));
            let all = r.excluded_in_scope(Scope::AllElements);
            assert!(all.contains(&3), "q = {q}");
            assert!(!all.contains(&4) && !all.contains(&2));
        }
    }

    #[test]
    fn figure_eight_determinant() {
        let k = KnotRecord::new("4_1", IntLaurentPoly::from_coeffs(&[1, -3, 1])).unwrap();
        let r = knot_obstruction_report(&k, &opts(9));
        assert_eq!(r.determinant, BigInt::from(5));
        let det: Vec<u64> = r
            .verdicts
            .iter()
            .filter(|v| v.exclusions.iter().any(|e| e.code == "DETERMINANT"))
            .map(|v| v.n)
            .collect();
        assert_eq!(det, vec![1, 3]);
        assert_eq!(r.covers[0].order.order(), Some(&BigInt::from(5)));
        assert!(r.universal_constraint.is_none());
        for v in &r.verdicts {
            assert_eq!(v.excluded, !v.exclusions.is_empty());
        }
    }

    #[test]
    fn reducible_alexander_skips_gated_results() {
        // granny knot: Δ = (t^2 - t + 1)^2
        let k = KnotRecord::new("3_1#3_1", IntLaurentPoly::from_coeffs(&[1, -1, 1]).pow(2)).unwrap();
        let r = knot_obstruction_report(&k, &opts(8));
        assert_eq!(r.irreducible, Some(false));
        assert!(r.verdicts.iter().all(|v| v.exclusions.iter().all(|e| e.code == "THEOREM_MAIN")));
    }

    #[test]
    fn tg_knot_threshold_matches_float_root() {
        let k = KnotRecord::new("4_1", IntLaurentPoly::from_coeffs(&[1, -3, 1])).unwrap();
        let r = knot_obstruction_report(&k, &opts(20));
        for c in &r.covers {
            if let (Some(t), Some(h)) = (c.threshold, c.order.order()) {
                let root = h.to_f64().unwrap().powf(1.0 / (c.k - 1) as f64);
                assert!((t as f64 - root).abs() < 1.0 + 1e-9 && t as f64 + 1e-9 >= root, "k = {}", c.k);
            }
        }
    }

    #[test]
    fn unknot_has_no_exclusions() {
        let r = knot_obstruction_report(&KnotRecord::unknot(), &opts(5));
        assert!(r.excluded().is_empty());
        assert!(!r.torsion_in_metabelian_quotient);
    }
}
