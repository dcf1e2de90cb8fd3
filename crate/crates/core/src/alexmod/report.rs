//! Per-factor spectrum constraints for the torsion part of a module.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::presentation::ModulePresentation;
use super::AlexError;
use crate::polyring::number::factorize;
use crate::polyring::{factor, IntLaurentPoly};
use crate::spectrum::{excluded_set, spectrum_window_with, Reason, WindowOptions};

#[derive(Debug, Clone, Copy)]
pub struct RestrictionOptions {
    pub window: u64,
    pub deg_bound: Option<usize>,
    pub k_max: u64,
    /// Also search for membership certificates for each factor.
    pub certify: bool,
}

impl Default for RestrictionOptions {
    fn default() -> Self {
        RestrictionOptions {
            window: crate::config::DEFAULT_WINDOW,
            deg_bound: None,
            k_max: crate::config::DEFAULT_K_MAX,
            certify: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExcludedValue {
    pub n: u64,
    pub reasons: Vec<Reason>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorReport {
    pub factor: IntLaurentPoly,
    pub multiplicity: u32,
    pub excluded: Vec<ExcludedValue>,
    /// Values certified to lie in `t(factor)`; empty unless certification was requested.
    pub members: Vec<u64>,
    pub notes: Vec<String>,
}

impl FactorReport {
    pub fn excluded_values(&self) -> BTreeSet<u64> {
        self.excluded.iter().map(|e| e.n).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RestrictionReport {
    pub alexander: IntLaurentPoly,
    pub window: u64,
    pub factors: Vec<FactorReport>,
    /// Values excluded by every factor.
    pub universal_exclusion: Vec<u64>,
    pub notes: Vec<String>,
}

impl RestrictionReport {
    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn universally_excluded(&self, n: u64) -> bool {
        self.universal_exclusion.binary_search(&n).is_ok()
    }
}

pub fn restriction_report(
    p: &ModulePresentation,
    window: u64,
    deg_bound: usize,
    k_max: u64,
) -> Result<RestrictionReport, AlexError> {
    let opts = RestrictionOptions { window, deg_bound: Some(deg_bound), k_max, certify: false };
    restriction_report_with(p, opts)
}

pub fn restriction_report_with(p: &ModulePresentation, opts: RestrictionOptions) -> Result<RestrictionReport, AlexError> {
    let delta = p.alexander_of_torsion()?;
    restriction_report_for_polynomial(&delta, opts)
}

/// Same report starting from `Δ_0(TM)` directly.
pub fn restriction_report_for_polynomial(
    delta: &IntLaurentPoly,
    opts: RestrictionOptions,
) -> Result<RestrictionReport, AlexError> {
    if delta.is_zero() {
        return Err(AlexError::ZeroAlexander);
    }
    let delta = delta.normalize();
    let mut notes = Vec::new();
    if delta.is_one() {
        notes.push("no constraint; module torsion is trivial".to_string());
        return Ok(RestrictionReport {
            alexander: delta,
            window: opts.window,
            factors: Vec::new(),
            universal_exclusion: Vec::new(),
            notes,
        });
    }
    let fz = factor(&delta)?;
    let mut irreducibles: Vec<(IntLaurentPoly, u32)> = Vec::new();
    if !fz.content.is_one() {
        match fz.content.to_u64() {
            Some(c) => {
                for (q, e) in factorize(c) {
                    irreducibles.push((IntLaurentPoly::constant(BigInt::from(q)), e));
                }
            }
            None => notes.push(format!("content {} too large to factor; treated as one factor", fz.content)),
        }
        if fz.content.to_u64().is_none() {
            irreducibles.push((IntLaurentPoly::constant(fz.content.clone()), 1));
        }
    }
    irreducibles.extend(fz.factors.iter().cloned());

    let factors: Vec<FactorReport> = irreducibles
        .into_iter()
        .map(|(h, multiplicity)| factor_report(h, multiplicity, &opts))
        .collect();

    let mut universal: Option<BTreeSet<u64>> = None;
    for f in &factors {
        let ex = f.excluded_values();
        universal = Some(match universal {
            None => ex,
            Some(u) => u.intersection(&ex).copied().collect(),
        });
    }
    Ok(RestrictionReport {
        alexander: delta,
        window: opts.window,
        factors,
        universal_exclusion: universal.unwrap_or_default().into_iter().collect(),
        notes,
    })
}

fn factor_report(h: IntLaurentPoly, multiplicity: u32, opts: &RestrictionOptions) -> FactorReport {
    let deg_bound = opts.deg_bound.unwrap_or_else(|| crate::config::default_deg_bound(h.span()));
    if opts.certify {
        let wopts = WindowOptions { window: opts.window, deg_bound, k_max: opts.k_max, max_states: crate::config::max_states() };
        let report = spectrum_window_with(&h, wopts);
        let excluded = report
            .entries
            .iter()
            .filter_map(|e| match &e.status {
                crate::spectrum::SpectrumStatus::Excluded(r) => Some(ExcludedValue { n: e.n, reasons: r.clone() }),
                _ => None,
            })
            .collect();
        return FactorReport { members: report.members(), excluded, notes: report.notes.clone(), factor: h, multiplicity };
    }
    let ex = excluded_set(&h, opts.window, opts.k_max);
    let excluded = ex.excluded.into_iter().map(|(n, reasons)| ExcludedValue { n, reasons }).collect();
    FactorReport { factor: h, multiplicity, excluded, members: Vec::new(), notes: ex.notes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexmod::{IntActionModule, LaurentMatrix};
    use crate::polyring::cyclotomic;

    fn single(h: IntLaurentPoly) -> ModulePresentation {
        ModulePresentation::new(LaurentMatrix::diagonal(&[h]))
    }

    #[test]
    fn torus_knot_module() {
        let r = restriction_report(&single(cyclotomic(21)), 6, 100, 64).unwrap();
        for n in [2, 4, 5] {
            assert!(r.universally_excluded(n), "{n}");
        }
        for n in [3, 6] {
            assert!(!r.universally_excluded(n), "{n}");
        }
    }

    #[test]
    fn reducible_intersection() {
        let h = &cyclotomic(2) * &cyclotomic(3);
        let r = restriction_report(&single(h), 5, 40, 64).unwrap();
        assert_eq!(r.factors.len(), 2);
        assert_eq!(r.universal_exclusion, vec![1, 5]);
    }

    #[test]
    fn trivial_and_zero() {
        let r = restriction_report(&single(IntLaurentPoly::one()), 5, 10, 8).unwrap();
        assert!(r.is_trivial());
        assert!(r.universal_exclusion.is_empty());
        assert!(r.notes[0].contains("trivial"));
        let zero = ModulePresentation::new(LaurentMatrix::zeros(2, 2));
        // rank 2, Δ_2 = 1: torsion-free
        assert!(restriction_report(&zero, 5, 10, 8).unwrap().is_trivial());
        assert!(matches!(
            restriction_report_for_polynomial(&IntLaurentPoly::zero(), RestrictionOptions::default()),
            Err(AlexError::ZeroAlexander)
        ));
    }

    #[test]
    fn content_counts_as_factor() {
        let h = IntLaurentPoly::from_coeffs(&[2, 2, 2]);
        let r = restriction_report(&single(h), 6, 20, 8).unwrap();
        assert_eq!(r.factors.len(), 2);
        assert_eq!(r.universal_exclusion, vec![1, 5]);
    }

    #[test]
    fn certified_members_are_not_excluded() {
        let h = IntLaurentPoly::from_coeffs(&[1, 2, 0, 1]);
        let module = IntActionModule::companion(&h).unwrap();
        let r = restriction_report_with(
            &module.presentation(),
            RestrictionOptions { window: 8, deg_bound: Some(12), k_max: 16, certify: true },
        )
        .unwrap();
        assert_eq!(r.factors.len(), 1);
        assert!(r.factors[0].members.contains(&4));
        assert!(!r.universally_excluded(4));
    }
}
