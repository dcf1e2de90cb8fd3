use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::constraint::{Obstruction, Reason, SpectrumConstraint};
use super::SpectrumError;
use crate::polyring::number::{ceil_root, prime_power, prime_powers_up_to, totient};
use crate::polyring::{
    cyclotomic_index, factor, has_positive_real_root, mahler_measure, resultant_with_cyclotomic, IntLaurentPoly,
};

/// `t(h)` is non-empty iff `h` has no positive real root.
pub fn nonempty_test(h: &IntLaurentPoly) -> bool {
    if h.is_zero() {
        return false;
    }
    !has_positive_real_root(h).expect("non-zero input")
}

fn as_u64_saturating(v: &BigInt) -> u64 {
    v.to_u64().unwrap_or(u64::MAX)
}

/// Divisibility by `|h(1)|`, the coefficient floor and the order-two rule.
pub fn basic_obstructions(h: &IntLaurentPoly) -> Vec<Obstruction> {
    let mut out = Vec::new();
    if h.is_zero() {
        out.push(Obstruction::new(Reason::EmptySpectrum, SpectrumConstraint::empty_spectrum()));
        return out;
    }
    let h1 = h.augmentation().abs();
    if h1.is_zero() {
        out.push(Obstruction::new(
            Reason::Divisibility { modulus: h1 },
            SpectrumConstraint::empty_spectrum(),
        ));
    } else if h1 > BigInt::from(1) {
        out.push(Obstruction::new(
            Reason::Divisibility { modulus: h1.clone() },
            SpectrumConstraint::multiples_of(as_u64_saturating(&h1)),
        ));
    }
    if h.span() == 0 {
        return out;
    }
    let floor = h.leading_coeff().abs() + h.trailing_coeff().abs();
    out.push(Obstruction::new(
        Reason::CoeffFloor { floor: floor.clone() },
        SpectrumConstraint::at_least(as_u64_saturating(&floor)),
    ));
    if divides_one_plus_power(h) == Some(false) {
        out.push(Obstruction::new(
            Reason::OrderTwo,
            SpectrumConstraint { allowed_moduli: [(2, 1)].into(), threshold: Some(3), empty: false },
        ));
    }
    out
}

/// Whether a non-constant `h` divides `1 + t^d` for some `d`; `None` when `h`
/// cannot be factored within the configured limits.
///
/// `1 + t^d` is the product of `Φ_e` over `e | 2d` with `e ∤ d`, i.e. the
/// `e` whose 2-adic valuation is exactly `v_2(d) + 1`.
pub fn divides_one_plus_power(h: &IntLaurentPoly) -> Option<bool> {
    let fz = factor(h).ok()?;
    if !fz.content.is_one() {
        return Some(false);
    }
    let mut valuation = None;
    for (f, m) in &fz.factors {
        if *m != 1 {
            return Some(false);
        }
        let Some(e) = cyclotomic_index(f) else { return Some(false) };
        if e % 2 == 1 {
            return Some(false);
        }
        let v = e.trailing_zeros();
        if *valuation.get_or_insert(v) != v {
            return Some(false);
        }
    }
    Some(!fz.factors.is_empty())
}

/// For `k = p^e`: `n ∈ t(h)` forces `p|h(1)| | n` (just `p | n` when
/// `h ≐ Φ_k`) or `n^φ(k) >= R_k(h)`.
pub fn prime_power_obstruction(h: &IntLaurentPoly, k: u64) -> Result<Obstruction, SpectrumError> {
    let (p, _) = prime_power(k).ok_or(SpectrumError::NotPrimePower(k))?;
    if h.is_zero() {
        return Err(SpectrumError::ZeroInput);
    }
    let r = resultant_with_cyclotomic(h, k)?;
    let phi = totient(k) as u32;
    let threshold = ceil_root(&r, phi);
    let h1 = h.augmentation().abs();
    let modulus = if cyclotomic_index(h) == Some(k) { BigInt::from(p) } else { BigInt::from(p) * &h1 };
    let constraint = if r.is_zero() {
        SpectrumConstraint::unconstrained()
    } else if modulus.is_zero() {
        SpectrumConstraint::at_least(as_u64_saturating(&threshold))
    } else {
        SpectrumConstraint::multiples_or_at_least(as_u64_saturating(&modulus), as_u64_saturating(&threshold))
    };
    Ok(Obstruction::new(Reason::PrimePower { k, resultant: r, modulus, threshold }, constraint))
}

/// `n >= ⌈M(h) - tol⌉`; `None` when `h` has a positive real root, since then
/// `t(h)` is already empty.
pub fn mahler_obstruction(h: &IntLaurentPoly, tol: f64) -> Result<Option<Obstruction>, SpectrumError> {
    if h.is_zero() {
        return Err(SpectrumError::ZeroInput);
    }
    if !nonempty_test(h) {
        return Ok(None);
    }
    let m = mahler_measure(h, tol)?;
    let threshold = (m - tol).ceil().max(0.0);
    let threshold = if threshold >= u64::MAX as f64 { u64::MAX } else { threshold as u64 };
    Ok(Some(Obstruction::new(
        Reason::Mahler { measure: m, threshold },
        SpectrumConstraint::at_least(threshold),
    )))
}

/// Every obstruction known for `h`, using prime powers up to `k_max`.
/// The second component lists obstructions that were skipped and why.
pub fn all_obstructions(h: &IntLaurentPoly, k_max: u64) -> (Vec<Obstruction>, Vec<String>) {
    let mut notes = Vec::new();
    if !nonempty_test(h) {
        return (vec![Obstruction::new(Reason::EmptySpectrum, SpectrumConstraint::empty_spectrum())], notes);
    }
    let mut out = basic_obstructions(h);
    if h.span() == 0 {
        return (out, notes);
    }
    if divides_one_plus_power(h).is_none() {
        notes.push("order-two test skipped: factorization out of range".into());
    }
    for k in prime_powers_up_to(k_max) {
        match prime_power_obstruction(h, k) {
            Ok(o) if !o.constraint.is_vacuous() => out.push(o),
            Ok(_) => {}
            Err(e) => notes.push(format!("PRIME_POWER({k}) skipped: {e}")),
        }
    }
    match mahler_obstruction(h, crate::config::MAHLER_TOL) {
        Ok(Some(o)) if !o.constraint.is_vacuous() => out.push(o),
        Ok(_) => {}
        Err(e) => notes.push(format!("MAHLER skipped: {e}")),
    }
    (out, notes)
}

/// Exclusions on `1..=window` with the reasons for each.
#[derive(Debug, Clone, Serialize)]
pub struct Exclusions {
    pub window: u64,
    pub obstructions: Vec<Obstruction>,
    pub excluded: BTreeMap<u64, Vec<Reason>>,
    pub notes: Vec<String>,
}

impl Exclusions {
    pub fn is_excluded(&self, n: u64) -> bool {
        self.excluded.contains_key(&n)
    }

    pub fn reasons(&self, n: u64) -> &[Reason] {
        self.excluded.get(&n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn excluded_values(&self) -> Vec<u64> {
        self.excluded.keys().copied().collect()
    }
}

pub fn excluded_set(h: &IntLaurentPoly, window: u64, k_max: u64) -> Exclusions {
    let (obstructions, notes) = all_obstructions(h, k_max);
    let mut excluded = BTreeMap::new();
    for n in 1..=window {
        let reasons: Vec<Reason> = obstructions.iter().filter(|o| o.excludes(n)).map(|o| o.reason.clone()).collect();
        if !reasons.is_empty() {
            excluded.insert(n, reasons);
        }
    }
    Exclusions { window, obstructions, excluded, notes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::cyclotomic;

    fn p(c: &[i64]) -> IntLaurentPoly {
        IntLaurentPoly::from_coeffs(c)
    }

    #[test]
    fn nonempty_examples() {
        assert!(nonempty_test(&cyclotomic(10)));
        assert!(!nonempty_test(&p(&[-2, 1])));
        assert!(!nonempty_test(&p(&[-1, -1, 1])));
    }

    #[test]
    fn basic_examples() {
        let obs = basic_obstructions(&p(&[1, 3, 1]));
        let allowed: Vec<u64> = (1..=12).filter(|&n| obs.iter().all(|o| !o.excludes(n))).collect();
        assert_eq!(allowed, vec![5, 10]);

        let obs = basic_obstructions(&cyclotomic(4));
        assert!(obs.iter().all(|o| !o.excludes(2)));

        let obs = basic_obstructions(&p(&[2, 1, 2]));
        assert!(obs.iter().any(|o| o.excludes(3) && matches!(o.reason, Reason::CoeffFloor { .. })));
        assert!(obs.iter().all(|o| !o.excludes(5)));
    }

    #[test]
    fn order_two_rule() {
        assert_eq!(divides_one_plus_power(&cyclotomic(6)), Some(true));
        assert_eq!(divides_one_plus_power(&cyclotomic(3)), Some(false));
        // Φ2 Φ6 = t^3 + 1, Φ2 Φ4 does not divide any 1 + t^d.
        assert_eq!(divides_one_plus_power(&(&cyclotomic(2) * &cyclotomic(6))), Some(true));
        assert_eq!(divides_one_plus_power(&(&cyclotomic(2) * &cyclotomic(4))), Some(false));
        assert_eq!(divides_one_plus_power(&p(&[1, 3, 1])), Some(false));
    }

    #[test]
    fn prime_power_examples() {
        let o = prime_power_obstruction(&cyclotomic(10), 2).unwrap();
        assert_eq!(o.constraint, SpectrumConstraint::multiples_or_at_least(2, 5));
        let o = prime_power_obstruction(&cyclotomic(21), 3).unwrap();
        let Reason::PrimePower { resultant, .. } = &o.reason else { panic!() };
        assert_eq!(*resultant, BigInt::from(49));
        assert_eq!(o.constraint, SpectrumConstraint::multiples_or_at_least(3, 7));
        let o = prime_power_obstruction(&cyclotomic(9), 9).unwrap();
        assert!(o.constraint.is_vacuous());
        assert!(matches!(prime_power_obstruction(&cyclotomic(9), 6), Err(SpectrumError::NotPrimePower(6))));
    }

    #[test]
    fn mahler_examples() {
        let o = mahler_obstruction(&cyclotomic(7), 1e-9).unwrap().unwrap();
        assert_eq!(o.constraint.threshold, Some(1));
        assert!(mahler_obstruction(&p(&[1, -3, 1]), 1e-9).unwrap().is_none());
        let o = mahler_obstruction(&p(&[-1, 2]), 1e-9).unwrap();
        // 2t - 1 has the positive root 1/2, so nothing is emitted.
        assert!(o.is_none());
        let o = mahler_obstruction(&p(&[1, 2]), 1e-9).unwrap().unwrap();
        assert_eq!(o.constraint.threshold, Some(2));
    }

    #[test]
    fn excluded_set_examples() {
        assert_eq!(excluded_set(&cyclotomic(10), 10, 64).excluded_values(), vec![1, 3]);
        let e = excluded_set(&cyclotomic(3), 10, 64);
        assert_eq!(e.excluded_values(), vec![1, 2, 4, 5, 7, 8, 10]);
        assert_eq!(excluded_set(&cyclotomic(21), 6, 64).excluded_values(), vec![1, 2, 4, 5]);
        let r = excluded_set(&cyclotomic(10), 10, 64);
        assert!(r.reasons(3).iter().any(|r| r.code() == "PRIME_POWER(2)"));
    }

    #[test]
    fn empty_spectrum() {
        let e = excluded_set(&p(&[-2, 1]), 5, 64);
        assert_eq!(e.excluded_values(), vec![1, 2, 3, 4, 5]);
        assert_eq!(e.reasons(1)[0], Reason::EmptySpectrum);
    }

    #[test]
    fn larger_k_max_keeps_exclusions() {
        for h in [cyclotomic(15), p(&[1, 1, 0, 1]), p(&[2, 1, 3])] {
            let small = excluded_set(&h, 30, 8).excluded_values();
            let large = excluded_set(&h, 30, 64).excluded_values();
            assert!(small.iter().all(|n| large.contains(n)));
        }
    }
}
