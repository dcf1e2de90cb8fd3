use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{KnotError, KnotRecord};
use crate::alexmod::{IntMatrix, LaurentMatrix, ModulePresentation};
use crate::polyring::number::{divisors, factorize};
use crate::polyring::{cyclotomic_index, factor, resultant_with_cyclotomic, IntLaurentPoly};

pub(crate) fn big_as_string<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_alexander(p: u64, q: u64) -> Result<IntLaurentPoly, KnotError> {
    if p < 2 || q < 2 {
        return Err(KnotError::InvalidArgument(format!("torus knot parameters must be at least 2, got ({p}, {q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(KnotError::NotCoprime { p, q });
    }
    let pq = usize::try_from(p * q).map_err(|_| KnotError::InvalidArgument("torus parameters too large".into()))?;
    let num = &IntLaurentPoly::t_pow_minus_one(pq) * &IntLaurentPoly::t_pow_minus_one(1);
    let den = &IntLaurentPoly::t_pow_minus_one(p as usize) * &IntLaurentPoly::t_pow_minus_one(q as usize);
    Ok(num.divide_exact(&den)?)
}

/// `|Δ(-1)|`.
pub fn determinant(k: &KnotRecord) -> BigInt {
    k.alexander.eval_integer(&BigInt::from(-1)).expect("polynomial part is integral").abs()
}

/// Order of `H_1` of the `k`-fold cyclic branched cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverOrder {
    Order {
        #[serde(serialize_with = "big_as_string")]
        order: BigInt,
    },
    /// `Φ_d` divides `Δ` for some `d | k`, `d > 1`.
    NotQhs { d: u64 },
}

impl CoverOrder {
    pub fn order(&self) -> Option<&BigInt> {
        match self {
            CoverOrder::Order { order } => Some(order),
            CoverOrder::NotQhs { .. } => None,
        }
    }
}

/// `∏_{d | k} R_d(Δ)`.
pub fn branched_cover_order(knot: &KnotRecord, k: u64) -> Result<CoverOrder, KnotError> {
    if k < 2 {
        return Err(KnotError::InvalidArgument("cover degree must be at least 2".into()));
    }
    let mut order = BigInt::one();
    for d in divisors(k) {
        let r = resultant_with_cyclotomic(&knot.alexander, d)?;
        if r.is_zero() {
            return Ok(CoverOrder::NotQhs { d });
        }
        order *= r;
    }
    Ok(CoverOrder::Order { order })
}

/// `Δ(t) ≐ det(V - t Vᵀ)` for a Seifert matrix `V`.
pub fn seifert_to_alexander(v: &IntMatrix) -> Result<IntLaurentPoly, KnotError> {
    if !v.is_square() {
        return Err(KnotError::InvalidSeifertMatrix("not square".into()));
    }
    let n = v.rows();
    if n == 0 {
        return Ok(IntLaurentPoly::one());
    }
    let mut skew = Vec::with_capacity(n * n);
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            skew.push(v.get(i, j) - v.get(j, i));
            let a = IntLaurentPoly::constant(v.get(i, j).clone());
            let b = IntLaurentPoly::monomial(v.get(j, i).clone(), 1);
            entries.push(&a - &b);
        }
    }
    let d = IntMatrix::from_big(n, n, skew).expect("square").determinant().expect("square");
    if d.abs() != BigInt::one() {
        return Err(KnotError::InvalidSeifertMatrix(format!("det(V - Vᵀ) = {d}, expected ±1")));
    }
    let m = LaurentMatrix::new(n, n, entries).expect("square");
    Ok(ModulePresentation::new(m).determinant()?.normalize())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberedStatus {
    /// `deg Δ = 2g` and `Δ` monic.
    Integral,
    /// `deg Δ = 2g` only.
    Rational,
    Neither,
}

pub fn homologically_fibered_check(k: &KnotRecord) -> Result<FiberedStatus, KnotError> {
    let genus = k.genus.ok_or(KnotError::MissingGenus)?;
    let delta = &k.alexander;
    if delta.span() as u64 != 2 * u64::from(genus) {
        return Ok(FiberedStatus::Neither);
    }
    Ok(if delta.leading_coeff().abs().is_one() { FiberedStatus::Integral } else { FiberedStatus::Rational })
}

/// Least `k` with `Δ | t^k - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicDivisibility {
    pub k: u64,
    pub prime_factors: Vec<(u64, u32)>,
}

impl CyclicDivisibility {
    /// `(p, a, q, b)` with `k = p^a q^b`, `p < q`, when `k` has exactly two prime factors.
    pub fn two_prime(&self) -> Option<(u64, u32, u64, u32)> {
        match self.prime_factors.as_slice() {
            &[(p, a), (q, b)] => Some((p, a, q, b)),
            _ => None,
        }
    }
}

pub fn cyclic_divisibility_test(knot: &KnotRecord) -> Option<CyclicDivisibility> {
    cyclic_divisibility(&knot.alexander, crate::config::CYCLIC_K_CAP)
}

/// `Δ | t^k - 1` iff `Δ` is, up to a unit, a product of distinct cyclotomic
/// polynomials; the least such `k` is the lcm of their indices.
pub fn cyclic_divisibility(delta: &IntLaurentPoly, cap: u64) -> Option<CyclicDivisibility> {
    let h = delta.normalize();
    if h.is_zero() || !h.leading_coeff().is_one() || !h.trailing_coeff().abs().is_one() {
        return None;
    }
    let k = match factor(&h) {
        Ok(fz) => {
            if !fz.content.is_one() {
                return None;
            }
            let mut k = 1u64;
            for (f, m) in &fz.factors {
                let idx = cyclotomic_index(f)?;
                if *m != 1 {
                    return None;
                }
                k = k.lcm(&idx);
                if k > cap {
                    return None;
                }
            }
            k
        }
        Err(_) => power_search(&h, cap)?,
    };
    Some(CyclicDivisibility { k, prime_factors: factorize(k) })
}

/// Walks `t^k mod h` for monic `h` until it returns to 1.
fn power_search(h: &IntLaurentPoly, cap: u64) -> Option<u64> {
    let d = h.span();
    let lower: Vec<BigInt> = h.coeffs()[..d].to_vec();
    let mut r = vec![BigInt::zero(); d];
    r[0] = BigInt::one();
    for k in 1..=cap {
        let top = r[d - 1].clone();
        for i in (1..d).rev() {
            r[i] = &r[i - 1] - &top * &lower[i];
        }
        r[0] = -&top * &lower[0];
        if r[0].is_one() && r[1..].iter().all(Zero::is_zero) {
            return Some(k);
        }
    }
    None
}
