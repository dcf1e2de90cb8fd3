//! Cyclotomic polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::number::{divisors, factorize, totient};
use super::IntLaurentPoly;

/// The `k`-th cyclotomic polynomial, by exact division of `t^k - 1` by
/// `Φ_d` for every proper divisor `d` of `k`.
pub fn cyclotomic(k: u64) -> IntLaurentPoly {
    assert!(k >= 1, "cyclotomic index must be positive");
    let mut memo = BTreeMap::new();
    cyclotomic_memo(k, &mut memo)
}

fn cyclotomic_memo(k: u64, memo: &mut BTreeMap<u64, IntLaurentPoly>) -> IntLaurentPoly {
    if let Some(p) = memo.get(&k) {
        return p.clone();
    }
    let mut acc = IntLaurentPoly::t_pow_minus_one(k as usize);
    for d in divisors(k) {
        if d == k {
            continue;
        }
        let phi_d = cyclotomic_memo(d, memo);
        acc = acc
            .divide_exact(&phi_d)
            .expect("t^k - 1 is divisible by every Φ_d with d | k");
    }
    memo.insert(k, acc.clone());
    acc
}

/// `Φ_k` via `Φ_{mp}(t) = Φ_m(t^p) / Φ_m(t)` for primes `p ∤ m` and
/// `Φ_k(t) = Φ_{rad k}(t^{k / rad k})`. Degree stays at `φ(k)` throughout,
/// which keeps large indices cheap.
pub(crate) fn cyclotomic_fast(k: u64) -> IntLaurentPoly {
    assert!(k >= 1);
    let primes: Vec<u64> = factorize(k).into_iter().map(|(p, _)| p).collect();
    let mut m = 1u64;
    let mut phi = IntLaurentPoly::from_coeffs(&[-1, 1]);
    for p in primes {
        let lifted = substitute_power(&phi, p as usize);
        phi = lifted.divide_exact(&phi).expect("cyclotomic recursion is exact");
        m *= p;
    }
    if m == k {
        phi
    } else {
        substitute_power(&phi, (k / m) as usize)
    }
}

/// `f(t^e)` for an ordinary polynomial `f`.
pub(crate) fn substitute_power(f: &IntLaurentPoly, e: usize) -> IntLaurentPoly {
    if f.is_zero() {
        return IntLaurentPoly::zero();
    }
    assert!(f.low_exponent() >= 0);
    let hi = f.high_exponent() as usize;
    let mut c = vec![BigInt::from(0); hi * e + 1];
    for i in 0..=hi {
        c[i * e] = f.coeff(i as i64);
    }
    IntLaurentPoly::new(0, c)
}

/// If `h` is doteq to some `Φ_d`, return `d`.
pub fn cyclotomic_index(h: &IntLaurentPoly) -> Option<u64> {
    let n = h.normalize();
    let deg = n.span() as u64;
    if deg == 0 {
        return None;
    }
    if n.leading_coeff() != BigInt::from(1) {
        return None;
    }
    // φ(d) >= sqrt(d/2), so d <= 2 deg^2.
    let bound = 2 * deg * deg + 2;
    (1..=bound)
        .filter(|&d| totient(d) == deg)
        .find(|&d| cyclotomic_fast(d) == n)
}
