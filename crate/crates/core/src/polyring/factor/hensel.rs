//! Linear Hensel lifting of a modular factorization.

use num_bigint::BigInt;
use num_integer::Integer;

use super::modp::{Fp, PolyP};
use crate::polyring::dense;

fn to_big(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    dense::trimmed(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn reduce_p(a: &[BigInt], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    let mut v: PolyP = a
        .iter()
        .map(|c| c.mod_floor(&pb).try_into().expect("residue fits"))
        .collect();
    Fp::trim(&mut v);
    v
}

/// Lifts `target ≡ g0 * h0 (mod p)` (all monic) to `target ≡ g * h (mod p^k)`.
fn lift_pair(target: &[BigInt], g0: &PolyP, h0: &PolyP, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let fp = Fp::new(p);
    let (one, s, t) = fp.ext_gcd(g0, h0);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let mut g = to_big(g0);
    let mut h = to_big(h0);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff = dense::sub(target, &dense::mul(&g, &h));
        let e: Vec<BigInt> = diff.iter().map(|c| c / &pj).collect();
        let e = reduce_p(&e, p);
        if !e.is_empty() {
            // e = (s e mod h0) g0 + (t e mod g0) h0 modulo p
            let b = fp.poly_rem(&fp.poly_mul(&s, &e), h0);
            let a = fp.poly_rem(&fp.poly_mul(&t, &e), g0);
            g = dense::add(&g, &dense::scale(&to_big(&a), &pj));
            h = dense::add(&h, &dense::scale(&to_big(&b), &pj));
        }
        pj *= &pb;
    }
    (reduce(&g, &pj), reduce(&h, &pj))
}

/// Lifts monic factors of `lc(f)^-1 f mod p` to monic factors modulo `p^k`.
pub(super) fn multifactor_lift(f: &[BigInt], factors: &[PolyP], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let fp = Fp::new(p);
    let modulus = num_traits::pow(BigInt::from(p), k as usize);
    let lead = dense::lc(f);
    let lead_inv = lead
        .extended_gcd(&modulus)
        .x
        .mod_floor(&modulus);
    let mut current = reduce(&dense::scale(f, &lead_inv), &modulus);
    let mut out = Vec::with_capacity(factors.len());
    for i in 0..factors.len() {
        if i + 1 == factors.len() {
            out.push(current.clone());
            break;
        }
        let g0 = &factors[i];
        let h0 = factors[i + 1..]
            .iter()
            .fold(vec![1u64], |acc, x| fp.poly_mul(&acc, x));
        let (g, h) = lift_pair(&current, g0, &h0, p, k);
        out.push(g);
        current = h;
    }
    out
}
