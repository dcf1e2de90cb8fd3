//! Factorization over the integers.
//!
//! Pipeline: unit, monomial shift and content are split off; the primitive
//! part is decomposed square-free (Yun); cyclotomic factors are removed by
//! trial division; what remains goes through Zassenhaus (distinct/equal
//! degree factorization mod a small prime, Hensel lifting, subset
//! recombination).

mod hensel;
pub(crate) mod modp;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cyclotomic::cyclotomic_fast;
use super::dense;
use super::squarefree::yun;
use super::{IntLaurentPoly, PolyError};
use modp::Fp;

/// `unit_sign * content * t^monomial_shift * ∏ factor^multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub unit_sign: i8,
    pub monomial_shift: i64,
    /// Positive integer content of the input.
    pub content: BigInt,
    /// Irreducible, primitive, normalized, pairwise non-doteq.
    pub factors: Vec<(IntLaurentPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> IntLaurentPoly {
        let mut acc = IntLaurentPoly::monomial(&self.content * BigInt::from(self.unit_sign), self.monomial_shift);
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    /// Irreducible in `Z[t^±1]`: a single simple factor and trivial content.
    pub fn is_irreducible(&self) -> bool {
        self.content.is_one() && self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Distinct irreducible factors.
    pub fn distinct_factors(&self) -> impl Iterator<Item = &IntLaurentPoly> {
        self.factors.iter().map(|(f, _)| f)
    }
}

/// Tuning for the factorizer.
#[derive(Debug, Clone, Copy)]
pub struct FactorOptions {
    /// Largest degree handed to the general (Zassenhaus) factorizer.
    pub max_degree: usize,
    /// Largest degree for which cyclotomic trial division runs.
    pub max_cyclotomic_degree: usize,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions { max_degree: crate::config::FACTOR_MAX_DEGREE, max_cyclotomic_degree: 1024 }
    }
}

pub fn factor(h: &IntLaurentPoly) -> Result<Factorization, PolyError> {
    factor_with(h, FactorOptions::default())
}

pub fn factor_with(h: &IntLaurentPoly, opts: FactorOptions) -> Result<Factorization, PolyError> {
    if h.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    let unit_sign: i8 = if h.leading_coeff().is_negative() { -1 } else { 1 };
    let monomial_shift = h.low_exponent();
    let dense_poly = h.dense_normalized();
    let content = dense::content(&dense_poly);
    let prim = dense::primitive(&dense_poly);

    let mut factors: Vec<(IntLaurentPoly, u32)> = Vec::new();
    for (part, mult) in yun(&prim) {
        for g in factor_squarefree(&part, opts)? {
            factors.push((IntLaurentPoly::from_dense(g), mult));
        }
    }
    factors.sort();
    let out = Factorization { unit_sign, monomial_shift, content, factors };
    debug_assert_eq!(out.expand(), *h);
    Ok(out)
}

/// Irreducible factors of a primitive, square-free polynomial with positive
/// leading coefficient and non-zero constant term.
fn factor_squarefree(f: &[BigInt], opts: FactorOptions) -> Result<Vec<Vec<BigInt>>, PolyError> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    if rest.len() - 1 <= opts.max_cyclotomic_degree {
        let (cyc, remaining) = strip_cyclotomic(&rest);
        out.extend(cyc);
        rest = remaining;
    }
    if rest.len() <= 1 {
        return Ok(out);
    }
    let deg = rest.len() - 1;
    if deg > opts.max_degree {
        return Err(PolyError::DegreeLimitExceeded { degree: deg, limit: opts.max_degree });
    }
    out.extend(zassenhaus(&rest));
    Ok(out)
}

fn totients_up_to(n: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            let mut j = i;
            while j <= n {
                phi[j] -= phi[j] / i as u64;
                j += i;
            }
        }
    }
    phi
}

/// Removes every cyclotomic factor by exact trial division over `d` with
/// `φ(d) <= deg f`.
fn strip_cyclotomic(f: &[BigInt]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let deg = rest.len() - 1;
    let bound = 2 * deg * deg + 2;
    let phi = totients_up_to(bound);
    let two = BigInt::from(2);
    for d in 1..=bound {
        if rest.len() <= 1 {
            break;
        }
        let cur_deg = rest.len() - 1;
        if phi[d] as usize > cur_deg {
            continue;
        }
        let c = cyclotomic_fast(d as u64).coeffs().to_vec();
        let at_two = dense::eval(&c, &two);
        if !at_two.is_zero() && !dense::eval(&rest, &two).is_multiple_of(&at_two) {
            continue;
        }
        if let Some(q) = dense::div_exact(&rest, &c) {
            found.push(c);
            rest = q;
        }
    }
    (found, rest)
}

/// Smallest `k` with `p^k > bound`.
fn lift_exponent(p: u64, bound: &BigInt) -> u32 {
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    let mut k = 1;
    while &m <= bound {
        m *= &pb;
        k += 1;
    }
    k
}

fn reduce_mod_p(f: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = f
        .iter()
        .map(|c| {
            let r = c.mod_floor(&pb);
            r.try_into().expect("residue fits in u64")
        })
        .collect();
    Fp::trim(&mut v);
    v
}

const SMALL_PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
    103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197,
    199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311,
    313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431,
    433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541,
];

/// Zassenhaus on a primitive square-free polynomial of degree >= 1.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![dense::primitive(f)];
    }
    let lead = dense::lc(f);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // Pick, among a few good primes, the one giving the fewest modular factors.
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for &p in SMALL_PRIMES {
        if (&lead % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fbar = reduce_mod_p(f, p);
        if fbar.len() != f.len() {
            continue;
        }
        let g = fp.poly_gcd(&fbar, &fp.derivative(&fbar));
        if g.len() > 1 {
            continue;
        }
        let facs = fp.factor_squarefree(&fp.monic(&fbar), &mut rng);
        if facs.len() == 1 {
            return vec![dense::primitive(f)];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, modular) = best.expect("some small prime keeps f square-free");

    // Coefficients of lc(f) * g for any factor g are below |lc| 2^n ||f||_2.
    let norm = {
        let sq: BigInt = f.iter().map(|c| c * c).sum();
        sq.sqrt() + BigInt::one()
    };
    let bound = BigInt::from(2) * lead.abs() * (BigInt::one() << n) * norm;
    let k = lift_exponent(p, &bound);
    let modulus = num_traits::pow(BigInt::from(p), k as usize);
    let lifted = hensel::multifactor_lift(f, &modular, p, k);

    recombine(f, lifted, &modulus)
}

fn symmetric_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn recombine(f: &[BigInt], mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let mut s = 1;
    'outer: while 2 * s <= lifted.len() {
        let r = lifted.len();
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            let lead = dense::lc(&rest);
            // Constant-term test before the full product.
            let c0 = idx.iter().fold(lead.clone(), |acc, &i| (acc * &lifted[i][0]).mod_floor(modulus));
            let c0 = symmetric_mod(&c0, modulus);
            if !c0.is_zero() && (&lead * &rest[0]).is_multiple_of(&c0) {
                let mut g = vec![lead.clone()];
                for &i in &idx {
                    g = dense::mul(&g, &lifted[i]);
                    g = g.iter().map(|c| c.mod_floor(modulus)).collect();
                }
                let g: Vec<BigInt> = dense::trimmed(g.iter().map(|c| symmetric_mod(c, modulus)).collect());
                let g = dense::primitive(&g);
                if let Some(q) = dense::div_exact(&rest, &g) {
                    out.push(g);
                    rest = q;
                    for &i in idx.iter().rev() {
                        lifted.remove(i);
                    }
                    continue 'outer;
                }
            }
            // next combination
            let mut i = s;
            loop {
                if i == 0 {
                    s += 1;
                    continue 'outer;
                }
                i -= 1;
                if idx[i] < r - s + i {
                    idx[i] += 1;
                    for j in i + 1..s {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    if rest.len() > 1 {
        out.push(dense::primitive(&rest));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::cyclotomic;

    fn p(c: &[i64]) -> IntLaurentPoly {
        IntLaurentPoly::from_coeffs(c)
    }

    #[test]
    fn t5_plus_1() {
        let f = factor(&p(&[1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[1, 1]), 1), (p(&[1, -1, 1, -1, 1]), 1)]);
    }

    #[test]
    fn phi21_is_irreducible() {
        let f = factor(&cyclotomic(21)).unwrap();
        assert!(f.is_irreducible());
        assert_eq!(f.factors[0].0, cyclotomic(21));
    }

    #[test]
    fn multiplicities() {
        let h = &p(&[-1, 1]).pow(2) * &p(&[1, 1, 1]);
        let f = factor(&h).unwrap();
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 2), (p(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn units_shift_and_content() {
        let h = IntLaurentPoly::from_laurent(-3, &[6, 0, -6]);
        let f = factor(&h).unwrap();
        assert_eq!(f.unit_sign, -1);
        assert_eq!(f.monomial_shift, -3);
        assert_eq!(f.content, BigInt::from(6));
        assert_eq!(f.expand(), h);
    }

    #[test]
    fn non_cyclotomic_products() {
        let a = p(&[1, -3, 1]);
        let b = p(&[2, 1, 0, 3]);
        let c = p(&[-5, 0, 0, 0, 1]);
        let h = &(&a * &b) * &c;
        let f = factor(&h).unwrap();
        let mut expect = vec![(a, 1), (b, 1), (c, 1)];
        expect.sort();
        assert_eq!(f.factors, expect);
    }

    #[test]
    fn swinnerton_dyer_like_splitting() {
        // x^4 - 10x^2 + 1 is irreducible but splits mod every prime.
        let f = factor(&p(&[1, 0, -10, 0, 1])).unwrap();
        assert!(f.is_irreducible());
    }

    #[test]
    fn non_monic_factors() {
        let a = p(&[3, 2]);
        let b = p(&[-1, 0, 5]);
        let c = p(&[1, 1, 0, 3]);
        let h = &(&a * &b) * &c.pow(2);
        let f = factor(&h).unwrap();
        assert_eq!(f.expand(), h);
        assert_eq!(f.factors.len(), 3);
    }

    #[test]
    fn degree_limit() {
        let opts = FactorOptions { max_degree: 3, max_cyclotomic_degree: 1024 };
        let h = p(&[2, 1, 0, 0, 0, 1]);
        assert!(matches!(factor_with(&h, opts), Err(PolyError::DegreeLimitExceeded { .. })));
    }
}
