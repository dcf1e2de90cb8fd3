//! Polynomials over `Z/pZ` for a word-sized prime `p`, constant term first.

use rand::Rng;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp {
    pub p: u64,
}

pub(crate) type PolyP = Vec<u64>;

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!((2..(1 << 31)).contains(&p));
        Fp { p }
    }

    #[cfg(test)]
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod p");
        self.pow(a, self.p - 2)
    }

    pub fn trim(a: &mut PolyP) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    #[cfg(test)]
    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let mut out: PolyP = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        Self::trim(&mut out);
        out
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let mut out: PolyP = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        Self::trim(&mut out);
        out
    }

    pub fn poly_scale(&self, a: &[u64], c: u64) -> PolyP {
        let mut out: PolyP = a.iter().map(|&x| self.mul(x, c)).collect();
        Self::trim(&mut out);
        out
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(&mut out);
        out
    }

    /// Quotient and remainder; `b` must be non-zero.
    pub fn poly_divrem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let db = b.len() - 1;
        let inv_lb = self.inv(b[db]);
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - db];
        for i in (0..q.len()).rev() {
            let c = self.mul(r[i + db], inv_lb);
            q[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = self.sub(r[i + j], self.mul(c, bj));
            }
        }
        Self::trim(&mut q);
        Self::trim(&mut r);
        (q, r)
    }

    pub fn poly_rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.poly_divrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        if a.is_empty() {
            return Vec::new();
        }
        let inv = self.inv(*a.last().unwrap());
        self.poly_scale(a, inv)
    }

    pub fn poly_gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let mut u = a.to_vec();
        let mut v = b.to_vec();
        while !v.is_empty() {
            let r = self.poly_rem(&u, &v);
            u = v;
            v = r;
        }
        self.monic(&u)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc = *r0.last().expect("gcd of non-zero inputs");
        let inv = self.inv(lc);
        (self.poly_scale(&r0, inv), self.poly_scale(&s0, inv), self.poly_scale(&t0, inv))
    }

    pub fn powmod(&self, base: &[u64], mut e: u128, m: &[u64]) -> PolyP {
        let mut acc: PolyP = vec![1];
        acc = self.poly_rem(&acc, m);
        let mut b = self.poly_rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_rem(&self.poly_mul(&acc, &b), m);
            }
            b = self.poly_rem(&self.poly_mul(&b, &b), m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        let mut out: PolyP = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        Self::trim(&mut out);
        out
    }

    /// Distinct-degree factorization of a monic square-free polynomial:
    /// pairs `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x: PolyP = vec![0, 1];
        let mut h = x.clone();
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                let deg = rest.len() - 1;
                out.push((rest.clone(), deg));
                break;
            }
            h = self.powmod(&h, self.p as u128, &rest);
            let g = self.poly_gcd(&self.poly_sub(&h, &x), &rest);
            if g.len() > 1 {
                out.push((g.clone(), d));
                rest = self.poly_divrem(&rest, &g).0;
                h = self.poly_rem(&h, &rest);
            }
        }
        out
    }

    /// Equal-degree splitting (Cantor–Zassenhaus, odd `p`).
    pub fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        assert!(self.p % 2 == 1, "equal-degree splitting requires odd p");
        let half = ((self.p - 1) / 2) as u128;
        loop {
            let a: PolyP = {
                let mut v: PolyP = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
                Self::trim(&mut v);
                v
            };
            if a.len() <= 1 {
                continue;
            }
            let g = self.poly_gcd(&a, f);
            let candidate = if g.len() > 1 {
                g
            } else {
                // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
                let mut frob = a.clone();
                let mut norm = a.clone();
                for _ in 1..d {
                    frob = self.powmod(&frob, self.p as u128, f);
                    norm = self.poly_rem(&self.poly_mul(&norm, &frob), f);
                }
                let b = self.powmod(&norm, half, f);
                self.poly_gcd(&self.poly_sub(&b, &[1]), f)
            };
            if candidate.len() > 1 && candidate.len() < f.len() {
                let other = self.poly_divrem(f, &candidate).0;
                let mut out = self.equal_degree(&candidate, d, rng);
                out.extend(self.equal_degree(&self.monic(&other), d, rng));
                return out;
            }
        }
    }

    /// Complete factorization of a monic square-free polynomial.
    pub fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<PolyP> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factor_x5_minus_1_mod_11() {
        // 11 ≡ 1 mod 5, so x^5 - 1 splits into linear factors mod 11.
        let f = Fp::new(11);
        let poly = vec![10, 0, 0, 0, 0, 1];
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let factors = f.factor_squarefree(&poly, &mut rng);
        assert_eq!(factors.len(), 5);
        let prod = factors.iter().fold(vec![1], |acc, g| f.poly_mul(&acc, g));
        assert_eq!(prod, poly);
    }

    #[test]
    fn ext_gcd_identity() {
        let f = Fp::new(13);
        let a = vec![1, 2, 0, 1];
        let b = vec![3, 0, 1];
        let (g, s, t) = f.ext_gcd(&a, &b);
        let lhs = f.poly_add(&f.poly_mul(&s, &a), &f.poly_mul(&t, &b));
        assert_eq!(lhs, g);
    }
}
