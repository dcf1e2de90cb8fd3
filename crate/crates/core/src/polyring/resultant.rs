//! Resultants over the integers by the subresultant pseudo-remainder sequence.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::cyclotomic_fast;
use super::dense;
use super::{IntLaurentPoly, PolyError};

/// Resultant of two Laurent polynomials, each first doteq-normalized to an
/// ordinary polynomial with non-zero constant term.
pub fn resultant(f: &IntLaurentPoly, g: &IntLaurentPoly) -> Result<BigInt, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    Ok(resultant_dense(&f.dense_normalized(), &g.dense_normalized()))
}

/// `R_k(h) = |Res(h, Φ_k)|`, the product of `|h(ζ)|` over primitive `k`-th roots.
pub fn resultant_with_cyclotomic(h: &IntLaurentPoly, k: u64) -> Result<BigInt, PolyError> {
    if k == 0 {
        return Err(PolyError::InvalidArgument("cyclotomic index must be positive".into()));
    }
    resultant(h, &cyclotomic_fast(k)).map(|r| r.abs())
}

/// `lc(q)^deg p * ∏ (t - α β)` over roots `α` of `p` and `β` of `q`, computed
/// as `Res_y(p(y), y^deg q · q(t/y))` at integer points and interpolated.
/// `p` must be a monic polynomial and `q` a polynomial (no negative exponents).
pub fn multiplicative_composition(p: &IntLaurentPoly, q: &IntLaurentPoly) -> Result<IntLaurentPoly, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    if p.low_exponent() < 0 || q.low_exponent() < 0 || !p.leading_coeff().is_one() {
        return Err(PolyError::InvalidArgument("expected a monic polynomial and a polynomial".into()));
    }
    let as_dense = |f: &IntLaurentPoly| {
        let mut v = vec![BigInt::zero(); f.low_exponent() as usize];
        v.extend_from_slice(f.coeffs());
        v
    };
    let (pd, qd) = (as_dense(p), as_dense(q));
    let (dp, dq) = (pd.len() - 1, qd.len() - 1);
    let values: Vec<BigInt> = (0..=dp * dq)
        .map(|t0| {
            let t0 = BigInt::from(t0);
            let mut b = vec![BigInt::zero(); dq + 1];
            let mut power = BigInt::one();
            for (j, c) in qd.iter().enumerate() {
                b[dq - j] = c * &power;
                power *= &t0;
            }
            let b = dense::trimmed(b);
            if b.is_empty() {
                BigInt::zero()
            } else {
                resultant_dense(&pd, &b)
            }
        })
        .collect();
    let coeffs = dense::interpolate_at_naturals(&values).expect("integer resultants interpolate integrally");
    Ok(IntLaurentPoly::new(0, coeffs))
}

/// Subresultant algorithm on non-zero dense polynomials.
pub(crate) fn resultant_dense(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert!(!a.is_empty() && !b.is_empty());
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let mut sign = BigInt::one();
    let mut da = a.len() - 1;
    let mut db = b.len() - 1;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if (da * db) % 2 == 1 {
            sign = -sign;
        }
    }
    if db == 0 {
        return sign * num_traits::pow(b[0].clone(), da);
    }
    let ca = dense::content(&a);
    let cb = dense::content(&b);
    a = a.iter().map(|x| x / &ca).collect();
    b = b.iter().map(|x| x / &cb).collect();
    let scale = num_traits::pow(ca, db) * num_traits::pow(cb, da);

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = dense::prem(&a, &b);
        a = b;
        if r.is_empty() {
            return BigInt::zero();
        }
        let div = &g * num_traits::pow(h.clone(), delta);
        b = r.iter().map(|x| x / &div).collect();
        g = dense::lc(&a);
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.len() == 1 {
            break;
        }
    }
    let da = a.len() - 1;
    let lb = b[0].clone();
    let h_final = if da == 0 {
        h
    } else {
        num_traits::pow(lb, da) / num_traits::pow(h, da - 1)
    };
    sign * scale * h_final
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_products() {
        let p = |c: &[i64]| IntLaurentPoly::from_coeffs(c);
        // roots of t^2 - t + 1 are primitive 6th roots; pairwise products give
        // two primitive cube roots and 1 twice.
        let phi6 = p(&[1, -1, 1]);
        let expect = &p(&[1, 1, 1]) * &p(&[-1, 1]).pow(2);
        assert_eq!(multiplicative_composition(&phi6, &phi6).unwrap(), expect);
        // {1, 2} x {3} -> (t - 3)(t - 6)
        assert_eq!(multiplicative_composition(&p(&[2, -3, 1]), &p(&[-3, 1])).unwrap(), p(&[18, -9, 1]));
        // a zero root survives
        assert_eq!(multiplicative_composition(&p(&[0, 1]), &p(&[-5, 1])).unwrap(), p(&[0, 1]));
    }
    use crate::polyring::cyclotomic;

    fn p(c: &[i64]) -> IntLaurentPoly {
        IntLaurentPoly::from_coeffs(c)
    }

    /// Sylvester determinant by fraction-free elimination, independent of
    /// the remainder sequence.
    fn sylvester(a: &[i64], b: &[i64]) -> BigInt {
        let m = a.len() - 1;
        let n = b.len() - 1;
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for i in 0..n {
            for (j, c) in a.iter().rev().enumerate() {
                mat[i][i + j] = BigInt::from(*c);
            }
        }
        for i in 0..m {
            for (j, c) in b.iter().rev().enumerate() {
                mat[n + i][i + j] = BigInt::from(*c);
            }
        }
        bareiss(mat)
    }

    fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    #[test]
    fn examples() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[1, 1])).unwrap(), BigInt::from(2));
        let r = resultant(&cyclotomic(10), &cyclotomic(2)).unwrap();
        assert_eq!(r.abs(), BigInt::from(5));
        // 7^φ(3): Φ21(ω) = 7 at both primitive cube roots.
        let r = resultant(&cyclotomic(21), &cyclotomic(3)).unwrap();
        assert_eq!(r.abs(), BigInt::from(49));
    }

    #[test]
    fn r_k_examples() {
        let phi10 = cyclotomic(10);
        assert_eq!(resultant_with_cyclotomic(&phi10, 2).unwrap(), BigInt::from(5));
        // Φ10(ζ5) = 2/(1+ζ5) and ∏(1+ζ5) = Φ5(-1) = 1.
        assert_eq!(resultant_with_cyclotomic(&phi10, 5).unwrap(), BigInt::from(16));
        assert_eq!(resultant_with_cyclotomic(&p(&[1, -1, 1]), 3).unwrap(), BigInt::from(4));
        assert_eq!(resultant_with_cyclotomic(&phi10, 10).unwrap(), BigInt::zero());
    }

    #[test]
    fn zero_input_rejected() {
        assert_eq!(resultant(&IntLaurentPoly::zero(), &p(&[1])), Err(PolyError::ZeroInput));
    }

    #[test]
    fn constant_arguments() {
        assert_eq!(resultant(&p(&[3]), &p(&[1, 0, 1])).unwrap(), BigInt::from(9));
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[-2])).unwrap(), BigInt::from(4));
    }

    #[test]
    fn agrees_with_sylvester() {
        let cases: &[(&[i64], &[i64])] = &[
            (&[1, 2, 3], &[4, 5]),
            (&[1, -1, 1, -1, 1], &[2, 0, 3]),
            (&[-3, 0, 0, 2, 1], &[1, 1, 1, 1]),
            (&[5, 4, 3, 2, 1], &[1, 2, 3, 4, 5, 6, 7]),
            (&[2, 0, 0, 0, 4], &[6, 0, 2]),
            (&[1, 1], &[1, 1, 5]),
        ];
        for (a, b) in cases {
            let expect = sylvester(a, b);
            assert_eq!(resultant(&p(a), &p(b)).unwrap(), expect, "{a:?} {b:?}");
        }
    }
}
