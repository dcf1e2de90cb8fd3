//! Fraction-free (Bareiss) elimination over `Z` and `Z[t]`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polyring::dense;

/// Integral domain with exact division, as far as Bareiss needs it.
pub(crate) trait Domain: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / o`, which the caller guarantees to be exact.
    fn div_exact(&self, o: &Self) -> Self;
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % o)));
        self / o
    }
}

/// Dense polynomial in `Z[t]`, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ZPoly(pub Vec<BigInt>);

impl Domain for ZPoly {
    fn zero() -> Self {
        ZPoly(Vec::new())
    }
    fn one() -> Self {
        ZPoly(vec![<BigInt as One>::one()])
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn mul(&self, o: &Self) -> Self {
        ZPoly(dense::mul(&self.0, &o.0))
    }
    fn sub(&self, o: &Self) -> Self {
        ZPoly(dense::sub(&self.0, &o.0))
    }
    fn neg(&self) -> Self {
        ZPoly(dense::neg(&self.0))
    }
    fn div_exact(&self, o: &Self) -> Self {
        ZPoly(dense::div_exact(&self.0, &o.0).expect("Bareiss division is exact"))
    }
}

/// Determinant of a square matrix given as rows.
pub(crate) fn determinant<T: Domain>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Rank over the fraction field.
pub(crate) fn rank<T: Domain>(mut a: Vec<Vec<T>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut r = 0;
    for k in 0..rows.min(cols) {
        let pivot = (k..rows).flat_map(|i| (k..cols).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        let Some((pi, pj)) = pivot else { break };
        a.swap(pi, k);
        for row in a.iter_mut() {
            row.swap(pj, k);
        }
        for i in k + 1..rows {
            for j in k + 1..cols {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev);
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(determinant(m(&[&[2, 0], &[0, 3]])), BigInt::from(6));
        assert_eq!(determinant(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), BigInt::from(-3));
        assert_eq!(determinant(m(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        assert_eq!(determinant::<BigInt>(Vec::new()), BigInt::from(1));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[0, 0, 1], &[0, 0, 2]])), 1);
        assert_eq!(rank(m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]])), 2);
        assert_eq!(rank(m(&[&[0]])), 0);
    }

    #[test]
    fn polynomial_determinant() {
        // det [[t, -1], [1, t + 1]] = t^2 + t + 1
        let p = |c: &[i64]| ZPoly(dense::from_i64(c));
        let a = vec![vec![p(&[0, 1]), p(&[-1])], vec![p(&[1]), p(&[1, 1])]];
        assert_eq!(determinant(a), p(&[1, 1, 1]));
    }
}
