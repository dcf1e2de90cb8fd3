use std::cmp::{max, Ordering};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense;
use super::PolyError;

/// One-variable Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Stored densely from `low` upward. The zero polynomial has no coefficients
/// and `low == 0`; otherwise the first and last stored coefficients are
/// non-zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntLaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl IntLaurentPoly {
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = IntLaurentPoly { low, coeffs };
        p.canonicalize();
        p
    }

    /// Ordinary polynomial from `i64` coefficients, constant term first.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::new(0, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_laurent(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntLaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(0, vec![c])
    }

    pub fn monomial(c: BigInt, exponent: i64) -> Self {
        Self::new(exponent, vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `t^k - 1` for `k >= 1`.
    pub fn t_pow_minus_one(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] = -BigInt::one();
        c[k] = BigInt::one();
        Self::new(0, c)
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn low_exponent(&self) -> i64 {
        self.low
    }

    pub fn high_exponent(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.low + self.coeffs.len() as i64 - 1
        }
    }

    /// Coefficients from the lowest exponent upward.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Difference between the highest and lowest exponent; this is the degree
    /// of the doteq-normalized representative. Zero for the zero polynomial.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// True when the polynomial is `c * t^k`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Coefficient of `t^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn trailing_coeff(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        IntLaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Doteq representative: lowest exponent 0 and positive leading coefficient.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let sign = if self.leading_coeff().is_negative() { -1 } else { 1 };
        let coeffs = if sign < 0 {
            self.coeffs.iter().map(|c| -c).collect()
        } else {
            self.coeffs.clone()
        };
        IntLaurentPoly { low: 0, coeffs }
    }

    /// Equality up to a unit `±t^k`.
    pub fn is_doteq(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// `f(t^-1)`.
    pub fn reciprocal(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(-self.high_exponent(), c)
    }

    /// True when `f(t) ≐ f(t^-1)`.
    pub fn is_symmetric(&self) -> bool {
        self.is_doteq(&self.reciprocal())
    }

    pub fn content(&self) -> BigInt {
        dense::content(&self.coeffs)
    }

    /// Content removed, sign preserved.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self::new(self.low, self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Sum of all coefficients, i.e. `f(1)`.
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Positive means non-zero with every coefficient non-negative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exact value at an integer point; negative exponents make it rational.
    pub fn eval_int(&self, x: &BigInt) -> Result<BigRational, PolyError> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if x.is_zero() {
            if self.low < 0 {
                return Err(PolyError::ZeroArgument);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let body = dense::eval(&self.coeffs, x);
        let r = BigRational::from_integer(body);
        let xr = BigRational::from_integer(x.clone());
        Ok(if self.low >= 0 {
            r * num_traits::pow(xr, self.low as usize)
        } else {
            r / num_traits::pow(xr, (-self.low) as usize)
        })
    }

    /// Exact integer value; requires a polynomial (no negative exponents) or `|x| = 1`.
    pub fn eval_integer(&self, x: &BigInt) -> Result<BigInt, PolyError> {
        let v = self.eval_int(x)?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(PolyError::NotIntegral)
        }
    }

    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let coeffs: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(self.low + i as i64))
            .collect();
        Self::new(self.low - 1, coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact quotient in the Laurent ring.
    pub fn divide_exact(&self, b: &Self) -> Result<Self, PolyError> {
        if b.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let q = dense::div_exact(&self.coeffs, &b.coeffs).ok_or(PolyError::NotDivisible)?;
        Ok(Self::new(self.low - b.low, q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.divide_exact(self).is_ok()
    }

    /// Coefficients of the normalized representative as an ordinary polynomial.
    pub(crate) fn dense_normalized(&self) -> Vec<BigInt> {
        self.normalize().coeffs
    }

    pub(crate) fn from_dense(coeffs: Vec<BigInt>) -> Self {
        Self::new(0, coeffs)
    }

    /// Coefficients as `i64` when they all fit.
    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    /// Maximum absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

impl Default for IntLaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntLaurentPoly({})", self)
    }
}

impl fmt::Display for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{}", e),
            };
            if var.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", var)?;
            } else {
                write!(f, "{}*{}", mag, var)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a IntLaurentPoly> for &'a IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(self, rhs: &'a IntLaurentPoly) -> IntLaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = max(self.high_exponent(), rhs.high_exponent());
        let mut c = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[(self.low - low) as usize + i] += x;
        }
        for (i, x) in rhs.coeffs.iter().enumerate() {
            c[(rhs.low - low) as usize + i] += x;
        }
        IntLaurentPoly::new(low, c)
    }
}

impl<'a> Sub<&'a IntLaurentPoly> for &'a IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn sub(self, rhs: &'a IntLaurentPoly) -> IntLaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> IntLaurentPoly {
        IntLaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a IntLaurentPoly> for &'a IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: &'a IntLaurentPoly) -> IntLaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntLaurentPoly::zero();
        }
        IntLaurentPoly::new(self.low + rhs.low, dense::mul(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntLaurentPoly> for IntLaurentPoly {
            type Output = IntLaurentPoly;
            fn $m(self, rhs: IntLaurentPoly) -> IntLaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a IntLaurentPoly> for IntLaurentPoly {
            type Output = IntLaurentPoly;
            fn $m(self, rhs: &'a IntLaurentPoly) -> IntLaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> IntLaurentPoly {
        -&self
    }
}

impl PartialOrd for IntLaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by span, then lowest exponent, then coefficients; used only for
/// deterministic sorting of factor lists.
impl Ord for IntLaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.span()
            .cmp(&other.span())
            .then(self.low.cmp(&other.low))
            .then_with(|| {
                for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
                    let o = a.cmp(b);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

impl serde::Serialize for IntLaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for IntLaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
