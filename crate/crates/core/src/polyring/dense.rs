//! Dense coefficient-vector helpers for ordinary integer polynomials.
//!
//! Vectors are stored constant term first and kept trimmed (no trailing
//! zeros); the empty vector is the zero polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub fn trimmed(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    v
}

pub fn lc(a: &[BigInt]) -> BigInt {
    a.last().cloned().unwrap_or_else(BigInt::zero)
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut s = BigInt::zero();
        if i < a.len() {
            s += &a[i];
        }
        if i < b.len() {
            s += &b[i];
        }
        out.push(s);
    }
    trimmed(out)
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut s = BigInt::zero();
        if i < a.len() {
            s += &a[i];
        }
        if i < b.len() {
            s -= &b[i];
        }
        out.push(s);
    }
    trimmed(out)
}

pub fn neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|c| -c).collect()
}

pub fn scale(a: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trimmed(out)
}


pub fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn derivative(a: &[BigInt]) -> Vec<BigInt> {
    trimmed(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

/// Non-negative gcd of all coefficients; zero for the zero polynomial.
pub fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if lc(a).is_negative() {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Exact quotient `a / b` over the integers, or `None` when `b` does not divide `a`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let top = &r[i + db];
        if top.is_zero() {
            continue;
        }
        let (qi, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &qi * bj;
        }
        q[i] = qi;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(trimmed(q))
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r`.
pub fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(!b.is_empty());
    if a.len() < b.len() {
        return a.to_vec();
    }
    let db = b.len() - 1;
    let lb = lc(b);
    let mut r = a.to_vec();
    let steps = a.len() - db;
    let mut remaining = steps;
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let lr = lc(&r);
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &lr * bj;
        }
        trim(&mut r);
        remaining -= 1;
    }
    if remaining > 0 {
        let f = num_traits::pow(lb, remaining);
        r = scale(&r, &f);
    }
    r
}

/// Gcd over `Z[t]` by the primitive remainder sequence; primitive part has
/// positive leading coefficient, times the gcd of contents.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return primitive_times(b, &content(b));
    }
    if b.is_empty() {
        return primitive_times(a, &content(a));
    }
    let c = content(a).gcd(&content(b));
    let mut u = primitive(a);
    let mut v = primitive(b);
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        let r = prem(&u, &v);
        u = v;
        v = if r.is_empty() { r } else { primitive(&r) };
    }
    scale(&primitive(&u), &c)
}

fn primitive_times(a: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    scale(&primitive(a), c)
}

#[cfg(test)]
pub fn from_i64(c: &[i64]) -> Vec<BigInt> {
    trimmed(c.iter().map(|&x| BigInt::from(x)).collect())
}

/// The polynomial of degree `< values.len()` taking `values[x]` at
/// `x = 0, 1, 2, ...`, when its coefficients are integers.
pub fn interpolate_at_naturals(values: &[BigInt]) -> Option<Vec<BigInt>> {
    use num_rational::BigRational;
    let n = values.len();
    let mut diffs: Vec<BigInt> = values.to_vec();
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); n.max(1)];
    // basis = x (x - 1) ... (x - k + 1) / k!
    let mut basis: Vec<BigRational> = vec![BigRational::one()];
    for k in 0..n {
        let lead = BigRational::from_integer(diffs[0].clone());
        for (i, b) in basis.iter().enumerate() {
            acc[i] += &lead * b;
        }
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
        let kk = BigRational::from_integer(BigInt::from(k as u64));
        let denom = BigRational::from_integer(BigInt::from(k as u64 + 1));
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b / &denom;
            next[i] -= b * &kk / &denom;
        }
        basis = next;
    }
    let out: Option<Vec<BigInt>> =
        acc.into_iter().map(|c| if c.is_integer() { Some(c.to_integer()) } else { None }).collect();
    out.map(trimmed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation() {
        let f = from_i64(&[3, -2, 0, 5]);
        let values: Vec<BigInt> = (0..6).map(|x| eval(&f, &BigInt::from(x))).collect();
        assert_eq!(interpolate_at_naturals(&values), Some(f));
        let half: Vec<BigInt> = (0..3).map(|x: i64| BigInt::from(x * (x - 1) / 2)).collect();
        assert_eq!(interpolate_at_naturals(&half[..2]), Some(from_i64(&[0])));
        assert_eq!(interpolate_at_naturals(&[BigInt::from(0), BigInt::from(0), BigInt::from(1)]), None);
    }

    #[test]
    fn prem_matches_definition() {
        let a = from_i64(&[1, 2, 3, 4]);
        let b = from_i64(&[1, 0, 2]);
        let r = prem(&a, &b);
        // 2^2 * a = q*b + r with deg r < 2
        assert!(r.len() < 2 || r.len() <= 2);
        let lhs = scale(&a, &BigInt::from(4));
        let diff = sub(&lhs, &r);
        assert!(div_exact(&diff, &b).is_some());
    }

    #[test]
    fn gcd_of_products() {
        let f = from_i64(&[-1, 1]);
        let g = from_i64(&[1, 1, 1]);
        let a = mul(&mul(&f, &g), &from_i64(&[2]));
        let b = mul(&mul(&f, &from_i64(&[3, 1])), &from_i64(&[4]));
        assert_eq!(gcd(&a, &b), mul(&f, &from_i64(&[2])));
    }
}
