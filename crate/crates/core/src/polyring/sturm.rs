//! Exact positive-real-root detection with Sturm sequences.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::dense;
use super::{IntLaurentPoly, PolyError};

/// Sturm chain `p, p', -rem(p, p'), ...` computed with sign-preserving
/// pseudo-remainders and content removal.
pub(crate) fn sturm_chain(p: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut chain = vec![p.to_vec()];
    let d = dense::derivative(p);
    if d.is_empty() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        let mut r = dense::prem(a, b);
        if r.is_empty() {
            break;
        }
        // prem multiplies by lc(b)^(δ+1); undo a negative factor.
        let delta = a.len() - b.len();
        if dense::lc(b).is_negative() && (delta + 1) % 2 == 1 {
            r = dense::neg(&r);
        }
        let c = dense::content(&r);
        let r: Vec<BigInt> = r.iter().map(|x| -(x / &c)).collect();
        chain.push(r);
    }
    chain
}

fn sign_changes<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Number of distinct real roots in the open interval `(0, ∞)`.
pub fn count_positive_roots(h: &IntLaurentPoly) -> Result<usize, PolyError> {
    if h.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    // Normalized form has a non-zero constant term, so 0 is not a root.
    let p = h.dense_normalized();
    if p.len() == 1 {
        return Ok(0);
    }
    let chain = sturm_chain(&p);
    let at_zero = sign_changes(chain.iter().map(|q| sign_of(&q[0])));
    let at_inf = sign_changes(chain.iter().map(|q| sign_of(&dense::lc(q))));
    Ok(at_zero - at_inf)
}

pub fn has_positive_real_root(h: &IntLaurentPoly) -> Result<bool, PolyError> {
    Ok(count_positive_roots(h)? > 0)
}
