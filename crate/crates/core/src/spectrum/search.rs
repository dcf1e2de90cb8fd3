//! Search for positive multiples of `h` with prescribed augmentation.
//!
//! Coefficients of `f` are chosen from the top down while the remainder
//! `f_prefix mod h` is carried along Horner style, so a state is just
//! `(budget left, remainder)`. Trailing zero coefficients are allowed: since
//! `gcd(t, h) = 1` they do not change divisibility, and with them a state that
//! fails with `r` free positions also fails with fewer. The memo therefore
//! stores, per state, the largest number of positions already shown to fail.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::SpectrumError;
use crate::polyring::IntLaurentPoly;

/// `product = cofactor * h`, positive, with augmentation `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipCertificate {
    pub h: IntLaurentPoly,
    pub cofactor: IntLaurentPoly,
    pub product: IntLaurentPoly,
    pub n: u64,
}

impl MembershipCertificate {
    pub fn verify(&self) -> bool {
        self.product == &self.cofactor * &self.h
            && self.product.is_positive()
            && self.product.augmentation() == BigInt::from(self.n)
    }

    pub fn degree(&self) -> i64 {
        self.product.high_exponent()
    }

    /// Certificate for `n1 + n2`: `f1 + t^(deg f1 + 1) f2`.
    pub fn concatenate(&self, other: &MembershipCertificate) -> MembershipCertificate {
        assert_eq!(self.h, other.h, "certificates for different polynomials");
        let s = self.product.high_exponent() + 1 - other.product.low_exponent();
        MembershipCertificate {
            h: self.h.clone(),
            cofactor: &self.cofactor + &other.cofactor.shift(s),
            product: &self.product + &other.product.shift(s),
            n: self.n + other.n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SearchOutcome {
    Found(MembershipCertificate),
    NotFoundWithinBound,
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&MembershipCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            SearchOutcome::NotFoundWithinBound => None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Largest degree of `f` (after removing powers of `t`).
    pub deg_bound: usize,
    /// Memo entries allowed before giving up.
    pub max_states: usize,
}

impl SearchOptions {
    pub fn new(deg_bound: usize) -> Self {
        SearchOptions { deg_bound, max_states: crate::config::max_states() }
    }
}

pub fn find_certificate(h: &IntLaurentPoly, n: u64, deg_bound: usize) -> Result<SearchOutcome, SpectrumError> {
    find_certificate_with(h, n, SearchOptions::new(deg_bound))
}

pub fn find_certificate_with(
    h: &IntLaurentPoly,
    n: u64,
    opts: SearchOptions,
) -> Result<SearchOutcome, SpectrumError> {
    if n == 0 {
        return Err(SpectrumError::InvalidArgument("n must be positive".into()));
    }
    if h.is_zero() {
        return Ok(SearchOutcome::NotFoundWithinBound);
    }
    let hn = h.normalize();
    // t(c g) = c t(g)
    let content = hn.content();
    let Some(scale) = content.to_u64().filter(|c| n.is_multiple_of(*c)) else {
        return Ok(SearchOutcome::NotFoundWithinBound);
    };
    let (hn, n_inner) = (hn.primitive_part(), n / scale);
    let coeffs = if hn.span() == 0 {
        Some(vec![n_inner])
    } else {
        match search_monic_i128(&hn, n_inner, opts) {
            Ok(found) => found,
            Err(Abort::Overflow) => {
                let red = RationalReducer::new(&hn);
                run(&red, hn.span(), n_inner, opts).map_err(|a| a.into_error(opts))?
            }
            Err(a) => return Err(a.into_error(opts)),
        }
    };
    let Some(top_down) = coeffs else {
        return Ok(SearchOutcome::NotFoundWithinBound);
    };
    let mut low_first: Vec<BigInt> = top_down.into_iter().rev().map(|c| BigInt::from(c * scale)).collect();
    let lead_zeros = low_first.iter().take_while(|c| c.is_zero()).count();
    low_first.drain(..lead_zeros);
    let product = IntLaurentPoly::new(0, low_first);
    let cofactor = product.divide_exact(h).expect("search returns multiples of h");
    let cert = MembershipCertificate { h: h.clone(), cofactor, product, n };
    debug_assert!(cert.verify());
    Ok(SearchOutcome::Found(cert))
}

fn search_monic_i128(hn: &IntLaurentPoly, n: u64, opts: SearchOptions) -> Result<Option<Vec<u64>>, Abort> {
    match I128Reducer::new(hn) {
        Some(red) => run(&red, hn.span(), n, opts),
        None => Err(Abort::Overflow),
    }
}

#[derive(Debug)]
enum Abort {
    Overflow,
    Budget(usize),
}

impl Abort {
    fn into_error(self, opts: SearchOptions) -> SpectrumError {
        match self {
            Abort::Budget(states) => SpectrumError::StateBudgetExceeded { states },
            Abort::Overflow => SpectrumError::StateBudgetExceeded { states: opts.max_states },
        }
    }
}

/// Remainder arithmetic modulo a fixed `h`.
trait Reducer {
    type R: Clone;
    fn start(&self) -> Self::R;
    /// `t * r + c mod h`; `None` on overflow.
    fn push(&self, r: &Self::R, c: u64) -> Option<Self::R>;
    fn is_zero(&self, r: &Self::R) -> bool;
    fn encode(&self, r: &Self::R, out: &mut Vec<u8>);
}

fn put_varint(out: &mut Vec<u8>, mut v: u128) {
    loop {
        let b = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(b);
            return;
        }
        out.push(b | 0x80);
    }
}

fn zigzag(v: i128) -> u128 {
    ((v << 1) ^ (v >> 127)) as u128
}

/// Monic `h` with machine-word remainders.
struct I128Reducer {
    h: Vec<i128>,
}

impl I128Reducer {
    fn new(hn: &IntLaurentPoly) -> Option<Self> {
        if !hn.leading_coeff().is_one() {
            return None;
        }
        let h = hn.coeffs().iter().map(|c| c.to_i128()).collect::<Option<Vec<_>>>()?;
        Some(I128Reducer { h })
    }
}

impl Reducer for I128Reducer {
    type R = Vec<i128>;

    fn start(&self) -> Vec<i128> {
        vec![0; self.h.len() - 1]
    }

    fn push(&self, r: &Vec<i128>, c: u64) -> Option<Vec<i128>> {
        let m = r.len();
        let top = r[m - 1];
        let mut out = Vec::with_capacity(m);
        for j in 0..m {
            let below = if j == 0 { c as i128 } else { r[j - 1] };
            out.push(below.checked_sub(top.checked_mul(self.h[j])?)?);
        }
        if out.iter().any(|v| v.unsigned_abs() > (1u128 << 100)) {
            return None;
        }
        Some(out)
    }

    fn is_zero(&self, r: &Vec<i128>) -> bool {
        r.iter().all(|&v| v == 0)
    }

    fn encode(&self, r: &Vec<i128>, out: &mut Vec<u8>) {
        for &v in r {
            put_varint(out, zigzag(v));
        }
    }
}

/// Any `h`, remainders over the rationals after dividing `h` by its leading
/// coefficient.
struct RationalReducer {
    h: Vec<BigRational>,
}

impl RationalReducer {
    fn new(hn: &IntLaurentPoly) -> Self {
        let lc = hn.leading_coeff();
        let h = hn.coeffs().iter().map(|c| BigRational::new(c.clone(), lc.clone())).collect();
        RationalReducer { h }
    }
}

impl Reducer for RationalReducer {
    type R = Vec<BigRational>;

    fn start(&self) -> Vec<BigRational> {
        vec![BigRational::zero(); self.h.len() - 1]
    }

    fn push(&self, r: &Vec<BigRational>, c: u64) -> Option<Vec<BigRational>> {
        let m = r.len();
        let top = &r[m - 1];
        let out = (0..m)
            .map(|j| {
                let below = if j == 0 { BigRational::from_integer(BigInt::from(c)) } else { r[j - 1].clone() };
                below - top * &self.h[j]
            })
            .collect();
        Some(out)
    }

    fn is_zero(&self, r: &Vec<BigRational>) -> bool {
        r.iter().all(Zero::is_zero)
    }

    fn encode(&self, r: &Vec<BigRational>, out: &mut Vec<u8>) {
        for v in r {
            for part in [v.numer(), v.denom()] {
                let bytes = part.to_signed_bytes_le();
                put_varint(out, bytes.len() as u128);
                out.extend_from_slice(&bytes);
            }
            if v.is_negative() {
                out.push(1);
            }
        }
    }
}

struct Searcher<'a, Red: Reducer> {
    red: &'a Red,
    memo: HashMap<Box<[u8]>, u32>,
    max_states: usize,
    path: Vec<u64>,
}

impl<Red: Reducer> Searcher<'_, Red> {
    fn key(&self, budget: u64, r: &Red::R) -> Box<[u8]> {
        let mut out = Vec::with_capacity(16);
        put_varint(&mut out, budget as u128);
        self.red.encode(r, &mut out);
        out.into_boxed_slice()
    }

    /// Can `rem` more coefficients summing to `budget` take `r` to zero?
    fn dfs(&mut self, r: &Red::R, budget: u64, rem: u32) -> Result<bool, Abort> {
        if budget == 0 {
            return Ok(self.red.is_zero(r));
        }
        if rem == 0 {
            return Ok(false);
        }
        let key = self.key(budget, r);
        if self.memo.get(&key).is_some_and(|&failed| failed >= rem) {
            return Ok(false);
        }
        for c in 0..=budget {
            let next = self.red.push(r, c).ok_or(Abort::Overflow)?;
            self.path.push(c);
            if self.dfs(&next, budget - c, rem - 1)? {
                return Ok(true);
            }
            self.path.pop();
        }
        if self.memo.len() >= self.max_states {
            return Err(Abort::Budget(self.memo.len()));
        }
        let slot = self.memo.entry(key).or_insert(0);
        *slot = (*slot).max(rem);
        Ok(false)
    }
}

/// Coefficients of a minimal-degree positive multiple, leading one first.
fn run<Red: Reducer>(red: &Red, deg_h: usize, n: u64, opts: SearchOptions) -> Result<Option<Vec<u64>>, Abort> {
    let mut s = Searcher { red, memo: HashMap::new(), max_states: opts.max_states, path: Vec::new() };
    let start = red.start();
    for d in deg_h..=opts.deg_bound {
        for lead in 1..=n {
            let r = red.push(&start, lead).ok_or(Abort::Overflow)?;
            s.path.clear();
            s.path.push(lead);
            if s.dfs(&r, n - lead, d as u32)? {
                let mut coeffs = std::mem::take(&mut s.path);
                coeffs.resize(d + 1, 0);
                return Ok(Some(coeffs));
            }
        }
    }
    Ok(None)
}
