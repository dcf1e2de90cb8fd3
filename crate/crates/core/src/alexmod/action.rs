//! `Z^d` with `t` acting by an integer matrix.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::linalg;
use super::presentation::{LaurentMatrix, ModulePresentation};
use super::AlexError;
use crate::polyring::{dense, IntLaurentPoly};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, AlexError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlexError::DimensionMismatch("ragged rows".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.iter().flatten().map(|&v| BigInt::from(v)).collect() })
    }

    pub fn from_big(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, AlexError> {
        if data.len() != rows * cols {
            return Err(AlexError::DimensionMismatch(format!("{} entries for {rows}x{cols}", data.len())));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigInt::one();
        }
        IntMatrix { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = vec![BigInt::zero(); rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        data[(i * other.rows + k) * cols + j * other.cols + l] = a * other.get(k, l);
                    }
                }
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn determinant(&self) -> Result<BigInt, AlexError> {
        if !self.is_square() {
            return Err(AlexError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(linalg::determinant(self.row_vecs()))
    }

    fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.cols.max(1)).map(<[BigInt]>::to_vec).take(self.rows).collect()
    }

    /// `det(tI - S)`, from exact determinants at `t = 0..=d` and interpolation.
    pub fn characteristic_polynomial(&self) -> Result<IntLaurentPoly, AlexError> {
        if !self.is_square() {
            return Err(AlexError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let values: Vec<BigInt> = (0..=n)
            .map(|x| {
                let x = BigInt::from(x);
                let mut rows = self.row_vecs();
                for (i, row) in rows.iter_mut().enumerate() {
                    for (j, v) in row.iter_mut().enumerate() {
                        *v = if i == j { &x - &*v } else { -&*v };
                    }
                }
                linalg::determinant(rows)
            })
            .collect();
        let coeffs = dense::interpolate_at_naturals(&values).expect("determinants interpolate integrally");
        Ok(IntLaurentPoly::new(0, coeffs))
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect();
        rows.serialize(s)
    }
}

/// Companion matrix of a monic `h`: ones below the diagonal and `-c_i` in the
/// last column, so that its characteristic polynomial is `h`.
pub fn companion(h: &IntLaurentPoly) -> Result<IntMatrix, AlexError> {
    let hn = h.normalize();
    if hn.span() == 0 || !hn.leading_coeff().is_one() {
        return Err(AlexError::NotMonic);
    }
    let d = hn.span();
    let mut data = vec![BigInt::zero(); d * d];
    for i in 1..d {
        data[i * d + i - 1] = BigInt::one();
    }
    for i in 0..d {
        data[i * d + d - 1] = -hn.coeff(i as i64);
    }
    Ok(IntMatrix { rows: d, cols: d, data })
}

/// `S ⊗ ... ⊗ S` (`m` factors).
pub fn kronecker_power(s: &IntMatrix, m: u32) -> Result<IntMatrix, AlexError> {
    if !s.is_square() {
        return Err(AlexError::NotSquare { rows: s.rows, cols: s.cols });
    }
    if m == 0 {
        return Err(AlexError::InvalidArgument("tensor power must be positive".into()));
    }
    let cap = crate::config::KRONECKER_DIM_CAP;
    let dim = (s.rows as u128).checked_pow(m).filter(|&d| d <= cap as u128);
    if dim.is_none() {
        return Err(AlexError::DimensionOverflow { base: s.rows, power: m, cap });
    }
    let mut out = s.clone();
    for _ in 1..m {
        out = out.kronecker(s);
    }
    Ok(out)
}

/// Characteristic polynomial of `S^{⊗m}`, i.e. `Δ_0` of the `m`-th tensor
/// power of the module.
pub fn tensor_alexander(s: &IntMatrix, m: u32) -> Result<IntLaurentPoly, AlexError> {
    kronecker_power(s, m)?.characteristic_polynomial()
}

/// `Z^d` with `t` acting as `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntActionModule {
    pub action: IntMatrix,
    /// `det S != 0`; otherwise `t` is not invertible and this is not a
    /// genuine module over the Laurent ring.
    pub invertible: bool,
}

impl IntActionModule {
    pub fn new(action: IntMatrix) -> Result<Self, AlexError> {
        let det = action.determinant()?;
        Ok(IntActionModule { action, invertible: !det.is_zero() })
    }

    pub fn companion(h: &IntLaurentPoly) -> Result<Self, AlexError> {
        Self::new(companion(h)?)
    }

    pub fn dimension(&self) -> usize {
        self.action.rows
    }

    /// `tI - S`, with the generators as rows.
    pub fn presentation(&self) -> ModulePresentation {
        let d = self.dimension();
        let entries = (0..d)
            .flat_map(|i| {
                (0..d).map(move |j| {
                    let s = IntLaurentPoly::constant(-self.action.get(i, j));
                    if i == j {
                        &s + &IntLaurentPoly::t()
                    } else {
                        s
                    }
                })
            })
            .collect();
        ModulePresentation::new(LaurentMatrix::new(d, d, entries).expect("square"))
    }

    pub fn element(&self, vector: Vec<BigInt>) -> Result<ModuleElement, AlexError> {
        if vector.len() != self.dimension() {
            return Err(AlexError::DimensionMismatch(format!(
                "vector of length {} in a module of dimension {}",
                vector.len(),
                self.dimension()
            )));
        }
        Ok(ModuleElement { context: self.clone(), vector })
    }

    /// `f(S) v`.
    pub fn act(&self, f: &IntLaurentPoly, v: &[BigInt]) -> Result<Vec<BigInt>, AlexError> {
        if f.low_exponent() < 0 && !self.invertible {
            return Err(AlexError::InvalidArgument("negative powers of a singular action".into()));
        }
        if f.is_zero() {
            return Ok(vec![BigInt::zero(); v.len()]);
        }
        // Horner on the polynomial part, then the negative shift by solving.
        let mut acc = vec![BigInt::zero(); v.len()];
        for c in f.coeffs().iter().rev() {
            acc = self.action.mul_vec(&acc);
            for (a, x) in acc.iter_mut().zip(v) {
                *a += c * x;
            }
        }
        let low = f.low_exponent();
        if low > 0 {
            for _ in 0..low {
                acc = self.action.mul_vec(&acc);
            }
        } else if low < 0 {
            // Only used to test for zero, which S^k preserves when S is invertible.
            if acc.iter().all(Zero::is_zero) {
                return Ok(acc);
            }
            return Err(AlexError::InvalidArgument("negative exponents only supported for annihilation".into()));
        }
        Ok(acc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleElement {
    pub context: IntActionModule,
    #[serde(serialize_with = "big_vec_as_strings")]
    pub vector: Vec<BigInt>,
}

fn big_vec_as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
}

/// A positive `f` with `f · m = 0` and `ε(f) = n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleCertificate {
    pub f: IntLaurentPoly,
    pub n: u64,
}

impl ModuleCertificate {
    pub fn verify(&self, m: &ModuleElement) -> bool {
        self.f.is_positive()
            && self.f.augmentation() == BigInt::from(self.n)
            && m.context.act(&self.f, &m.vector).is_ok_and(|v| v.iter().all(Zero::is_zero))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ModuleSearchOutcome {
    Found(ModuleCertificate),
    NotFoundWithinBound,
}

impl ModuleSearchOutcome {
    pub fn certificate(&self) -> Option<&ModuleCertificate> {
        match self {
            ModuleSearchOutcome::Found(c) => Some(c),
            ModuleSearchOutcome::NotFoundWithinBound => None,
        }
    }
}

pub fn module_spectrum_membership(
    m: &ModuleElement,
    n: u64,
    deg_bound: usize,
) -> Result<ModuleSearchOutcome, AlexError> {
    module_spectrum_membership_with(m, n, deg_bound, crate::config::max_states())
}

/// Minimal-degree search, top coefficient first: `acc <- S acc + c m`.
/// As in the polynomial search, trailing zero coefficients are allowed, so a
/// state `(budget, acc)` that fails with `r` free positions fails with fewer.
pub fn module_spectrum_membership_with(
    m: &ModuleElement,
    n: u64,
    deg_bound: usize,
    max_states: usize,
) -> Result<ModuleSearchOutcome, AlexError> {
    if n == 0 {
        return Err(AlexError::InvalidArgument("n must be positive".into()));
    }
    let mut s = ModuleSearch { s: &m.context.action, m: &m.vector, memo: HashMap::new(), max_states, path: Vec::new() };
    let zero = vec![BigInt::zero(); m.vector.len()];
    for d in 0..=deg_bound {
        for lead in 1..=n {
            let acc = s.step(&zero, lead);
            s.path.clear();
            s.path.push(lead);
            if s.dfs(&acc, n - lead, d as u32)? {
                let mut top_down = std::mem::take(&mut s.path);
                top_down.resize(d + 1, 0);
                let coeffs: Vec<BigInt> = top_down.into_iter().rev().map(BigInt::from).collect();
                let cert = ModuleCertificate { f: IntLaurentPoly::new(0, coeffs), n };
                debug_assert!(cert.verify(m));
                return Ok(ModuleSearchOutcome::Found(cert));
            }
        }
    }
    Ok(ModuleSearchOutcome::NotFoundWithinBound)
}

struct ModuleSearch<'a> {
    s: &'a IntMatrix,
    m: &'a [BigInt],
    memo: HashMap<Box<[u8]>, u32>,
    max_states: usize,
    path: Vec<u64>,
}

impl ModuleSearch<'_> {
    fn step(&self, acc: &[BigInt], c: u64) -> Vec<BigInt> {
        let mut out = self.s.mul_vec(acc);
        if c != 0 {
            let c = BigInt::from(c);
            for (o, x) in out.iter_mut().zip(self.m) {
                *o += &c * x;
            }
        }
        out
    }

    fn key(budget: u64, acc: &[BigInt]) -> Box<[u8]> {
        let mut out = budget.to_le_bytes().to_vec();
        for v in acc {
            let b = v.to_signed_bytes_le();
            out.push(b.len() as u8);
            out.extend_from_slice(&b);
        }
        out.into_boxed_slice()
    }

    fn dfs(&mut self, acc: &[BigInt], budget: u64, rem: u32) -> Result<bool, AlexError> {
        if budget == 0 {
            // the remaining positions are zeros: acc <- S^rem acc
            let mut v = acc.to_vec();
            for _ in 0..=rem {
                if v.iter().all(Zero::is_zero) {
                    return Ok(true);
                }
                v = self.s.mul_vec(&v);
            }
            return Ok(false);
        }
        if rem == 0 {
            return Ok(false);
        }
        let key = Self::key(budget, acc);
        if self.memo.get(&key).is_some_and(|&failed| failed >= rem) {
            return Ok(false);
        }
        for c in 0..=budget {
            let next = self.step(acc, c);
            self.path.push(c);
            if self.dfs(&next, budget - c, rem - 1)? {
                return Ok(true);
            }
            self.path.pop();
        }
        if self.memo.len() >= self.max_states {
            return Err(AlexError::StateBudgetExceeded { states: self.memo.len() });
        }
        let slot = self.memo.entry(key).or_insert(0);
        *slot = (*slot).max(rem);
        Ok(false)
    }
}
