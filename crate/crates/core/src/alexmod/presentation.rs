use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use super::linalg::{self, ZPoly};
use super::AlexError;
use crate::polyring::{gcd, parse_poly, IntLaurentPoly};

/// Dense matrix over `Z[t^±1]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<IntLaurentPoly>,
}

impl LaurentMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<IntLaurentPoly>) -> Result<Self, AlexError> {
        if entries.len() != rows * cols {
            return Err(AlexError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(LaurentMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<IntLaurentPoly>>) -> Result<Self, AlexError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlexError::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, entries: vec![IntLaurentPoly::zero(); rows * cols] }
    }

    pub fn diagonal(d: &[IntLaurentPoly]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in d.iter().enumerate() {
            m.entries[i * n + i] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &IntLaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Appends columns (extra relations).
    pub fn with_columns(&self, extra: &LaurentMatrix) -> Result<Self, AlexError> {
        if extra.rows != self.rows {
            return Err(AlexError::DimensionMismatch("column block has the wrong height".into()));
        }
        let cols = self.cols + extra.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend_from_slice(&self.entries[i * self.cols..(i + 1) * self.cols]);
            entries.extend_from_slice(&extra.entries[i * extra.cols..(i + 1) * extra.cols]);
        }
        Self::new(self.rows, cols, entries)
    }

    /// Rows as `Z[t]` polynomials; each row is multiplied by a power of `t`,
    /// which changes minors only by units.
    fn polynomial_rows(&self) -> Vec<Vec<ZPoly>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.entries[i * self.cols..(i + 1) * self.cols];
                let low = row.iter().filter(|e| !e.is_zero()).map(|e| e.low_exponent()).min().unwrap_or(0);
                row.iter().map(|e| ZPoly(dense_at_least_zero(&e.shift(-low)))).collect()
            })
            .collect()
    }
}

fn dense_at_least_zero(p: &IntLaurentPoly) -> Vec<num_bigint::BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut v = vec![num_bigint::BigInt::from(0); p.low_exponent() as usize];
    v.extend_from_slice(p.coeffs());
    v
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = (0..self.cols).map(|j| self.get(i, j).to_string()).join("; ");
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// One row per line, entries separated by `;`. Blank lines and lines
/// starting with `#` are skipped.
impl FromStr for LaurentMatrix {
    type Err = AlexError;
    fn from_str(s: &str) -> Result<Self, AlexError> {
        let mut rows = Vec::new();
        for (lineno, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split(';')
                .map(|e| {
                    parse_poly(e).map_err(|err| AlexError::Parse(format!("line {}: {err}", lineno + 1)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Self::from_rows(rows)
    }
}

/// Presentation `Λ^m -> Λ^n -> M -> 0`: rows are generators, columns relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModulePresentation {
    pub matrix: LaurentMatrix,
}

impl ModulePresentation {
    pub fn new(matrix: LaurentMatrix) -> Self {
        ModulePresentation { matrix }
    }

    pub fn generators(&self) -> usize {
        self.matrix.rows
    }

    pub fn relations(&self) -> usize {
        self.matrix.cols
    }

    /// Generators minus the rank of the matrix over `Q(t)`.
    pub fn rank(&self) -> usize {
        self.generators() - linalg::rank(self.matrix.polynomial_rows())
    }

    /// Exact determinant of a square presentation.
    pub fn determinant(&self) -> Result<IntLaurentPoly, AlexError> {
        if !self.matrix.is_square() {
            return Err(AlexError::NotSquare { rows: self.matrix.rows, cols: self.matrix.cols });
        }
        let mut shift = 0i64;
        for i in 0..self.matrix.rows {
            let row = &self.matrix.entries[i * self.matrix.cols..(i + 1) * self.matrix.cols];
            shift += row.iter().filter(|e| !e.is_zero()).map(|e| e.low_exponent()).min().unwrap_or(0);
        }
        let d = linalg::determinant(self.matrix.polynomial_rows());
        Ok(IntLaurentPoly::new(shift, d.0))
    }

    /// `Δ_k`: normalized gcd of the `(n-k)`-minors, `n` the number of
    /// generators. `1` for `k >= n`, `0` when every minor vanishes.
    pub fn elementary_ideal_gcd(&self, k: usize) -> Result<IntLaurentPoly, AlexError> {
        let n = self.generators();
        if k >= n {
            return Ok(IntLaurentPoly::one());
        }
        let cap = crate::config::MINOR_GENERATOR_CAP;
        if n > cap {
            return Err(AlexError::TooManyGenerators { generators: n, cap });
        }
        let size = n - k;
        if size > self.relations() {
            return Ok(IntLaurentPoly::zero());
        }
        let rows = self.matrix.polynomial_rows();
        let mut g = IntLaurentPoly::zero();
        for rs in (0..n).combinations(size) {
            for cs in (0..self.relations()).combinations(size) {
                let minor: Vec<Vec<ZPoly>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect()).collect();
                let d = linalg::determinant(minor);
                if d.0.is_empty() {
                    continue;
                }
                g = gcd(&g, &IntLaurentPoly::new(0, d.0));
                if g.is_one() {
                    return Ok(g);
                }
            }
        }
        Ok(g)
    }

    /// `Δ_rank`, the order of the torsion submodule.
    pub fn alexander_of_torsion(&self) -> Result<IntLaurentPoly, AlexError> {
        self.elementary_ideal_gcd(self.rank())
    }

    /// `Δ_0 / Δ_1` for a square torsion presentation; generates the
    /// annihilator.
    pub fn lambda0(&self) -> Result<IntLaurentPoly, AlexError> {
        let det = self.determinant()?;
        if det.is_zero() {
            return Err(AlexError::ZeroDeterminant);
        }
        let d0 = self.elementary_ideal_gcd(0)?;
        let d1 = self.elementary_ideal_gcd(1)?;
        d0.divide_exact(&d1).map(|q| q.normalize()).map_err(|_| AlexError::DivisionFailure)
    }
}

impl From<LaurentMatrix> for ModulePresentation {
    fn from(m: LaurentMatrix) -> Self {
        ModulePresentation::new(m)
    }
}
