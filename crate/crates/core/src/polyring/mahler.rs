//! Mahler measure through simultaneous (Aberth–Ehrlich) root finding.

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};

use super::dense;
use super::squarefree::yun;
use super::{IntLaurentPoly, PolyError};

#[derive(Debug, Clone, Copy)]
pub struct MahlerOptions {
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for MahlerOptions {
    fn default() -> Self {
        MahlerOptions { tol: crate::config::MAHLER_TOL, max_iterations: crate::config::MAHLER_MAX_ITERATIONS }
    }
}

/// `M(h) = |lc| ∏ max(1, |α|)`.
///
/// The polynomial is split into square-free parts first so the root finder
/// only ever sees simple roots; `M` is multiplicative so the parts recombine
/// exactly.
pub fn mahler_measure(h: &IntLaurentPoly, tol: f64) -> Result<f64, PolyError> {
    mahler_measure_with(h, MahlerOptions { tol, ..MahlerOptions::default() })
}

pub fn mahler_measure_with(h: &IntLaurentPoly, opts: MahlerOptions) -> Result<f64, PolyError> {
    if h.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    let p = h.dense_normalized();
    let content = dense::content(&p).to_f64().unwrap_or(f64::INFINITY);
    let prim = dense::primitive(&p);
    let mut m = content;
    for (part, mult) in yun(&prim) {
        let mp = mahler_squarefree(&part, opts)?;
        m *= mp.powi(mult as i32);
    }
    Ok(m)
}

fn mahler_squarefree(p: &[num_bigint::BigInt], opts: MahlerOptions) -> Result<f64, PolyError> {
    let coeffs: Vec<f64> = p
        .iter()
        .map(|c| c.to_f64().ok_or(PolyError::InvalidArgument("coefficient exceeds f64 range".into())))
        .collect::<Result<_, _>>()?;
    let lead = dense::lc(p).abs().to_f64().unwrap_or(f64::INFINITY);
    let roots = aberth_roots(&coeffs, opts)?;
    Ok(roots.iter().fold(lead, |acc, z| acc * z.norm().max(1.0)))
}

fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    let r = z.norm();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        scale = scale * r + c.abs();
    }
    (p, dp, scale)
}

/// All complex roots of a real polynomial (constant term first, simple roots).
///
/// Stops when every root has a residual within a small multiple of the
/// rounding error of evaluating the polynomial there.
pub fn aberth_roots(coeffs: &[f64], opts: MahlerOptions) -> Result<Vec<Complex64>, PolyError> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let a0 = coeffs[0].abs();
    let an = coeffs[n].abs();
    let radius = if a0 > 0.0 { (a0 / an).powf(1.0 / n as f64) } else { 1.0 };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            let r = radius * (1.0 + 0.05 * ((k % 3) as f64 - 1.0));
            Complex64::from_polar(r, theta)
        })
        .collect();
    let eps = f64::EPSILON * (4.0 * n as f64 + 8.0);
    for _ in 0..opts.max_iterations {
        let mut converged = true;
        for i in 0..n {
            let (p, dp, scale) = eval_with_derivative(coeffs, z[i]);
            if p.norm() <= eps * scale {
                continue;
            }
            converged = false;
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
            } else {
                z[i] += Complex64::new(opts.tol, opts.tol);
            }
        }
        if converged {
            return Ok(z);
        }
    }
    Err(PolyError::ConvergenceFailure { iterations: opts.max_iterations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::cyclotomic;

    fn p(c: &[i64]) -> IntLaurentPoly {
        IntLaurentPoly::from_coeffs(c)
    }

    #[test]
    fn examples() {
        let tol = 1e-9;
        for k in [1, 2, 3, 10, 21, 30, 105] {
            let m = mahler_measure(&cyclotomic(k), tol).unwrap();
            assert!((m - 1.0).abs() < tol, "k = {k}: {m}");
        }
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((mahler_measure(&p(&[-1, -1, 1]), tol).unwrap() - golden).abs() < tol);
        assert!((mahler_measure(&p(&[-1, 2]), tol).unwrap() - 2.0).abs() < tol);
    }

    #[test]
    fn repeated_roots_and_content() {
        let f = &cyclotomic(6).pow(3) * &p(&[3]);
        assert!((mahler_measure(&f, 1e-9).unwrap() - 3.0).abs() < 1e-9);
        let g = p(&[1, -3, 1]).pow(2);
        let expect = ((3.0 + 5f64.sqrt()) / 2.0).powi(2);
        assert!((mahler_measure(&g, 1e-9).unwrap() - expect).abs() < 1e-9);
    }

    #[test]
    fn lehmer_polynomial() {
        // Lehmer's degree-10 polynomial, M ≈ 1.17628081826
        let f = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let m = mahler_measure(&f, 1e-9).unwrap();
        assert!((m - 1.176_280_818_26).abs() < 1e-9, "{m}");
    }

    #[test]
    fn failure_is_reported() {
        let opts = MahlerOptions { tol: 1e-9, max_iterations: 0 };
        assert!(matches!(
            mahler_measure_with(&p(&[1, 3, 1]), opts),
            Err(PolyError::ConvergenceFailure { .. })
        ));
    }
}
