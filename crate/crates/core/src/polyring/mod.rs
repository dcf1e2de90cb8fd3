//! One-variable integer Laurent polynomials and the number-theoretic kernel
//! built on them.

mod cyclotomic;
pub(crate) mod dense;
mod factor;
mod mahler;
pub mod number;
mod parse;
mod poly;
mod resultant;
pub(crate) mod squarefree;
mod sturm;

pub use cyclotomic::{cyclotomic, cyclotomic_index};
pub use factor::{factor, factor_with, FactorOptions, Factorization};
pub use mahler::{aberth_roots, mahler_measure, mahler_measure_with, MahlerOptions};
pub use number::totient;
pub use parse::{parse_poly, ParseError};
pub use poly::IntLaurentPoly;
pub use resultant::{multiplicative_composition, resultant, resultant_with_cyclotomic};
pub use sturm::{count_positive_roots, has_positive_real_root};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("evaluation at zero of a polynomial with negative exponents")]
    ZeroArgument,
    #[error("value is not an integer")]
    NotIntegral,
    #[error("zero polynomial not allowed here")]
    ZeroInput,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("root finder did not converge within {iterations} iterations")]
    ConvergenceFailure { iterations: usize },
    #[error("degree {degree} exceeds the supported limit {limit}")]
    DegreeLimitExceeded { degree: usize, limit: usize },
}

/// Gcd in `Z[t^±1]`, doteq-normalized; `gcd(0, 0) = 0`.
pub fn gcd(a: &IntLaurentPoly, b: &IntLaurentPoly) -> IntLaurentPoly {
    let g = dense::gcd(&a.dense_normalized(), &b.dense_normalized());
    IntLaurentPoly::from_dense(g).normalize()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_gcd() {
        let a = IntLaurentPoly::from_laurent(-3, &[-1, 0, 1]);
        let b = IntLaurentPoly::from_coeffs(&[1, 2, 1]);
        assert_eq!(gcd(&a, &b), IntLaurentPoly::from_coeffs(&[1, 1]));
        assert_eq!(gcd(&IntLaurentPoly::zero(), &b), b);
        assert!(gcd(&IntLaurentPoly::zero(), &IntLaurentPoly::zero()).is_zero());
        assert!(gcd(&cyclotomic(3), &cyclotomic(5)).is_one());
    }
}
