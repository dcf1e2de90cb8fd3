use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

/// Superset of `t(h)` as a union of residue classes and a half-line.
///
/// `n` is allowed iff the constraint is not empty and `n` lies in one of the
/// classes or above the threshold. With no classes and no threshold the
/// constraint carries no information.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SpectrumConstraint {
    /// `(modulus, residue)`: allowed when `n ≡ residue (mod modulus)`.
    pub allowed_moduli: BTreeSet<(u64, u64)>,
    pub threshold: Option<u64>,
    pub empty: bool,
}

impl SpectrumConstraint {
    pub fn unconstrained() -> Self {
        Self::default()
    }

    pub fn empty_spectrum() -> Self {
        SpectrumConstraint { empty: true, ..Self::default() }
    }

    pub fn multiples_of(m: u64) -> Self {
        SpectrumConstraint { allowed_moduli: [(m, 0)].into(), ..Self::default() }
    }

    pub fn at_least(t: u64) -> Self {
        SpectrumConstraint { threshold: Some(t), ..Self::default() }
    }

    /// `m | n` or `n >= t`.
    pub fn multiples_or_at_least(m: u64, t: u64) -> Self {
        SpectrumConstraint { allowed_moduli: [(m, 0)].into(), threshold: Some(t), empty: false }
    }

    pub fn is_vacuous(&self) -> bool {
        !self.empty
            && ((self.allowed_moduli.is_empty() && self.threshold.is_none())
                || self.threshold.is_some_and(|t| t <= 1)
                || self.allowed_moduli.iter().any(|&(m, _)| m == 1))
    }

    pub fn allows(&self, n: u64) -> bool {
        if self.empty {
            return false;
        }
        if self.allowed_moduli.is_empty() && self.threshold.is_none() {
            return true;
        }
        self.allowed_moduli.iter().any(|&(m, r)| m != 0 && n % m == r % m) || self.threshold.is_some_and(|t| n >= t)
    }
}

impl fmt::Display for SpectrumConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            return write!(f, "empty");
        }
        if self.allowed_moduli.is_empty() && self.threshold.is_none() {
            return write!(f, "N");
        }
        let mut parts: Vec<String> = self
            .allowed_moduli
            .iter()
            .map(|&(m, r)| if r == 0 { format!("{m}N") } else { format!("{r} mod {m}") })
            .collect();
        if let Some(t) = self.threshold {
            parts.push(format!("N>={t}"));
        }
        write!(f, "{}", parts.join(" u "))
    }
}

/// Named obstruction; the parameters say where the constraint came from.
#[derive(Debug, Clone, PartialEq)]
pub enum Reason {
    /// `n` must be a multiple of `|h(1)|`.
    Divisibility { modulus: BigInt },
    /// `n >= |a_m| + |a_0|`.
    CoeffFloor { floor: BigInt },
    /// `2` only occurs when `h` divides some `1 + t^d`.
    OrderTwo,
    /// `modulus | n` or `n^φ(k) >= R_k(h)`.
    PrimePower { k: u64, resultant: BigInt, modulus: BigInt, threshold: BigInt },
    /// `n >= M(h)`.
    Mahler { measure: f64, threshold: u64 },
    /// `h` has a positive real root.
    EmptySpectrum,
}

impl Reason {
    pub fn code(&self) -> String {
        match self {
            Reason::Divisibility { .. } => "DIVISIBILITY".into(),
            Reason::CoeffFloor { .. } => "COEFF_FLOOR".into(),
            Reason::OrderTwo => "ORDER_TWO".into(),
            Reason::PrimePower { k, .. } => format!("PRIME_POWER({k})"),
            Reason::Mahler { .. } => "MAHLER".into(),
            Reason::EmptySpectrum => "EMPTY_SPECTRUM".into(),
        }
    }

    pub fn detail(&self) -> String {
        match self {
            Reason::Divisibility { modulus } => format!("n must be divisible by |h(1)| = {modulus}"),
            Reason::CoeffFloor { floor } => format!("n >= |a_m| + |a_0| = {floor}"),
            Reason::OrderTwo => "2 requires h | 1 + t^d for some d".into(),
            Reason::PrimePower { k, resultant, modulus, threshold } => {
                format!("R_{k}(h) = {resultant}: {modulus} | n or n >= {threshold}")
            }
            Reason::Mahler { measure, threshold } => format!("M(h) = {measure:.9}: n >= {threshold}"),
            Reason::EmptySpectrum => "h has a positive real root, t(h) is empty".into(),
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code(), self.detail())
    }
}

impl Serialize for Reason {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Reason", 2)?;
        st.serialize_field("code", &self.code())?;
        st.serialize_field("detail", &self.detail())?;
        st.end()
    }
}

/// A constraint together with the reason it holds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Obstruction {
    pub reason: Reason,
    pub constraint: SpectrumConstraint,
}

impl Obstruction {
    pub fn new(reason: Reason, constraint: SpectrumConstraint) -> Self {
        Obstruction { reason, constraint }
    }

    pub fn excludes(&self, n: u64) -> bool {
        !self.constraint.allows(n)
    }
}
