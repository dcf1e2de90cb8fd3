use num_traits::{One, Signed};
use serde::Serialize;

use super::invariants::{seifert_to_alexander, torus_alexander};
use super::KnotError;
use crate::alexmod::IntMatrix;
use crate::polyring::IntLaurentPoly;

/// A knot as far as its Alexander polynomial and a few classical invariants go.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotRecord {
    pub name: String,
    /// Doteq-normalized.
    pub alexander: IntLaurentPoly,
    pub genus: Option<u32>,
    pub fibered: Option<bool>,
    pub seifert: Option<IntMatrix>,
}

impl KnotRecord {
    /// Checks `Δ(1) = ±1` and `Δ(t) ≐ Δ(t^-1)`.
    pub fn new(name: impl Into<String>, alexander: IntLaurentPoly) -> Result<Self, KnotError> {
        let name = name.into();
        if !alexander.augmentation().abs().is_one() {
            return Err(KnotError::InvalidAlexander { name, message: format!("Δ(1) = {}, expected ±1", alexander.augmentation()) });
        }
        if !alexander.is_symmetric() {
            return Err(KnotError::InvalidAlexander { name, message: "Δ is not symmetric".into() });
        }
        Ok(KnotRecord { name, alexander: alexander.normalize(), genus: None, fibered: None, seifert: None })
    }

    pub fn unknot() -> Self {
        KnotRecord { name: "unknot".into(), alexander: IntLaurentPoly::one(), genus: Some(0), fibered: Some(true), seifert: None }
    }

    /// `T(p, q)`: fibered, genus `(p-1)(q-1)/2`.
    pub fn torus(p: u64, q: u64) -> Result<Self, KnotError> {
        let alexander = torus_alexander(p, q)?;
        let genus = u32::try_from((p - 1) * (q - 1) / 2).map_err(|_| KnotError::InvalidArgument("genus overflow".into()))?;
        Ok(KnotRecord { name: format!("T({p},{q})"), alexander, genus: Some(genus), fibered: Some(true), seifert: None })
    }

    pub fn with_genus(mut self, genus: u32) -> Self {
        self.genus = Some(genus);
        self
    }

    pub fn with_fibered(mut self, fibered: bool) -> Self {
        self.fibered = Some(fibered);
        self
    }

    /// Attaches a Seifert matrix after checking `det(V - tVᵀ) ≐ Δ`.
    pub fn with_seifert(mut self, v: IntMatrix) -> Result<Self, KnotError> {
        let d = seifert_to_alexander(&v)?;
        if d != self.alexander {
            return Err(KnotError::SeifertMismatch { name: self.name, from_seifert: d.to_string(), given: self.alexander.to_string() });
        }
        self.seifert = Some(v);
        Ok(self)
    }

    /// Record whose polynomial comes from a Seifert matrix.
    pub fn from_seifert(name: impl Into<String>, v: IntMatrix) -> Result<Self, KnotError> {
        let d = seifert_to_alexander(&v)?;
        let genus = u32::try_from(v.rows() / 2).ok();
        let mut k = Self::new(name, d)?;
        k.genus = genus;
        k.seifert = Some(v);
        Ok(k)
    }
}
