use std::collections::BTreeMap;

use serde::Serialize;

use super::constraint::{Reason, SpectrumConstraint};
use super::obstruction::excluded_set;
use super::search::{find_certificate_with, MembershipCertificate, SearchOptions, SearchOutcome};
use super::SpectrumError;
use crate::polyring::number::is_prime;
use crate::polyring::IntLaurentPoly;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumStatus {
    Member(MembershipCertificate),
    Excluded(Vec<Reason>),
    /// Neither excluded nor certified; the note says why the search stopped.
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct WindowEntry {
    pub n: u64,
    pub status: SpectrumStatus,
}

impl Serialize for WindowEntry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Flat<'a> {
            n: u64,
            status: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            certificate: Option<&'a MembershipCertificate>,
            reasons: &'a [Reason],
            #[serde(skip_serializing_if = "Option::is_none")]
            note: Option<&'a str>,
        }
        let flat = match &self.status {
            SpectrumStatus::Member(c) => {
                Flat { n: self.n, status: "member", certificate: Some(c), reasons: &[], note: None }
            }
            SpectrumStatus::Excluded(r) => {
                Flat { n: self.n, status: "excluded", certificate: None, reasons: r, note: None }
            }
            SpectrumStatus::Unknown(note) => {
                Flat { n: self.n, status: "unknown", certificate: None, reasons: &[], note: Some(note) }
            }
        };
        flat.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumWindowReport {
    pub h: IntLaurentPoly,
    pub window: u64,
    pub deg_bound: usize,
    pub k_max: u64,
    pub entries: Vec<WindowEntry>,
    pub notes: Vec<String>,
}

impl SpectrumWindowReport {
    fn select(&self, pred: impl Fn(&SpectrumStatus) -> bool) -> Vec<u64> {
        self.entries.iter().filter(|e| pred(&e.status)).map(|e| e.n).collect()
    }

    pub fn members(&self) -> Vec<u64> {
        self.select(|s| matches!(s, SpectrumStatus::Member(_)))
    }

    pub fn excluded(&self) -> Vec<u64> {
        self.select(|s| matches!(s, SpectrumStatus::Excluded(_)))
    }

    pub fn unknown(&self) -> Vec<u64> {
        self.select(|s| matches!(s, SpectrumStatus::Unknown(_)))
    }

    pub fn entry(&self, n: u64) -> Option<&WindowEntry> {
        self.entries.get((n as usize).checked_sub(1)?)
    }

    pub fn certificate(&self, n: u64) -> Option<&MembershipCertificate> {
        match &self.entry(n)?.status {
            SpectrumStatus::Member(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct WindowOptions {
    pub window: u64,
    pub deg_bound: usize,
    pub k_max: u64,
    pub max_states: usize,
}

impl WindowOptions {
    /// Defaults for `h`: window 20, `k_max = 64`, degree bound `4 deg + 16`.
    pub fn for_poly(h: &IntLaurentPoly) -> Self {
        WindowOptions {
            window: crate::config::DEFAULT_WINDOW,
            deg_bound: crate::config::default_deg_bound(h.span()),
            k_max: crate::config::DEFAULT_K_MAX,
            max_states: crate::config::max_states(),
        }
    }
}

pub fn spectrum_window(h: &IntLaurentPoly, window: u64, deg_bound: usize, k_max: u64) -> SpectrumWindowReport {
    let opts = WindowOptions { window, deg_bound, k_max, max_states: crate::config::max_states() };
    spectrum_window_with(h, opts)
}

/// Exclusions first, then additive closure of the members found so far,
/// then the certificate search.
pub fn spectrum_window_with(h: &IntLaurentPoly, opts: WindowOptions) -> SpectrumWindowReport {
    let exclusions = excluded_set(h, opts.window, opts.k_max);
    let search = SearchOptions { deg_bound: opts.deg_bound, max_states: opts.max_states };
    let mut members: BTreeMap<u64, MembershipCertificate> = BTreeMap::new();
    let mut entries = Vec::with_capacity(opts.window as usize);
    for n in 1..=opts.window {
        let reasons = exclusions.reasons(n);
        let status = if !reasons.is_empty() {
            SpectrumStatus::Excluded(reasons.to_vec())
        } else if let Some(c) = closure(&members, n) {
            SpectrumStatus::Member(c)
        } else {
            match find_certificate_with(h, n, search) {
                Ok(SearchOutcome::Found(c)) => SpectrumStatus::Member(c),
                Ok(SearchOutcome::NotFoundWithinBound) => {
                    SpectrumStatus::Unknown(format!("no certificate of degree <= {}", opts.deg_bound))
                }
                Err(e) => SpectrumStatus::Unknown(e.to_string()),
            }
        };
        if let SpectrumStatus::Member(c) = &status {
            members.insert(n, c.clone());
        }
        entries.push(WindowEntry { n, status });
    }
    SpectrumWindowReport {
        h: h.clone(),
        window: opts.window,
        deg_bound: opts.deg_bound,
        k_max: opts.k_max,
        entries,
        notes: exclusions.notes,
    }
}

fn closure(members: &BTreeMap<u64, MembershipCertificate>, n: u64) -> Option<MembershipCertificate> {
    members
        .range(..=n / 2)
        .filter_map(|(a, ca)| members.get(&(n - a)).map(|cb| ca.concatenate(cb)))
        .min_by_key(|c| c.degree())
}

/// `t(Φ_{p^a}) = pN`, returned as the constraint "multiples of `p`", which
/// here is exact.
pub fn cyclotomic_closed_form(p: u64, a: u32) -> Result<SpectrumConstraint, SpectrumError> {
    if !is_prime(p) {
        return Err(SpectrumError::NotPrime(p));
    }
    if a == 0 {
        return Err(SpectrumError::InvalidArgument("exponent must be at least 1".into()));
    }
    Ok(SpectrumConstraint::multiples_of(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::cyclotomic;

    #[test]
    fn phi10_window() {
        let r = spectrum_window(&cyclotomic(10), 10, 32, 64);
        assert_eq!(r.members(), vec![2, 4, 5, 6, 7, 8, 9, 10]);
        assert_eq!(r.excluded(), vec![1, 3]);
        assert!(r.entries.iter().all(|e| match &e.status {
            SpectrumStatus::Member(c) => c.verify() && c.n == e.n,
            _ => true,
        }));
    }

    #[test]
    fn phi2_and_phi5() {
        let r = spectrum_window(&cyclotomic(2), 4, 20, 64);
        assert_eq!(r.members(), vec![2, 4]);
        assert_eq!(r.excluded(), vec![1, 3]);
        let r = spectrum_window(&cyclotomic(5), 10, 32, 64);
        assert_eq!(r.members(), vec![5, 10]);
        assert_eq!(r.excluded(), vec![1, 2, 3, 4, 6, 7, 8, 9]);
    }

    #[test]
    fn closed_form() {
        assert_eq!(cyclotomic_closed_form(3, 2).unwrap(), SpectrumConstraint::multiples_of(3));
        assert!(matches!(cyclotomic_closed_form(4, 1), Err(SpectrumError::NotPrime(4))));
    }

    #[test]
    fn json_shape() {
        let r = spectrum_window(&cyclotomic(10), 3, 16, 8);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["entries"][0]["status"], "excluded");
        assert_eq!(v["entries"][1]["status"], "member");
        assert_eq!(v["entries"][1]["certificate"]["product"], "t^5 + 1");
        assert_eq!(v["entries"][2]["reasons"][0]["code"], "PRIME_POWER(2)");
    }
}
