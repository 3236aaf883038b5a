//! Registry of harmonic number identities obtained from the Chu-Vandermonde
//! convolution.
//!
//! Each [`IdentityDescriptor`] pairs a literal term-by-term summation of the
//! left side (the ground truth) with the closed form of the right side as it
//! is stated, including case dispatch for the alternating family. The seed
//! convolutions and the jet-based derivation checks live in [`seeds`] and
//! [`closure`].

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{binomial, factorial, harmonic, Rational};

pub mod alternating;
pub mod closure;
pub mod convolution;
pub mod seeds;
pub mod squared;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("{id}: parameters (n={n}, p={p}, q={q}) violate domain constraint {constraint}")]
    DomainViolation {
        id: String,
        n: u32,
        p: u32,
        q: u32,
        constraint: &'static str,
    },
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("{family} has no variant for exponent m={m}")]
    UnknownVariant { family: &'static str, m: u32 },
}

/// Summation length `n` and shift parameters `p`, `q`, all non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdentityParams {
    pub n: u32,
    pub p: u32,
    pub q: u32,
}

impl IdentityParams {
    pub fn new(n: u32, p: u32, q: u32) -> Self {
        IdentityParams { n, p, q }
    }

    /// Parameters for identities that only depend on `n`.
    pub fn n_only(n: u32) -> Self {
        IdentityParams { n, p: 0, q: 0 }
    }

    pub(crate) fn signed(&self) -> (i64, i64, i64) {
        (self.n as i64, self.p as i64, self.q as i64)
    }
}

impl fmt::Display for IdentityParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} p={} q={}", self.n, self.p, self.q)
    }
}

/// Which closed form of a trichotomy identity applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    A,
    B,
    C,
    D,
    E,
    F,
    U,
    V,
    W,
    #[serde(rename = "U*")]
    Ustar,
    #[serde(rename = "V*")]
    Vstar,
    #[serde(rename = "W*")]
    Wstar,
}

impl CaseTag {
    pub fn label(self) -> &'static str {
        match self {
            CaseTag::A => "A",
            CaseTag::B => "B",
            CaseTag::C => "C",
            CaseTag::D => "D",
            CaseTag::E => "E",
            CaseTag::F => "F",
            CaseTag::U => "U",
            CaseTag::V => "V",
            CaseTag::W => "W",
            CaseTag::Ustar => "U*",
            CaseTag::Vstar => "V*",
            CaseTag::Wstar => "W*",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The three regimes of `p - q` relative to a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `p - q >= threshold`
    Upper,
    /// `0 <= p - q < threshold`
    Middle,
    /// `p - q < 0`
    Lower,
}

pub fn regime(p: i64, q: i64, threshold: i64) -> Regime {
    let d = p - q;
    if d >= threshold {
        Regime::Upper
    } else if d >= 0 {
        Regime::Middle
    } else {
        Regime::Lower
    }
}

/// Right-hand side value together with the case that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub case: Option<CaseTag>,
    pub value: Rational,
}

impl ClosedForm {
    pub fn plain(value: Rational) -> Self {
        ClosedForm { case: None, value }
    }

    pub fn with_case(case: CaseTag, value: Rational) -> Self {
        ClosedForm {
            case: Some(case),
            value,
        }
    }
}

/// Validity guard on `n`; every identity accepts all `p, q >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Domain {
    pub min_n: u32,
    pub description: &'static str,
}

impl Domain {
    pub const ALL: Domain = Domain {
        min_n: 0,
        description: "n >= 0",
    };
    /// Sums starting at `k = 1`, obtained by the shift `n -> n - 1`.
    pub const SHIFTED: Domain = Domain {
        min_n: 1,
        description: "n >= 1",
    };

    pub const fn n_greater_than(bound: u32, description: &'static str) -> Domain {
        Domain {
            min_n: bound + 1,
            description,
        }
    }

    pub fn contains(&self, params: &IdentityParams) -> bool {
        params.n >= self.min_n
    }
}

pub type SideFn = fn(&IdentityParams) -> Rational;
pub type ClosedFormFn = fn(&IdentityParams) -> ClosedForm;

#[derive(Clone)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub anchor: &'static str,
    pub uses_pq: bool,
    pub domain: Domain,
    pub lhs: SideFn,
    pub rhs: ClosedFormFn,
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("uses_pq", &self.uses_pq)
            .field("domain", &self.domain)
            .finish()
    }
}

/// Both sides of one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub lhs: Rational,
    pub rhs: ClosedForm,
}

impl Evaluation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs.value
    }
}

impl IdentityDescriptor {
    pub fn check_domain(&self, params: &IdentityParams) -> Result<(), IdentityError> {
        if self.domain.contains(params) {
            Ok(())
        } else {
            Err(IdentityError::DomainViolation {
                id: self.id.to_string(),
                n: params.n,
                p: params.p,
                q: params.q,
                constraint: self.domain.description,
            })
        }
    }

    pub fn lhs_eval(&self, params: &IdentityParams) -> Result<Rational, IdentityError> {
        self.check_domain(params)?;
        Ok((self.lhs)(params))
    }

    pub fn rhs_eval(&self, params: &IdentityParams) -> Result<ClosedForm, IdentityError> {
        self.check_domain(params)?;
        Ok((self.rhs)(params))
    }

    pub fn evaluate(&self, params: &IdentityParams) -> Result<Evaluation, IdentityError> {
        self.check_domain(params)?;
        Ok(Evaluation {
            lhs: (self.lhs)(params),
            rhs: (self.rhs)(params),
        })
    }

    /// Points `n <= n_max`, `p <= p_max`, `q <= q_max` in lexicographic order.
    /// Identities without `p, q` only see `p = q = 0`.
    pub fn grid(&self, n_max: u32, p_max: u32, q_max: u32) -> Vec<IdentityParams> {
        let (p_max, q_max) = if self.uses_pq { (p_max, q_max) } else { (0, 0) };
        let mut points = Vec::new();
        for n in 0..=n_max {
            for p in 0..=p_max {
                for q in 0..=q_max {
                    points.push(IdentityParams::new(n, p, q));
                }
            }
        }
        points
    }
}

/// An ordered, immutable collection of identities. Ids are unique.
#[derive(Debug, Clone)]
pub struct Registry {
    entries: Vec<IdentityDescriptor>,
}

impl Registry {
    pub fn new(mut entries: Vec<IdentityDescriptor>) -> Self {
        entries.sort_by_key(|d| d.id);
        for pair in entries.windows(2) {
            assert_ne!(pair[0].id, pair[1].id, "duplicate identity id");
        }
        Registry { entries }
    }

    pub fn get(&self, id: &str) -> Result<&IdentityDescriptor, IdentityError> {
        self.entries
            .iter()
            .find(|d| d.id == id)
            .ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))
    }

    /// Entries sorted by id.
    pub fn iter(&self) -> impl Iterator<Item = &IdentityDescriptor> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Swap in a different closed form for one identity. Used to check that
    /// the harness notices a wrong right-hand side.
    pub fn with_rhs(mut self, id: &str, rhs: ClosedFormFn) -> Result<Self, IdentityError> {
        let entry = self
            .entries
            .iter_mut()
            .find(|d| d.id == id)
            .ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))?;
        entry.rhs = rhs;
        Ok(self)
    }
}

/// The built-in catalogue of 28 identities.
pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut entries = vec![seeds::descriptor()];
        entries.extend(convolution::descriptors());
        entries.extend(squared::descriptors());
        entries.extend(alternating::descriptors());
        Registry::new(entries)
    })
}

/// One catalogue line: id, where it comes from, and where it is valid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub anchor: &'static str,
    pub domain: &'static str,
    pub uses_pq: bool,
}

pub fn list_identities() -> Vec<CatalogEntry> {
    registry()
        .iter()
        .map(|d| CatalogEntry {
            id: d.id,
            anchor: d.anchor,
            domain: d.domain.description,
            uses_pq: d.uses_pq,
        })
        .collect()
}

// Shorthands shared by the closed forms. Dispatched formulas never reach a
// negative harmonic index, so a negative one is a bug in the formula code.

pub(crate) fn h(n: i64) -> Rational {
    harmonic(n, 1).unwrap_or_else(|e| panic!("closed form evaluated {e}"))
}

pub(crate) fn h2(n: i64) -> Rational {
    harmonic(n, 2).unwrap_or_else(|e| panic!("closed form evaluated {e}"))
}

pub(crate) fn fact(m: i64) -> Rational {
    factorial(m).unwrap_or_else(|e| panic!("closed form evaluated {e}"))
}

pub(crate) fn binom(s: i64, t: i64) -> Rational {
    binomial(s, t)
}

pub(crate) fn sign(e: i64) -> Rational {
    Rational::sign_power(e)
}

pub(crate) fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_has_28_unique_entries() {
        let reg = registry();
        assert_eq!(reg.len(), 28);
        assert_eq!(list_identities().len(), reg.len());
        let ids: Vec<_> = reg.iter().map(|d| d.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn catalogue_anchors() {
        let cat = list_identities();
        let thm_e = cat.iter().find(|e| e.id == "thm-e").unwrap();
        assert!(thm_e.anchor.contains("Theorem 5"));
        assert!(thm_e.anchor.contains("U/V/W"));
        let chen_chu = cat.iter().find(|e| e.id == "chen-chu").unwrap();
        assert!(chen_chu.anchor.contains("Chen and Chu"));
    }

    #[test]
    fn domain_violation_names_constraint() {
        let d = registry().get("alt-k3Hk2").unwrap();
        let err = d.evaluate(&IdentityParams::n_only(3)).unwrap_err();
        match &err {
            IdentityError::DomainViolation { constraint, .. } => assert_eq!(*constraint, "n > 3"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(err.to_string().contains("n > 3"));
    }

    #[test]
    fn unknown_id_rejected() {
        assert_eq!(
            registry().get("thm-z").unwrap_err(),
            IdentityError::UnknownIdentity("thm-z".into())
        );
    }

    #[test]
    fn regimes_partition() {
        for p in 0..=10 {
            for q in 0..=10 {
                for t in -1..=15 {
                    let expected = if p - q >= t {
                        Regime::Upper
                    } else if p - q >= 0 {
                        Regime::Middle
                    } else {
                        Regime::Lower
                    };
                    assert_eq!(regime(p, q, t), expected);
                }
            }
        }
    }

    #[test]
    fn grid_ignores_pq_when_unused() {
        let d = registry().get("sum-Hk").unwrap();
        assert_eq!(d.grid(3, 5, 5).len(), 4);
        let d = registry().get("thm-a").unwrap();
        assert_eq!(d.grid(3, 1, 1).len(), 16);
    }
}
