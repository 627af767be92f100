//! Verification suites. Each [`Suite`] runs a family of exact checks and
//! returns one [`CheckResult`] per cell, with a witness on failure.

mod suites;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalars::{Backend, Specialization};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub params: Value,
    pub backend: String,
    pub pass: bool,
    /// Computed quantities worth reporting whether or not the check passes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CheckResult {
    pub fn new(check: impl Into<String>, params: Value, backend: impl Into<String>, pass: bool) -> Self {
        Self {
            check: check.into(),
            params,
            backend: backend.into(),
            pass,
            detail: None,
            witness: None,
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn with_witness(mut self, witness: Option<Value>) -> Self {
        self.witness = witness;
        self
    }
}

/// Which cells a suite runs. `None` means the suite's default range.
///
/// With no backend, checks run symbolically where the size allows and at
/// `Q = 2`, `q = 3` otherwise.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Scope {
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub e: Option<usize>,
    pub backend: Option<Backend>,
}

impl Scope {
    /// The specialization used by checks that only make sense at a point:
    /// the configured one, or `Q = 2`, `q = 3`.
    pub fn point(&self) -> Specialization {
        match &self.backend {
            Some(Backend::Specialized(s)) => s.clone(),
            _ => Specialization::default_point(8),
        }
    }

    /// True unless a specialization was requested.
    pub fn symbolic(&self) -> bool {
        !matches!(self.backend, Some(Backend::Specialized(_)))
    }

    /// True if the range was given explicitly, so budget errors are reported
    /// instead of skipped.
    pub(crate) fn explicit(&self) -> bool {
        self.n.is_some() || self.d.is_some() || self.e.is_some()
    }

    fn pick(value: Option<usize>, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
        match value {
            Some(v) => vec![v],
            None => default.into_iter().collect(),
        }
    }

    pub(crate) fn ns(&self, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
        Self::pick(self.n, default)
    }

    pub(crate) fn ds(&self, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
        Self::pick(self.d, default)
    }

    pub(crate) fn es(&self, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
        Self::pick(self.e, default)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    HeckeRelations,
    JucysMurphy,
    Spectral,
    YbeReflection,
    Cylinder,
    PmDims,
    SchurWeyl,
    Irreducibility,
    Symmetrizer,
    PermutationModules,
    DoubleCentralizer,
    RankOne,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::HeckeRelations,
        Suite::JucysMurphy,
        Suite::Spectral,
        Suite::YbeReflection,
        Suite::Cylinder,
        Suite::PmDims,
        Suite::SchurWeyl,
        Suite::Irreducibility,
        Suite::Symmetrizer,
        Suite::PermutationModules,
        Suite::DoubleCentralizer,
        Suite::RankOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HeckeRelations => "hecke-relations",
            Suite::JucysMurphy => "jucys-murphy",
            Suite::Spectral => "spectral",
            Suite::YbeReflection => "ybe-reflection",
            Suite::Cylinder => "cylinder",
            Suite::PmDims => "pm-dims",
            Suite::SchurWeyl => "schur-weyl",
            Suite::Irreducibility => "irreducibility",
            Suite::Symmetrizer => "symmetrizer",
            Suite::PermutationModules => "permutation-modules",
            Suite::DoubleCentralizer => "double-centralizer",
            Suite::RankOne => "e-hecke-rank1",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::HeckeRelations => "defining relations of H^B(d) under rho and in the abstract algebra",
            Suite::JucysMurphy => "K_i commute pairwise and c_K is central",
            Suite::Spectral => "spectra of rho(K_i) and rho(c_K) at a point",
            Suite::YbeReflection => "Yang-Baxter and reflection equations on blocks, with a negative control",
            Suite::Cylinder => "cylinder identity for c_K and K_{V^d} = rho(c_K)",
            Suite::PmDims => "dimensions of the four ±-powers in both presentations",
            Suite::SchurWeyl => "Schur-Weyl dimension ledger",
            Suite::Irreducibility => "Schur functor subspaces are simple and pairwise non-isomorphic",
            Suite::Symmetrizer => "image of rho(e') equals the diagram Schur functor",
            Suite::PermutationModules => "add-zeros isomorphisms and the v-bar embedding",
            Suite::DoubleCentralizer => "coideal-generated algebra equals the Hecke commutant",
            Suite::RankOne => "block K-matrix spectrum for the e-Hecke algebra of rank one",
        }
    }

    pub fn run(self, scope: &Scope) -> Result<Vec<CheckResult>> {
        match self {
            Suite::HeckeRelations => suites::hecke_relations(scope),
            Suite::JucysMurphy => suites::jucys_murphy(scope),
            Suite::Spectral => suites::spectral(scope),
            Suite::YbeReflection => suites::ybe_reflection(scope),
            Suite::Cylinder => suites::cylinder(scope),
            Suite::PmDims => suites::pm_dims(scope),
            Suite::SchurWeyl => suites::schur_weyl(scope),
            Suite::Irreducibility => suites::irreducibility(scope),
            Suite::Symmetrizer => suites::symmetrizer(scope),
            Suite::PermutationModules => suites::permutation_modules(scope),
            Suite::DoubleCentralizer => suites::double_centralizer(scope),
            Suite::RankOne => suites::rank_one(scope),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn scope_defaults_and_overrides() {
        let s = Scope::default();
        assert_eq!(s.ns(1..=3), vec![1, 2, 3]);
        let s = Scope { n: Some(4), ..Scope::default() };
        assert_eq!(s.ns(1..=3), vec![4]);
        assert_eq!(s.point().to_string(), "Q=2,q=3");
    }
}
