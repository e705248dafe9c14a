//! Serializable report documents. Rationals are written as strings such as
//! `"-3/2"` so that no precision is lost.

use std::collections::BTreeMap;

use serde::Serialize;

use lie_index_core::arith::{Rational, Subspace};
use lie_index_core::catalog::{Params, Schema};
use lie_index_core::index::{DeformationReport, IndexReport};
use lie_index_core::lie::{CharacteristicSequence, ValidationReport};
use lie_index_core::regular::{FamilyReport, RegularityReport};

/// Version of every JSON document written by the CLI.
pub const SCHEMA: u32 = 1;

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub component: u32,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Validation {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl From<&ValidationReport> for Validation {
    fn from(r: &ValidationReport) -> Self {
        Validation {
            valid: r.is_valid(),
            violations: r
                .violations
                .iter()
                .map(|v| Violation { i: v.i, j: v.j, k: v.k, component: v.t, residual: v.residual.to_string() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexSection {
    pub method: String,
    pub rank: usize,
    pub index: usize,
    pub witness_point: Option<Vec<String>>,
    pub trials: Option<usize>,
    pub bound: Option<u64>,
}

impl From<&IndexReport> for IndexSection {
    fn from(r: &IndexReport) -> Self {
        IndexSection {
            method: r.method.to_string(),
            rank: r.rank,
            index: r.index,
            witness_point: r.witness_point.as_deref().map(strings),
            trials: r.certification.map(|c| c.trials),
            bound: r.certification.map(|c| c.bound),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacteristicSection {
    pub parts: Vec<usize>,
    pub samples: usize,
}

impl CharacteristicSection {
    pub fn new(c: &CharacteristicSequence, samples: usize) -> Self {
        CharacteristicSection { parts: c.parts().to_vec(), samples }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularSection {
    pub functional: Vec<String>,
    pub kernel_dim: usize,
    pub index: usize,
    pub regular: bool,
    pub kernel_basis: Vec<Vec<String>>,
    /// Functionals tried by a search.
    pub attempts: Option<usize>,
}

fn basis(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(|v| strings(v)).collect()
}

impl RegularSection {
    pub fn new(r: &RegularityReport, attempts: Option<usize>) -> Self {
        RegularSection {
            functional: strings(r.functional.coords()),
            kernel_dim: r.kernel_dim,
            index: r.algebra_index,
            regular: r.is_regular,
            kernel_basis: basis(&r.kernel_basis),
            attempts,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NecessityWitness {
    /// Position of the violated nonzero set in the family.
    pub nonzero_set: usize,
    pub functional: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Branch {
    pub label: String,
    pub verdict: String,
    pub sufficiency_samples: usize,
    pub boundary_samples: usize,
    pub sufficiency_counterexample: Option<Vec<String>>,
    pub necessity_witness: Option<NecessityWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySection {
    pub family: String,
    pub index: usize,
    pub supported: bool,
    pub branches: Vec<Branch>,
}

impl From<&FamilyReport> for FamilySection {
    fn from(r: &FamilyReport) -> Self {
        FamilySection {
            family: r.family.to_string(),
            index: r.algebra_index,
            supported: r.all_supported(),
            branches: r
                .branches
                .iter()
                .map(|b| Branch {
                    label: b.label.clone(),
                    verdict: b.verdict.to_string(),
                    sufficiency_samples: b.sufficiency_samples,
                    boundary_samples: b.boundary_samples,
                    sufficiency_counterexample: b.sufficiency_counterexample.as_ref().map(|f| strings(f.coords())),
                    necessity_witness: b
                        .necessity_witness
                        .as_ref()
                        .map(|(s, f)| NecessityWitness { nonzero_set: *s, functional: strings(f.coords()) }),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DeformSample {
    pub t: String,
    pub index: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeformSection {
    pub degree: u32,
    pub index_at_zero: usize,
    pub samples: Vec<DeformSample>,
    pub generic_index: usize,
    pub monotone: bool,
}

impl DeformSection {
    pub fn new(r: &DeformationReport, degree: u32) -> Self {
        DeformSection {
            degree,
            index_at_zero: r.index_at_zero,
            samples: r.samples.iter().map(|(t, i)| DeformSample { t: t.to_string(), index: *i }).collect(),
            generic_index: r.generic_index,
            monotone: r.monotone,
        }
    }
}

/// Per-algebra document written by `validate`, `index`, `regular`, `report`
/// and `deform`. Sections a command does not compute are omitted.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: &'static str,
    pub name: Option<String>,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<Validation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilindex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characteristic_sequence: Option<CharacteristicSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filiform: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quasi_filiform: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<IndexSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular: Option<RegularSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformSection>,
}

impl Report {
    pub fn new(command: &'static str, name: Option<String>, dim: usize) -> Self {
        Report {
            schema: SCHEMA,
            command,
            name,
            dim,
            seed: None,
            validation: None,
            nilpotent: None,
            nilindex: None,
            characteristic_sequence: None,
            filiform: None,
            quasi_filiform: None,
            center_dim: None,
            index: None,
            frobenius: None,
            regular: None,
            minors: None,
            family: None,
            deformation: None,
        }
    }
}

pub fn params_map(p: &Params) -> BTreeMap<String, String> {
    p.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SchemaEntry {
    pub name: &'static str,
    pub kind: String,
    pub params: Vec<SchemaParam>,
    pub summary: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchemaParam {
    pub name: &'static str,
    pub range: &'static str,
}

impl From<&Schema> for SchemaEntry {
    fn from(s: &Schema) -> Self {
        SchemaEntry {
            name: s.name,
            kind: s.kind.as_str().to_string(),
            params: s.params.iter().map(|&(name, range)| SchemaParam { name, range }).collect(),
            summary: s.summary,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogList {
    pub schema: u32,
    pub command: &'static str,
    pub entries: Vec<SchemaEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEmit {
    pub schema: u32,
    pub command: &'static str,
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub status: String,
    pub violations: usize,
    pub basis: Option<String>,
    pub file: String,
}

/// One checked expectation.
#[derive(Clone, Debug, Serialize)]
pub struct ExpectLine {
    pub kind: &'static str,
    pub source: &'static str,
    pub name: &'static str,
    pub params: BTreeMap<String, String>,
    /// `pass`, `fail` or `flagged`.
    pub outcome: &'static str,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpectSummary {
    pub schema: u32,
    pub command: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub passed: usize,
    pub failed: usize,
    pub flagged: usize,
    pub lines: Vec<ExpectLine>,
}
