use clique_splitter::partition::MaxFreeCertificate;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum InputDescriptor {
    File(String),
    Recipe(String),
}

/// Machine-readable result of `partition`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub input: InputDescriptor,
    pub n: usize,
    pub quotas: Vec<usize>,
    pub strategy: String,
    pub assignment: Vec<usize>,
    pub part_omegas: Vec<usize>,
    pub valid: bool,
    pub elapsed_ms: u64,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<MaxFreeCertificateTag>,
}

/// Serialized form of the maximality certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaxFreeCertificateTag {
    Exhaustive,
    Local,
}

impl From<MaxFreeCertificate> for MaxFreeCertificateTag {
    fn from(c: MaxFreeCertificate) -> Self {
        match c {
            MaxFreeCertificate::Exhaustive => MaxFreeCertificateTag::Exhaustive,
            MaxFreeCertificate::Local => MaxFreeCertificateTag::Local,
        }
    }
}

/// The parts of a report that `verify` needs; other fields are ignored.
#[derive(Debug, Clone, Deserialize)]
pub struct PartitionDoc {
    pub assignment: Vec<usize>,
    #[serde(default)]
    pub quotas: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phenomenon {
    /// The engine gave up on a spec the oracle could not rule out.
    EngineExhausted,
    /// The oracle proved the spec infeasible.
    OracleInfeasible,
    /// `χ = Δ` while `ω <= Δ - 1`.
    BkTight,
}

/// One probe observation; `graph` alone is enough to re-check it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeFinding {
    pub recipe: String,
    pub seed: u64,
    pub graph: clique_splitter::graph::json::AdjacencyJson,
    pub max_degree: usize,
    pub omega: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chromatic: Option<usize>,
    pub spec: Option<Vec<usize>>,
    pub phenomenon: Phenomenon,
    /// Whether the engine produced a valid partition for `spec`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub engine_solved: Option<bool>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeSummary {
    pub samples: usize,
    /// Samples with `ω >= Δ`, outside the studied regime.
    pub excluded: usize,
    /// Oracle or engine calls that ran out of budget and were skipped.
    pub budget_skipped: usize,
    pub findings: usize,
    /// Engine succeeded where the oracle proved infeasibility (must stay 0).
    pub contradictions: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub omega: usize,
    pub regular: bool,
    pub degeneracy: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chromatic: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle_clique_product: Option<(usize, usize)>,
}
