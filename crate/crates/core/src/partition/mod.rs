//! Partition procedures: degree-bounded bipartition, hitting independent
//! sets, clique-split exchange search, the strategy cascade behind
//! [`clique_bipartition`], its k-way extension and the maximum
//! `K_p`-free bipartition.

mod bipartition;
mod exchange;
mod hitting;
mod kway;
mod degree_split;
mod max_free;
pub mod strategies;
mod strategy;
mod types;

pub use bipartition::{check_bipartition_preconditions, clique_bipartition};
pub use exchange::{exchange_refine, CliqueSplitFamily, ExchangeOutcome, MoveKind, StuckReport};
pub use hitting::{detect_cycle_clique_product, hitting_independent_set, HittingSetResult};
pub use kway::kway_clique_partition;
pub use degree_split::{degree_bounded_bipartition, DegreeBipartition};
pub use max_free::{max_kpfree_partition, MaxFreeCertificate, MaxFreePartition};
pub use strategy::{
    BipartitionProblem, BipartitionStrategy, Engine, EngineConfig, StrategyDiagnostic, StrategyOutcome,
    StrategyRegistry,
};
pub use types::{PartitionSpec, Partition, SpecError, VerificationReport, Violation};
pub(crate) use types::part_sets;

use crate::clique::CliqueError;
use crate::oracle::OracleError;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("precondition violated: {reason}")]
    Precondition {
        reason: String,
        /// A clique witnessing the violation, when the violated hypothesis is
        /// a clique-number bound.
        witness: Option<Vec<usize>>,
    },
    #[error("all strategies exhausted at recursion depth {depth}{}", if *.proven_infeasible { " (oracle: infeasible)" } else { "" })]
    Exhausted {
        depth: usize,
        diagnostics: Vec<StrategyDiagnostic>,
        /// The exhaustive search proved that no valid partition exists.
        proven_infeasible: bool,
    },
    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Clique(#[from] CliqueError),
    #[error("internal search failure: {0}")]
    Internal(String),
}

impl PartitionError {
    pub(crate) fn precondition(reason: impl Into<String>) -> Self {
        PartitionError::Precondition {
            reason: reason.into(),
            witness: None,
        }
    }
}
