use clique_splitter::partition::StrategyDiagnostic;
use clique_splitter::{GraphError, OracleError, PartitionError};
use thiserror::Error;

/// Process exit codes. These are a stable contract.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const PRECONDITION: i32 = 2;
    pub const EXHAUSTED: i32 = 3;
    pub const INVALID: i32 = 4;
}

#[derive(Error, Debug)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("precondition failed: {reason}")]
    Precondition { reason: String, witness: Option<Vec<usize>> },
    #[error("all strategies exhausted at depth {depth}")]
    Exhausted {
        depth: usize,
        diagnostics: Vec<StrategyDiagnostic>,
        proven_infeasible: bool,
    },
    #[error("partition is invalid")]
    Invalid,
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Input(_) | CliError::Graph(_) | CliError::Oracle(_) => exit::IO,
            CliError::Precondition { .. } => exit::PRECONDITION,
            CliError::Exhausted { .. } => exit::EXHAUSTED,
            CliError::Invalid => exit::INVALID,
            CliError::Internal(_) => exit::EXHAUSTED,
        }
    }
}

impl From<PartitionError> for CliError {
    fn from(e: PartitionError) -> Self {
        match e {
            PartitionError::Precondition { reason, witness } => CliError::Precondition { reason, witness },
            PartitionError::Spec(s) => CliError::Precondition {
                reason: s.to_string(),
                witness: None,
            },
            PartitionError::UnknownStrategy(name) => CliError::Input(format!("unknown strategy `{name}`")),
            PartitionError::Exhausted {
                depth,
                diagnostics,
                proven_infeasible,
            } => CliError::Exhausted {
                depth,
                diagnostics,
                proven_infeasible,
            },
            PartitionError::Oracle(o) => CliError::Oracle(o),
            other => CliError::Internal(other.to_string()),
        }
    }
}
