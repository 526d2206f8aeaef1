//! Partitioning a graph's vertices into parts with bounded clique numbers.
//!
//! The crate is organized bottom-up: [`graph`] holds the bitset graph and
//! its file formats and generators, [`clique`] the exact clique searches,
//! [`coloring`] DSatur and exact coloring, [`oracle`] exhaustive ground
//! truth for small graphs, and [`partition`] the partition procedures and
//! the strategy engine.

pub mod clique;
pub mod coloring;
pub mod graph;
pub mod oracle;
pub mod partition;

pub use clique::{clique_number, CliqueCertificate};
pub use graph::{Graph, GraphError, VertexSet};
pub use oracle::{OracleBudget, OracleError};
pub use partition::{Engine, EngineConfig, Partition, PartitionError, PartitionSpec};
