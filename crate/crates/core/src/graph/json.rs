//! Adjacency JSON: `{"n": int, "edges": [[u, v], ...]}` with 0-indexed endpoints.

use super::{Graph, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for AdjacencyJson {
    fn from(g: &Graph) -> Self {
        AdjacencyJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<&AdjacencyJson> for Graph {
    type Error = GraphError;

    fn try_from(doc: &AdjacencyJson) -> Result<Graph, GraphError> {
        Graph::from_edges(doc.n, doc.edges.iter().map(|e| (e[0], e[1])))
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&AdjacencyJson::from(g)).expect("plain data serializes")
}

pub fn parse_json(text: &str) -> Result<Graph, GraphError> {
    let doc: AdjacencyJson = serde_json::from_str(text).map_err(|e| GraphError::Parse {
        line: e.line(),
        reason: e.to_string(),
    })?;
    Graph::try_from(&doc)
}
