//! Simple undirected graphs on dense vertex ids `0..n`.

mod bitset;
pub mod dimacs;
pub mod generators;
pub mod json;
mod product;

pub use bitset::VertexSet;
pub use generators::{generate, GeneratorKind, GeneratorRecipe};
pub use product::strong_product;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid generator recipe: {0}")]
    Recipe(String),
    #[error("graph too large: {0}")]
    TooLarge(String),
}

/// Immutable simple undirected graph.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and bitset
/// rows for the set intersections the clique searches run on.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    edge_count: usize,
    max_degree: usize,
    min_degree: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.edge_count)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let adj: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        let degree_sum: usize = adj.iter().map(Vec::len).sum();
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        let min_degree = adj.iter().map(Vec::len).min().unwrap_or(0);
        Graph {
            adj,
            rows,
            edge_count: degree_sum / 2,
            max_degree,
            min_degree,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_rows(vec![VertexSet::new(n); n])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Δ(H).
    #[inline]
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// δ(H).
    #[inline]
    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree == self.min_degree
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Number of neighbors of `v` inside `set`.
    #[inline]
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.rows[v].intersection_len(set)
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Number of edges with both endpoints in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.degree_into(v, set)).sum::<usize>() / 2
    }

    /// Maximum degree of the subgraph induced by `set` (0 when empty).
    pub fn max_degree_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.degree_into(v, set)).max().unwrap_or(0)
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let full = VertexSet::full(n);
        let rows = (0..n)
            .map(|v| {
                let mut r = full.clone();
                r.difference_with(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Induced subgraph on `vertices` (in the given order, deduplicated by
    /// first occurrence). Returns the subgraph and the map from new ids back
    /// to ids in `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        let mut back = Vec::with_capacity(vertices.len());
        for &v in vertices {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if index[v] == usize::MAX {
                index[v] = back.len();
                back.push(v);
            }
        }
        let m = back.len();
        let rows = back
            .iter()
            .map(|&v| {
                VertexSet::from_iter(
                    m,
                    self.adj[v]
                        .iter()
                        .filter(|&&u| index[u] != usize::MAX)
                        .map(|&u| index[u]),
                )
            })
            .collect();
        Ok((Self::from_rows(rows), back))
    }

    /// Induced subgraph on a bitset; the index map is ascending.
    pub fn induced_by_set(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(&set.to_vec())
            .expect("bitset members are in range")
    }

    /// Adds fresh vertices and edges, returning a new graph. New vertices get
    /// ids `n..n+extra`.
    pub fn extended(&self, extra: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut all = self.edges();
        all.extend_from_slice(edges);
        Graph::from_edges(self.n() + extra, all)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(off + other.n(), edges).expect("union of simple graphs is simple")
    }

    /// Closed neighborhood N[v] as a bitset.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }
}
