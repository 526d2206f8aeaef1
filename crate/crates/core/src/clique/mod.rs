//! Exact clique numbers, maximum-clique enumeration and the clique-structure
//! diagnostics used by the partition engine.

pub mod independent;
pub(crate) mod search;

use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use thiserror::Error;

/// Upper limit on cliques emitted by an enumeration.
pub const CLIQUE_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CliqueError {
    #[error("clique enumeration exceeded {cap} cliques")]
    Overflow { cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The supplied clique was not maximum: here is a larger one.
    #[error("found a clique of size {} larger than the supplied clique", clique.len())]
    Contradiction { clique: Vec<usize> },
}

/// ω together with a witness clique (lexicographically smallest among the
/// maximum cliques).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCertificate {
    pub omega: usize,
    pub witness: Vec<usize>,
}

pub fn clique_number(g: &Graph) -> CliqueCertificate {
    clique_number_within(g, &g.all_vertices())
}

/// Clique certificate for the subgraph induced by `within`, in the ids of `g`.
pub fn clique_number_within(g: &Graph, within: &VertexSet) -> CliqueCertificate {
    let omega = search::max_clique_size(g, within);
    let witness = search::lex_first_clique(g, within, omega).expect("a clique of size omega exists");
    CliqueCertificate { omega, witness }
}

/// ω of the subgraph induced by `within`.
pub fn omega_within(g: &Graph, within: &VertexSet) -> usize {
    search::max_clique_size(g, within)
}

/// A clique of exactly `size` vertices inside `within`, if there is one
/// (lexicographically smallest).
pub fn find_clique(g: &Graph, within: &VertexSet, size: usize) -> Option<Vec<usize>> {
    search::lex_first_clique(g, within, size)
}

/// Every maximum clique of `g`, each sorted ascending, the list sorted
/// lexicographically.
pub fn all_maximum_cliques(g: &Graph) -> Vec<Vec<usize>> {
    maximum_cliques_within(g, &g.all_vertices(), usize::MAX)
        .expect("uncapped")
        .1
}

/// Maximum cliques inside `within`; `None` when there are more than `cap`.
pub fn maximum_cliques_within(g: &Graph, within: &VertexSet, cap: usize) -> Option<(usize, Vec<Vec<usize>>)> {
    search::all_max_cliques(g, within, cap)
}

/// All cliques with exactly `t` vertices (not necessarily maximal).
pub fn cliques_of_size(g: &Graph, t: usize) -> Result<Vec<Vec<usize>>, CliqueError> {
    if t == 0 || t > g.n() {
        return Err(CliqueError::Precondition(format!(
            "clique size {t} outside 1..={}",
            g.n()
        )));
    }
    search::cliques_of_size_within(g, &g.all_vertices(), t, CLIQUE_ENUMERATION_CAP).map_err(|_| {
        CliqueError::Overflow {
            cap: CLIQUE_ENUMERATION_CAP,
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueIntersectionReport {
    pub target_size: usize,
    pub cliques: Vec<Vec<usize>>,
    /// `pairwise_intersections[i][j] = |K_i ∩ K_j|`.
    pub pairwise_intersections: Vec<Vec<usize>>,
    /// Pairs `(i, j)`, `i < j`, meeting in `t-1` or `t-2` vertices.
    pub flagged: Vec<(usize, usize)>,
}

/// Pairwise overlap sizes of all `t`-cliques. Overlaps of `t-1` and `t-2`
/// are flagged: minimal counter-examples cannot contain them.
pub fn intersection_report(g: &Graph, t: usize) -> Result<CliqueIntersectionReport, CliqueError> {
    if t < 2 {
        return Err(CliqueError::Precondition(format!("target size {t} < 2")));
    }
    let cliques = if t > g.n() { Vec::new() } else { cliques_of_size(g, t)? };
    let n = g.n();
    let sets: Vec<VertexSet> = cliques
        .iter()
        .map(|c| VertexSet::from_iter(n, c.iter().copied()))
        .collect();
    let k = sets.len();
    let mut matrix = vec![vec![0; k]; k];
    let mut flagged = Vec::new();
    for i in 0..k {
        matrix[i][i] = t;
        for j in i + 1..k {
            let s = sets[i].intersection_len(&sets[j]);
            matrix[i][j] = s;
            matrix[j][i] = s;
            if s + 1 == t || s + 2 == t {
                flagged.push((i, j));
            }
        }
    }
    Ok(CliqueIntersectionReport {
        target_size: t,
        cliques,
        pairwise_intersections: matrix,
        flagged,
    })
}

/// For a maximum clique `k` and an edge `v–v2` outside it, two distinct
/// members `w, w2` of `k` with `v ≁ w` and `v2 ≁ w2`.
///
/// If no such pair exists, `k` was not maximum and the larger clique is
/// returned as [`CliqueError::Contradiction`].
pub fn non_neighbor_witness(g: &Graph, k: &[usize], v: usize, v2: usize) -> Result<(usize, usize), CliqueError> {
    let n = g.n();
    if let Some(&x) = k.iter().chain([&v, &v2]).find(|&&x| x >= n) {
        return Err(CliqueError::Precondition(format!("vertex {x} out of range")));
    }
    if !g.is_clique(k) {
        return Err(CliqueError::Precondition("k does not induce a clique".into()));
    }
    if k.contains(&v) || k.contains(&v2) {
        return Err(CliqueError::Precondition("v and v2 must lie outside k".into()));
    }
    if !g.has_edge(v, v2) {
        return Err(CliqueError::Precondition(format!("{v}-{v2} is not an edge")));
    }
    let mut sorted = k.to_vec();
    sorted.sort_unstable();
    let miss_v: Vec<usize> = sorted.iter().copied().filter(|&w| !g.has_edge(v, w)).collect();
    let miss_v2: Vec<usize> = sorted.iter().copied().filter(|&w| !g.has_edge(v2, w)).collect();
    for &w in &miss_v {
        if let Some(&w2) = miss_v2.iter().find(|&&w2| w2 != w) {
            return Ok((w, w2));
        }
    }
    let mut clique: Vec<usize> = match (miss_v.as_slice(), miss_v2.as_slice()) {
        ([], _) => sorted.iter().copied().chain([v]).collect(),
        (_, []) => sorted.iter().copied().chain([v2]).collect(),
        // both miss exactly the same single vertex x: (k - x) + v + v2
        ([x], _) => sorted
            .iter()
            .copied()
            .filter(|w| w != x)
            .chain([v, v2])
            .collect(),
        _ => unreachable!("two nonempty miss lists always yield a distinct pair unless both are the same singleton"),
    };
    clique.sort_unstable();
    debug_assert!(g.is_clique(&clique));
    Err(CliqueError::Contradiction { clique })
}
