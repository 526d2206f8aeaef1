//! Independent transversals of the maximum cliques, and recognition of the
//! `C_{2t+1} ⊠ K_m` family that has none.

use crate::clique::{clique_number_within, maximum_cliques_within, CliqueCertificate};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{OracleBudget, OracleError};
use serde::Serialize;
use std::collections::HashMap;

/// Cap on the number of maximum cliques the transversal search will take on.
const MAX_CLIQUES: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum HittingSetResult {
    /// `set` is independent, meets every maximum clique, and removing it
    /// leaves clique number `after.omega = omega - 1`.
    Found {
        set: Vec<usize>,
        omega: usize,
        after: CliqueCertificate,
    },
    /// The graph is `C_cycle_len ⊠ K_m`.
    Exception { cycle_len: usize, m: usize },
    /// Exhaustive search proved no independent transversal exists.
    NotFound,
}

/// Searches for an independent set meeting every maximum clique of `g`.
pub fn hitting_independent_set(g: &Graph, budget: &OracleBudget) -> Result<HittingSetResult, OracleError> {
    hitting_within(g, &g.all_vertices(), budget)
}

/// As [`hitting_independent_set`] on `g[within]`, in the ids of `g`.
pub(crate) fn hitting_within(g: &Graph, within: &VertexSet, budget: &OracleBudget) -> Result<HittingSetResult, OracleError> {
    if within.is_empty() {
        return Ok(HittingSetResult::NotFound);
    }
    let full = within.len() == g.n();
    if full {
        if let Some((cycle_len, m)) = detect_cycle_clique_product(g) {
            return Ok(HittingSetResult::Exception { cycle_len, m });
        }
    } else {
        let (sub, _) = g.induced_by_set(within);
        if let Some((cycle_len, m)) = detect_cycle_clique_product(&sub) {
            return Ok(HittingSetResult::Exception { cycle_len, m });
        }
    }
    let (omega, cliques) = maximum_cliques_within(g, within, MAX_CLIQUES).ok_or(OracleError::TooManyStates {
        routine: "hitting_independent_set",
        cap: MAX_CLIQUES as u64,
    })?;
    let n = g.n();
    let sets: Vec<VertexSet> = cliques
        .iter()
        .map(|c| VertexSet::from_iter(n, c.iter().copied()))
        .collect();
    let mut search = Transversal {
        g,
        cliques: &sets,
        chosen: Vec::new(),
        blocked: VertexSet::new(n),
        states: 0,
        max_states: budget.max_states,
    };
    match search.run() {
        None => Err(OracleError::TooManyStates {
            routine: "hitting_independent_set",
            cap: budget.max_states,
        }),
        Some(false) => Ok(HittingSetResult::NotFound),
        Some(true) => {
            let mut set = search.chosen;
            set.sort_unstable();
            let mut rest = within.clone();
            for &v in &set {
                rest.remove(v);
            }
            let after = clique_number_within(g, &rest);
            debug_assert_eq!(after.omega + 1, omega);
            Ok(HittingSetResult::Found { set, omega, after })
        }
    }
}

struct Transversal<'a> {
    g: &'a Graph,
    cliques: &'a [VertexSet],
    chosen: Vec<usize>,
    /// chosen vertices and their neighbors
    blocked: VertexSet,
    states: u64,
    max_states: u64,
}

impl Transversal<'_> {
    fn run(&mut self) -> Option<bool> {
        self.states += 1;
        if self.states > self.max_states {
            return None;
        }
        // most constrained unhit clique first
        let mut pick: Option<(usize, VertexSet)> = None;
        for c in self.cliques {
            if self.chosen.iter().any(|&v| c.contains(v)) {
                continue;
            }
            let mut avail = c.clone();
            avail.difference_with(&self.blocked);
            if avail.is_empty() {
                return Some(false);
            }
            if pick.as_ref().is_none_or(|(k, _)| avail.len() < *k) {
                pick = Some((avail.len(), avail));
            }
        }
        let Some((_, avail)) = pick else {
            return Some(true);
        };
        for v in avail.iter() {
            let saved = self.blocked.clone();
            self.blocked.insert(v);
            self.blocked.union_with(self.g.neighbor_set(v));
            self.chosen.push(v);
            match self.run() {
                Some(false) => {}
                other => return other,
            }
            self.chosen.pop();
            self.blocked = saved;
        }
        Some(false)
    }
}

/// Recognizes `C_{2t+1} ⊠ K_m` (`t >= 2`, `m >= 1`) and returns
/// `(2t+1, m)`.
///
/// The graph must be `(3m-1)`-regular, its true-twin classes (equal closed
/// neighborhoods) must all have size `m`, and the quotient on those classes
/// must be a single odd cycle of length at least 5.
pub fn detect_cycle_clique_product(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    if n == 0 || !g.is_regular() || (g.max_degree() + 1) % 3 != 0 {
        return None;
    }
    let m = (g.max_degree() + 1) / 3;
    if n % m != 0 {
        return None;
    }
    let len = n / m;
    if len < 5 || len % 2 == 0 {
        return None;
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: HashMap<VertexSet, usize> = HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let key = g.closed_neighborhood(v);
        let next = classes.len();
        let c = *classes.entry(key).or_insert(next);
        if c == members.len() {
            members.push(Vec::new());
        }
        members[c].push(v);
        class_of[v] = c;
    }
    if members.len() != len || members.iter().any(|c| c.len() != m) {
        return None;
    }
    // quotient must be 2-regular and connected
    let quotient: Vec<Vec<usize>> = members
        .iter()
        .map(|c| {
            let mut nb: Vec<usize> = g.neighbors(c[0]).iter().map(|&u| class_of[u]).collect();
            nb.sort_unstable();
            nb.dedup();
            nb.retain(|&x| x != class_of[c[0]]);
            nb
        })
        .collect();
    if quotient.iter().any(|nb| nb.len() != 2) {
        return None;
    }
    let mut seen = vec![false; len];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(c) = stack.pop() {
        for &d in &quotient[c] {
            if !seen[d] {
                seen[d] = true;
                stack.push(d);
            }
        }
    }
    seen.iter().all(|&s| s).then_some((len, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete_graph, cycle_graph, petersen};
    use crate::graph::{generate, GeneratorRecipe};

    fn budget() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn complete_graph_hit_by_one_vertex() {
        match hitting_independent_set(&complete_graph(5), &budget()).unwrap() {
            HittingSetResult::Found { set, omega, after } => {
                assert_eq!(set.len(), 1);
                assert_eq!(omega, 5);
                assert_eq!(after.omega, 4);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_disjoint_k4() {
        let g = complete_graph(4).disjoint_union(&complete_graph(4));
        match hitting_independent_set(&g, &budget()).unwrap() {
            HittingSetResult::Found { set, after, .. } => {
                assert_eq!(set.len(), 2);
                assert!(set[0] < 4 && set[1] >= 4);
                assert_eq!(after.omega, 3);
            }
            other => panic!("{other:?}"),
        }
    }

    /// Enumerates every independent set of the 10-vertex product and checks
    /// none meets all five maximum cliques.
    #[test]
    fn c5_k2_has_no_transversal() {
        let g = generate(&GeneratorRecipe::parse("strong:5x2", 0).unwrap()).unwrap();
        let cliques = crate::clique::all_maximum_cliques(&g);
        assert_eq!(cliques.len(), 5);
        let any = (0u32..1 << 10).any(|mask| {
            let vs: Vec<usize> = (0..10).filter(|i| mask & (1 << i) != 0).collect();
            g.is_independent(&vs) && cliques.iter().all(|c| c.iter().any(|v| vs.contains(v)))
        });
        assert!(!any);
        assert_eq!(
            hitting_independent_set(&g, &budget()).unwrap(),
            HittingSetResult::Exception { cycle_len: 5, m: 2 }
        );
    }

    #[test]
    fn recognizer() {
        let g = generate(&GeneratorRecipe::parse("strong:7x3", 0).unwrap()).unwrap();
        assert_eq!(detect_cycle_clique_product(&g), Some((7, 3)));
        assert_eq!(detect_cycle_clique_product(&petersen()), None);
        assert_eq!(detect_cycle_clique_product(&cycle_graph(5)), Some((5, 1)));
        assert_eq!(detect_cycle_clique_product(&cycle_graph(6)), None);
        assert_eq!(detect_cycle_clique_product(&cycle_graph(3)), None);
        // two disjoint C5 ⊠ K1: regular, right class sizes, but disconnected
        let two = cycle_graph(5).disjoint_union(&cycle_graph(5));
        assert_eq!(detect_cycle_clique_product(&two), None);
        assert_eq!(detect_cycle_clique_product(&Graph::empty(0)), None);
    }

    #[test]
    fn odd_cycle_not_product_when_disconnected_from_rest() {
        let g = cycle_graph(5).disjoint_union(&complete_graph(2));
        // maximum cliques are the six edges; no independent set meets them all
        assert_eq!(hitting_independent_set(&g, &budget()).unwrap(), HittingSetResult::NotFound);
    }
}
