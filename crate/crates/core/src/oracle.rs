//! Exhaustive ground-truth routines for desk-scale graphs.
//!
//! Every routine with exponential cost takes an explicit [`OracleBudget`] and
//! refuses inputs beyond it instead of degrading to a heuristic.

use crate::clique::{clique_number_within, find_clique, omega_within};
use crate::coloring::{dsatur, exact_coloring, num_colors};
use crate::graph::{Graph, VertexSet};
use crate::partition::{part_sets, Partition, PartitionSpec, VerificationReport, Violation};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleBudget {
    /// Vertex cap for assignment enumeration (k-way partition search).
    pub max_assignment_n: usize,
    /// Vertex cap for subset and coloring enumeration.
    pub max_enumeration_n: usize,
    /// Hard cap on explored search states.
    pub max_states: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_assignment_n: 14,
            max_enumeration_n: 20,
            max_states: 100_000_000,
        }
    }
}

impl OracleBudget {
    /// Default budget with both vertex caps set to `n`.
    pub fn with_max_n(n: usize) -> Self {
        OracleBudget {
            max_assignment_n: n,
            max_enumeration_n: n,
            ..Self::default()
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{routine}: {n} vertices exceeds the budget of {cap}")]
    TooManyVertices {
        routine: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("{routine}: explored more than {cap} states")]
    TooManyStates { routine: &'static str, cap: u64 },
    #[error("partition does not match graph: {0}")]
    Shape(String),
}

fn check_n(routine: &'static str, n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::TooManyVertices { routine, n, cap })
    } else {
        Ok(())
    }
}

/// Decides whether `g` splits into parts with `ω(g[V_i]) <= quotas[i] - 1`,
/// returning a witness partition when it does.
///
/// Backtracks over vertices by descending degree; a vertex may join part `i`
/// only if its neighbors already there contain no `(p_i - 1)`-clique. Empty
/// parts with equal quotas are interchangeable, so only the first is tried.
pub fn exists_clique_partition(
    g: &Graph,
    quotas: &[usize],
    budget: &OracleBudget,
) -> Result<Option<Partition>, OracleError> {
    check_n("exists_clique_partition", g.n(), budget.max_assignment_n)?;
    let n = g.n();
    let k = quotas.len();
    if k == 0 {
        return Ok(if n == 0 {
            Some(Partition::new(g, Vec::new(), quotas, "oracle"))
        } else {
            None
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut st = PartitionSearch {
        g,
        quotas,
        order,
        parts: vec![VertexSet::new(n); k],
        assignment: vec![usize::MAX; n],
        states: 0,
        max_states: budget.max_states,
    };
    match st.search(0) {
        Some(true) => Ok(Some(Partition::new(g, st.assignment, quotas, "oracle"))),
        Some(false) => Ok(None),
        None => Err(OracleError::TooManyStates {
            routine: "exists_clique_partition",
            cap: budget.max_states,
        }),
    }
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    quotas: &'a [usize],
    order: Vec<usize>,
    parts: Vec<VertexSet>,
    assignment: Vec<usize>,
    states: u64,
    max_states: u64,
}

impl PartitionSearch<'_> {
    fn fits(&self, v: usize, part: usize) -> bool {
        let p = self.quotas[part];
        if p == 0 {
            return false;
        }
        if p == 1 {
            // K_1-free parts stay empty
            return false;
        }
        let nbrs = self.parts[part].intersection(self.g.neighbor_set(v));
        nbrs.len() < p - 1 || find_clique(self.g, &nbrs, p - 1).is_none()
    }

    fn search(&mut self, idx: usize) -> Option<bool> {
        if idx == self.order.len() {
            return Some(true);
        }
        self.states += 1;
        if self.states > self.max_states {
            return None;
        }
        let v = self.order[idx];
        for part in 0..self.quotas.len() {
            if self.parts[part].is_empty()
                && (0..part).any(|j| self.quotas[j] == self.quotas[part] && self.parts[j].is_empty())
            {
                continue;
            }
            if !self.fits(v, part) {
                continue;
            }
            self.parts[part].insert(v);
            self.assignment[v] = part;
            let r = self.search(idx + 1);
            if r != Some(false) {
                return r;
            }
            self.parts[part].remove(v);
            self.assignment[v] = usize::MAX;
        }
        Some(false)
    }
}

/// A largest `S` with `ω(g[S]) <= p - 1`; among the largest, the
/// lexicographically smallest sorted vertex list.
pub fn max_kpfree_subset(g: &Graph, p: usize, budget: &OracleBudget) -> Result<Vec<usize>, OracleError> {
    check_n("max_kpfree_subset", g.n(), budget.max_enumeration_n)?;
    if p <= 1 {
        return Ok(Vec::new());
    }
    let n = g.n();
    let mut st = SubsetSearch {
        g,
        p,
        cur: VertexSet::new(n),
        size: 0,
        best: None,
        states: 0,
        max_states: budget.max_states,
    };
    if !st.search(0) {
        return Err(OracleError::TooManyStates {
            routine: "max_kpfree_subset",
            cap: budget.max_states,
        });
    }
    Ok(st.best.map(|s| s.to_vec()).unwrap_or_default())
}

struct SubsetSearch<'a> {
    g: &'a Graph,
    p: usize,
    cur: VertexSet,
    size: usize,
    best: Option<VertexSet>,
    states: u64,
    max_states: u64,
}

impl SubsetSearch<'_> {
    fn best_len(&self) -> Option<usize> {
        self.best.as_ref().map(VertexSet::len)
    }

    /// Include-first DFS in vertex order; only strict improvements replace
    /// the incumbent, so the first optimum found is the lexicographically
    /// smallest. Returns false on budget exhaustion.
    fn search(&mut self, v: usize) -> bool {
        self.states += 1;
        if self.states > self.max_states {
            return false;
        }
        let n = self.g.n();
        if let Some(b) = self.best_len() {
            if self.size + (n - v) <= b {
                return true;
            }
        }
        if v == n {
            self.best = Some(self.cur.clone());
            return true;
        }
        let nbrs = self.cur.intersection(self.g.neighbor_set(v));
        if nbrs.len() < self.p - 1 || find_clique(self.g, &nbrs, self.p - 1).is_none() {
            self.cur.insert(v);
            self.size += 1;
            let ok = self.search(v + 1);
            self.cur.remove(v);
            self.size -= 1;
            if !ok {
                return false;
            }
        }
        self.search(v + 1)
    }
}

/// Exact chromatic number.
pub fn chromatic_number(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    check_n("chromatic_number", g.n(), budget.max_enumeration_n)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let upper = num_colors(&dsatur(g));
    let lower = omega_within(g, &g.all_vertices()).max(1);
    for k in lower..upper {
        match exact_coloring(g, k, budget.max_states) {
            Ok(Some(_)) => return Ok(k),
            Ok(None) => {}
            Err(_) => {
                return Err(OracleError::TooManyStates {
                    routine: "chromatic_number",
                    cap: budget.max_states,
                })
            }
        }
    }
    Ok(upper)
}

/// Degeneracy by repeated minimum-degree removal.
pub fn degeneracy(g: &Graph) -> usize {
    degeneracy_within(g, &g.all_vertices())
}

/// Degeneracy of the subgraph induced by `within`.
pub fn degeneracy_within(g: &Graph, within: &VertexSet) -> usize {
    let mut rest = within.clone();
    let mut deg: Vec<usize> = (0..g.n())
        .map(|v| if rest.contains(v) { g.degree_into(v, &rest) } else { 0 })
        .collect();
    let mut best = 0;
    while let Some(v) = rest.iter().min_by_key(|&v| (deg[v], v)) {
        best = best.max(deg[v]);
        rest.remove(v);
        for &u in g.neighbors(v) {
            if rest.contains(u) {
                deg[u] -= 1;
            }
        }
    }
    best
}

/// Checks a total assignment against the quotas with exact clique numbers,
/// attaching a `p_i`-clique witness to every violated part.
pub fn verify_partition(g: &Graph, assignment: &[usize], spec: &PartitionSpec) -> Result<VerificationReport, OracleError> {
    verify_assignment(g, assignment, spec.quotas())
}

pub fn verify_assignment(g: &Graph, assignment: &[usize], quotas: &[usize]) -> Result<VerificationReport, OracleError> {
    if assignment.len() != g.n() {
        return Err(OracleError::Shape(format!(
            "assignment has {} entries, graph has {} vertices",
            assignment.len(),
            g.n()
        )));
    }
    let k = quotas.len();
    if let Some((v, &p)) = assignment.iter().enumerate().find(|(_, &p)| p >= k) {
        return Err(OracleError::Shape(format!(
            "vertex {v} assigned to part {p}, only {k} parts"
        )));
    }
    let sets = part_sets(g.n(), assignment, k);
    let mut part_omegas = Vec::with_capacity(k);
    let mut violations = Vec::new();
    for (i, set) in sets.iter().enumerate() {
        let cert = clique_number_within(g, set);
        if cert.omega >= quotas[i] {
            violations.push(Violation {
                part: i,
                witness: cert.witness[..quotas[i]].to_vec(),
            });
        }
        part_omegas.push(cert.omega);
    }
    Ok(VerificationReport {
        part_omegas,
        valid: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::clique_number;
    use crate::graph::generators::{complete_graph, cycle_graph, petersen};
    use crate::graph::{generate, GeneratorRecipe};

    fn budget() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn partition_existence_examples() {
        let c5 = cycle_graph(5);
        assert!(exists_clique_partition(&c5, &[2, 2], &budget()).unwrap().is_none());
        let w = exists_clique_partition(&c5, &[3, 2], &budget()).unwrap().unwrap();
        assert!(w.is_valid());
        assert!(exists_clique_partition(&complete_graph(6), &[4, 3], &budget())
            .unwrap()
            .is_none());
        assert!(exists_clique_partition(&complete_graph(6), &[4, 4], &budget())
            .unwrap()
            .is_some());
    }

    /// Full k^n enumeration used to cross-check the pruned search.
    fn naive_exists(g: &Graph, quotas: &[usize]) -> bool {
        let n = g.n();
        let k = quotas.len();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let assignment: Vec<usize> = (0..n)
                .map(|_| {
                    let p = code % k;
                    code /= k;
                    p
                })
                .collect();
            verify_assignment(g, &assignment, quotas).unwrap().valid
        })
    }

    #[test]
    fn pruned_search_matches_naive_enumeration() {
        for seed in 0..40 {
            let n = 5 + (seed % 4) as usize;
            let g = generate(&GeneratorRecipe::parse(&format!("gnp:{n},0.55"), seed).unwrap()).unwrap();
            for quotas in [vec![2, 2], vec![3, 2], vec![2, 2, 2], vec![3, 3], vec![4, 2]] {
                let fast = exists_clique_partition(&g, &quotas, &budget()).unwrap();
                assert_eq!(fast.is_some(), naive_exists(&g, &quotas), "seed {seed} {quotas:?}");
                if let Some(w) = fast {
                    assert!(w.is_valid());
                }
            }
        }
    }

    #[test]
    fn budgets_are_enforced() {
        let g = cycle_graph(30);
        assert!(matches!(
            exists_clique_partition(&g, &[2, 2], &budget()),
            Err(OracleError::TooManyVertices { .. })
        ));
        assert!(max_kpfree_subset(&g, 2, &budget()).is_err());
        assert!(chromatic_number(&g, &budget()).is_err());
        let tiny = OracleBudget {
            max_states: 5,
            ..budget()
        };
        assert!(matches!(
            exists_clique_partition(&petersen(), &[3, 3], &tiny),
            Err(OracleError::TooManyStates { .. })
        ));
    }

    #[test]
    fn max_free_subsets() {
        let s = max_kpfree_subset(&complete_graph(5), 3, &budget()).unwrap();
        assert_eq!(s, vec![0, 1]);
        let s = max_kpfree_subset(&cycle_graph(5), 2, &budget()).unwrap();
        assert_eq!(s, vec![0, 2]);
        let p = petersen();
        let s = max_kpfree_subset(&p, 2, &budget()).unwrap();
        assert_eq!(s.len(), 4);
        assert!(p.is_independent(&s));
        // brute-force independent sets of the Petersen graph
        let brute = (0u32..1 << 10)
            .filter(|m| {
                let vs: Vec<usize> = (0..10).filter(|i| m & (1 << i) != 0).collect();
                p.is_independent(&vs)
            })
            .map(|m| m.count_ones())
            .max()
            .unwrap();
        assert_eq!(brute, 4);
        assert!(max_kpfree_subset(&p, 1, &budget()).unwrap().is_empty());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&cycle_graph(5), &budget()).unwrap(), 3);
        assert_eq!(chromatic_number(&complete_graph(7), &budget()).unwrap(), 7);
        assert_eq!(chromatic_number(&petersen(), &budget()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(0), &budget()).unwrap(), 0);
    }

    #[test]
    fn degeneracies() {
        let tree = Graph::from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(degeneracy(&tree), 1);
        assert_eq!(degeneracy(&complete_graph(5)), 4);
        assert_eq!(degeneracy(&petersen()), 3);
        assert_eq!(degeneracy(&Graph::empty(0)), 0);
    }

    #[test]
    fn verification() {
        let c6 = cycle_graph(6);
        let spec = PartitionSpec::new(vec![2, 2]).unwrap();
        let r = verify_partition(&c6, &[0, 1, 0, 1, 0, 1], &spec).unwrap();
        assert!(r.valid);
        assert_eq!(r.part_omegas, vec![1, 1]);

        let k4 = complete_graph(4);
        let spec = PartitionSpec::new(vec![3, 2]).unwrap();
        let r = verify_partition(&k4, &[0, 0, 0, 0], &spec).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].witness.len(), 3);
        assert!(k4.is_clique(&r.violations[0].witness));

        assert!(verify_partition(&k4, &[0, 0], &spec).is_err());
        assert!(verify_partition(&k4, &[0, 0, 0, 5], &spec).is_err());
    }

    #[test]
    fn fixture_properties() {
        for seed in 0..30 {
            let g = generate(&GeneratorRecipe::parse("gnp:11,0.4", seed).unwrap()).unwrap();
            let chi = chromatic_number(&g, &budget()).unwrap();
            assert!(chi <= g.max_degree() + 1);
            assert!(degeneracy(&g) + 1 >= clique_number(&g).omega);
            let sizes: Vec<usize> = (1..5)
                .map(|p| max_kpfree_subset(&g, p, &budget()).unwrap().len())
                .collect();
            assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
