//! The built-in bipartition strategies.
//!
//! Each works for any `(p, q)`; none assumes `p + q = Δ + 1`, so they can
//! be reused on the subgraphs produced by recursion.

use super::exchange::{exchange_refine, CliqueSplitFamily, ExchangeOutcome};
use super::hitting::{hitting_within, HittingSetResult};
use super::strategy::{BipartitionProblem, BipartitionStrategy, Engine, StrategyOutcome};
use super::Partition;
use crate::clique::independent::{extend_to_maximal, maximum_independent_set};
use crate::clique::{clique_number, maximum_cliques_within, omega_within};
use crate::coloring::{color_classes, dsatur, exact_coloring, num_colors};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{exists_clique_partition, OracleBudget};

/// Vertex cap for the exact coloring fallback.
const EXACT_COLORING_LIMIT: usize = 14;
/// Number of maximum cliques the exchange strategy tries as `K`.
const EXCHANGE_CLIQUES: usize = 8;
/// Cap on listed maximum cliques before falling back to a single one.
const CLIQUE_POOL: usize = 10_000;
/// Search-state cap for hitting-set searches made while stripping.
const STRIP_STATES: u64 = 1_000_000;

/// Bundles `p - 1` color classes of a proper coloring into `V1` and the rest
/// into `V2`; valid whenever at most `p + q - 2` colors are used.
pub struct ColoringStrategy;

impl BipartitionStrategy for ColoringStrategy {
    fn name(&self) -> &'static str {
        "coloring"
    }

    fn description(&self) -> &'static str {
        "proper coloring with at most p+q-2 colors, classes bundled into the two sides"
    }

    fn attempt(&self, problem: &BipartitionProblem<'_>, engine: &Engine) -> StrategyOutcome {
        let BipartitionProblem { graph: g, p, q, .. } = *problem;
        let limit = (p + q).saturating_sub(2);
        let mut coloring = dsatur(g);
        if num_colors(&coloring) > limit {
            if g.n() > EXACT_COLORING_LIMIT {
                return StrategyOutcome::Failed(format!(
                    "DSatur used {} colors > {limit}",
                    num_colors(&coloring)
                ));
            }
            match exact_coloring(g, limit, engine.config().budget.max_states) {
                Ok(Some(c)) => coloring = c,
                Ok(None) => return StrategyOutcome::Failed(format!("chromatic number exceeds {limit}")),
                Err(_) => return StrategyOutcome::Failed("exact coloring budget exhausted".into()),
            }
        }
        let mut classes = color_classes(&coloring);
        // largest classes first, ties by smallest member
        classes.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
        let first = VertexSet::from_iter(g.n(), classes.iter().take(p.saturating_sub(1)).flatten().copied());
        StrategyOutcome::Found(Partition::from_sides(g, &first, &[p, q], self.name()))
    }
}

/// Peels independent sets off the graph until the remainder is small
/// enough; the peeled sets form one side.
///
/// `q - 1` independent sets can hold no `K_q`, so peeling them into `V2`
/// works once the remainder has clique number at most `p - 1`. Every peel
/// that meets all maximum cliques lowers the clique number by one.
pub struct StrippingStrategy;

impl StrippingStrategy {
    /// Tries to peel at most `rounds` sets so that `ω(rest) < target`;
    /// returns the union of the peeled sets.
    fn strip(g: &Graph, rounds: usize, target: usize, hitting_first: bool, budget: &OracleBudget) -> Option<VertexSet> {
        let mut rest = g.all_vertices();
        let mut peeled = VertexSet::new(g.n());
        for round in 0..=rounds {
            if omega_within(g, &rest) < target {
                return Some(peeled);
            }
            if round == rounds || rest.is_empty() {
                return None;
            }
            let use_hitting = hitting_first || round > 0;
            let set = if use_hitting {
                match hitting_within(g, &rest, budget) {
                    Ok(HittingSetResult::Found { set, .. }) => extend_to_maximal(g, &rest, &set),
                    _ => maximum_independent_set(g, &rest),
                }
            } else {
                maximum_independent_set(g, &rest)
            };
            for v in set {
                rest.remove(v);
                peeled.insert(v);
            }
        }
        None
    }
}

impl BipartitionStrategy for StrippingStrategy {
    fn name(&self) -> &'static str {
        "stripping"
    }

    fn description(&self) -> &'static str {
        "peel maximum / clique-hitting independent sets into one side"
    }

    fn attempt(&self, problem: &BipartitionProblem<'_>, engine: &Engine) -> StrategyOutcome {
        let BipartitionProblem { graph: g, p, q, .. } = *problem;
        if p == 0 || q == 0 {
            return StrategyOutcome::Failed("quota 0 admits no vertex".into());
        }
        let budget = OracleBudget {
            max_states: STRIP_STATES.min(engine.config().budget.max_states),
            ..engine.config().budget
        };
        for hitting_first in [false, true] {
            // peel into V2, remainder V1
            if let Some(peeled) = Self::strip(g, q - 1, p, hitting_first, &budget) {
                let mut first = g.all_vertices();
                first.difference_with(&peeled);
                return StrategyOutcome::Found(Partition::from_sides(g, &first, &[p, q], self.name()));
            }
            // peel into V1, remainder V2
            if let Some(peeled) = Self::strip(g, p - 1, q, hitting_first, &budget) {
                return StrategyOutcome::Found(Partition::from_sides(g, &peeled, &[p, q], self.name()));
            }
        }
        StrategyOutcome::Failed("peeling did not bring the clique number down in time".into())
    }
}

/// Removes a maximum clique `K`, solves the rest through the engine, then
/// searches the splits of `K` with [`exchange_refine`].
pub struct ExchangeStrategy;

impl ExchangeStrategy {
    /// Pendant augmentation: a new `K_{Δ-1}` joined by one edge to the
    /// lowest vertex of degree below Δ. Δ is unchanged and the result
    /// restricted to the original vertices is a solution for `g`.
    fn augment(g: &Graph) -> Option<Graph> {
        let delta = g.max_degree();
        let v = (0..g.n()).find(|&v| g.degree(v) < delta)?;
        let n = g.n();
        let size = delta.checked_sub(1).filter(|&s| s >= 1)?;
        let mut edges: Vec<(usize, usize)> = (0..size)
            .flat_map(|i| (i + 1..size).map(move |j| (n + i, n + j)))
            .collect();
        edges.push((v, n));
        g.extended(size, &edges).ok()
    }

    fn with_clique(g: &Graph, clique: &[usize], p: usize, q: usize, depth: usize, engine: &Engine) -> Result<Partition, String> {
        let n = g.n();
        let k = clique.len();
        let lo = k.saturating_sub(q.saturating_sub(1));
        let hi = k.min(p.saturating_sub(1));
        if lo > hi {
            return Err(format!("no split of a {k}-clique fits quotas ({p}, {q})"));
        }
        let kset = VertexSet::from_iter(n, clique.iter().copied());
        let mut rest = g.all_vertices();
        rest.difference_with(&kset);
        let (sub, back) = g.induced_by_set(&rest);
        let inner = engine.solve(&sub, p, q, depth + 1).map_err(|e| format!("remainder: {e}"))?;
        let mut w1 = VertexSet::new(n);
        let mut w2 = VertexSet::new(n);
        for (i, &part) in inner.assignment.iter().enumerate() {
            if part == 0 {
                w1.insert(back[i]);
            } else {
                w2.insert(back[i]);
            }
        }
        let mut order = clique.to_vec();
        order.sort_by_key(|&x| (g.degree_into(x, &w1) as i64 - g.degree_into(x, &w2) as i64, x));
        let initial: Vec<usize> = order[..hi].to_vec();
        let family = CliqueSplitFamily::new(g, clique.to_vec(), w1, w2, lo..=hi, &initial).map_err(|e| e.to_string())?;
        match exchange_refine(g, family, p, q).map_err(|e| e.to_string())? {
            ExchangeOutcome::Success { partition, .. } => Ok(partition),
            ExchangeOutcome::Stuck(r) => Err(format!(
                "stuck after {} moves on clique {:?} in part {}",
                r.moves, r.offending_clique, r.part
            )),
        }
    }
}

impl BipartitionStrategy for ExchangeStrategy {
    fn name(&self) -> &'static str {
        "exchange"
    }

    fn description(&self) -> &'static str {
        "excise a maximum clique, solve the rest, and search the clique's splits"
    }

    fn attempt(&self, problem: &BipartitionProblem<'_>, engine: &Engine) -> StrategyOutcome {
        let BipartitionProblem { graph: g, p, q, depth } = *problem;
        if g.n() == 0 {
            return StrategyOutcome::Found(Partition::new(g, Vec::new(), &[p, q], self.name()));
        }
        let (omega, cliques) = match maximum_cliques_within(g, &g.all_vertices(), CLIQUE_POOL) {
            Some(found) => found,
            None => {
                // too many to list: fall back to the lexicographically first
                let cert = clique_number(g);
                (cert.omega, vec![cert.witness])
            }
        };
        let delta = g.max_degree();
        let augmented = (depth == 0 && !g.is_regular() && (omega + 2 == delta || omega + 3 == delta))
            .then(|| Self::augment(g))
            .flatten();
        let host = augmented.as_ref().unwrap_or(g);
        let mut notes = Vec::new();
        for clique in cliques.iter().take(EXCHANGE_CLIQUES) {
            match Self::with_clique(host, clique, p, q, depth, engine) {
                Ok(part) => {
                    let assignment = part.assignment[..g.n()].to_vec();
                    return StrategyOutcome::Found(Partition::new(g, assignment, &[p, q], self.name()));
                }
                Err(why) => notes.push(why),
            }
        }
        StrategyOutcome::Failed(format!(
            "{} clique(s) tried{}: {}",
            notes.len(),
            if augmented.is_some() { " on the pendant augmentation" } else { "" },
            notes.join("; ")
        ))
    }
}

/// Exact search through the oracle on small graphs; the only strategy that
/// can prove infeasibility.
pub struct ExhaustiveStrategy;

impl BipartitionStrategy for ExhaustiveStrategy {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn description(&self) -> &'static str {
        "oracle backtracking over all assignments (small graphs only)"
    }

    fn attempt(&self, problem: &BipartitionProblem<'_>, engine: &Engine) -> StrategyOutcome {
        let BipartitionProblem { graph: g, p, q, .. } = *problem;
        match exists_clique_partition(g, &[p, q], &engine.config().budget) {
            Ok(Some(part)) => StrategyOutcome::Found(part.with_strategy(self.name())),
            Ok(None) => StrategyOutcome::Infeasible(format!(
                "no assignment of the {} vertices is valid for ({p}, {q})",
                g.n()
            )),
            Err(e) => StrategyOutcome::Failed(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete_graph, cycle_graph, petersen};
    use crate::partition::strategy::StrategyRegistry;
    use crate::partition::EngineConfig;
    use std::sync::Arc;

    /// Runs one strategy; recursive calls go through the full cascade.
    fn solve_with(name: &str, g: &Graph, p: usize, q: usize) -> StrategyOutcome {
        let engine = Engine::new(EngineConfig::default()).unwrap();
        let s: Arc<dyn BipartitionStrategy> = StrategyRegistry::builtin().get(name).unwrap();
        s.attempt(&BipartitionProblem { graph: g, p, q, depth: 0 }, &engine)
    }

    fn assert_valid(out: StrategyOutcome) -> Partition {
        match out {
            StrategyOutcome::Found(part) => {
                assert!(part.is_valid(), "{part:?}");
                part
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn coloring_on_petersen() {
        // χ = 3 ≤ p + q - 2 = 3
        let part = assert_valid(solve_with("coloring", &petersen(), 3, 2));
        assert_eq!(part.strategy, "coloring");
    }

    #[test]
    fn coloring_declines_when_chromatic_number_too_large() {
        assert!(matches!(
            solve_with("coloring", &cycle_graph(5), 2, 2),
            StrategyOutcome::Failed(_)
        ));
    }

    #[test]
    fn stripping_on_petersen_and_cycles() {
        assert_valid(solve_with("stripping", &petersen(), 3, 2));
        assert_valid(solve_with("stripping", &cycle_graph(7), 2, 3));
        assert_valid(solve_with("stripping", &complete_graph(6), 4, 4));
    }

    #[test]
    fn exchange_on_small_graphs() {
        assert_valid(solve_with("exchange", &complete_graph(6), 4, 4));
        assert_valid(solve_with("exchange", &petersen(), 3, 2));
    }

    #[test]
    fn exhaustive_proves_infeasibility() {
        // C5 has no split into two independent sets
        assert!(matches!(
            solve_with("exhaustive", &cycle_graph(5), 2, 2),
            StrategyOutcome::Infeasible(_)
        ));
        assert_valid(solve_with("exhaustive", &cycle_graph(5), 3, 2));
    }

    #[test]
    fn augmentation_keeps_max_degree() {
        let g = cycle_graph(5).extended(1, &[(0, 5), (1, 5), (2, 5)]).unwrap();
        let h = ExchangeStrategy::augment(&g).unwrap();
        assert_eq!(h.max_degree(), g.max_degree());
        assert_eq!(h.n(), g.n() + g.max_degree() - 1);
    }
}
