use super::strategy::Engine;
use super::{Partition, PartitionError};
use crate::clique::clique_number;
use crate::graph::Graph;

/// Checks `p, q >= 2`, `p + q = Δ + 1` and `ω <= Δ - 1`; a violated clique
/// bound comes back with a maximum clique as witness.
pub fn check_bipartition_preconditions(g: &Graph, p: usize, q: usize) -> Result<(), PartitionError> {
    let delta = g.max_degree();
    if p < 2 || q < 2 {
        return Err(PartitionError::precondition(format!("quotas must be at least 2, got ({p}, {q})")));
    }
    if p + q != delta + 1 {
        return Err(PartitionError::precondition(format!(
            "p + q = {} but Δ + 1 = {}",
            p + q,
            delta + 1
        )));
    }
    let cert = clique_number(g);
    if cert.omega + 1 > delta {
        return Err(PartitionError::Precondition {
            reason: format!("clique number {} is not below Δ = {delta}", cert.omega),
            witness: Some(cert.witness),
        });
    }
    Ok(())
}

/// Splits `g` into a `K_p`-free part and a `K_q`-free part, where
/// `p + q = Δ + 1` and `ω <= Δ - 1`, by running the engine's cascade.
///
/// Either order of `p` and `q` is accepted; part 0 always carries `p`.
pub fn clique_bipartition(g: &Graph, p: usize, q: usize, engine: &Engine) -> Result<Partition, PartitionError> {
    check_bipartition_preconditions(g, p, q)?;
    engine.solve(g, p, q, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete_graph, cycle_graph, petersen};
    use crate::graph::{generate, GeneratorRecipe};
    use crate::partition::EngineConfig;

    fn engine() -> Engine {
        Engine::new(EngineConfig::default()).unwrap()
    }

    #[test]
    fn regular_degree_13() {
        let mut seed = 3;
        let g = loop {
            let g = generate(&GeneratorRecipe::parse("regular:28,13", seed).unwrap()).unwrap();
            if clique_number(&g).omega <= 12 {
                break g;
            }
            seed += 1;
        };
        let part = clique_bipartition(&g, 7, 7, &engine()).unwrap();
        assert!(part.is_valid());
        assert!(part.part_omegas().iter().all(|&w| w <= 6));
    }

    #[test]
    fn arithmetic_guard() {
        assert!(matches!(
            clique_bipartition(&cycle_graph(5), 2, 2, &engine()),
            Err(PartitionError::Precondition { witness: None, .. })
        ));
    }

    #[test]
    fn clique_bound_guard_returns_witness() {
        let g = generate(&GeneratorRecipe::parse("pendant:13@0/cycle:4", 0).unwrap()).unwrap();
        assert_eq!(g.max_degree(), 13);
        match clique_bipartition(&g, 7, 7, &engine()) {
            Err(PartitionError::Precondition { witness: Some(w), .. }) => {
                assert_eq!(w.len(), 13);
                assert!(g.is_clique(&w));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_cases_in_both_orders() {
        // C9 with distance-2 chords: Δ = 4, ω = 3
        let g = Graph::from_edges(9, (0..9).flat_map(|i| [(i, (i + 1) % 9), (i, (i + 2) % 9)])).unwrap();
        assert_eq!(g.max_degree(), 4);
        for (p, q) in [(3, 2), (2, 3)] {
            let part = clique_bipartition(&g, p, q, &engine()).unwrap();
            assert!(part.is_valid());
            assert_eq!(part.quotas, vec![p, q]);
        }
        // Petersen with (2, 2) asks for a 2-coloring of a non-bipartite graph
        assert!(matches!(
            clique_bipartition(&petersen(), 2, 2, &engine()),
            Err(PartitionError::Exhausted { proven_infeasible: true, .. })
        ));
        // K4: ω = Δ + 1
        assert!(clique_bipartition(&complete_graph(4), 2, 2, &engine()).is_err());
    }
}
