//! k-way partition by repeated bipartition.
//!
//! With quotas `p_1 >= ... >= p_k`, the graph is first split for
//! `(p_1 + ... + p_{k-1} - (k - 2), p_k)`. The second side is then made
//! maximal, which caps the maximum degree of the first side at that first
//! quota; padding with pendant dummy vertices lifts it to exactly that value
//! so the same arithmetic holds for the remaining `k - 1` quotas.

use super::bipartition::check_bipartition_preconditions;
use super::strategy::Engine;
use super::{Partition, PartitionError, PartitionSpec};
use crate::clique::{clique_number, find_clique};
use crate::graph::Graph;

/// Splits `g` into `spec.k()` parts with `ω(g[V_i]) <= p_i - 1`.
///
/// Requires `Σ p_i = Δ - 1 + k` and `ω <= Δ - 1`. Errors from deeper levels
/// carry that level in their `depth` field.
pub fn kway_clique_partition(g: &Graph, spec: &PartitionSpec, engine: &Engine) -> Result<Partition, PartitionError> {
    if !spec.matches_degree(g) {
        return Err(PartitionError::precondition(format!(
            "quota sum {} differs from Δ - 1 + k = {}",
            spec.sum(),
            (g.max_degree() + spec.k()) as i64 - 1
        )));
    }
    let cert = clique_number(g);
    if cert.omega + 1 > g.max_degree() {
        return Err(PartitionError::Precondition {
            reason: format!("clique number {} is not below Δ = {}", cert.omega, g.max_degree()),
            witness: Some(cert.witness),
        });
    }
    let mut used = Vec::new();
    let assignment = split(g, spec.quotas(), engine, 0, &mut used)?;
    let label = if used.is_empty() {
        "kway".to_string()
    } else {
        format!("kway[{}]", used.join(","))
    };
    let part = Partition::new(g, assignment, spec.quotas(), label);
    if !part.is_valid() {
        return Err(PartitionError::Internal(format!(
            "k-way assembly produced part clique numbers {:?}",
            part.part_omegas()
        )));
    }
    Ok(part)
}

/// Returns the assignment and appends the strategy that solved each level
/// to `used`.
fn split(
    g: &Graph,
    quotas: &[usize],
    engine: &Engine,
    level: usize,
    used: &mut Vec<String>,
) -> Result<Vec<usize>, PartitionError> {
    let k = quotas.len();
    let n = g.n();
    if k == 1 {
        if find_clique(g, &g.all_vertices(), quotas[0]).is_some() {
            return Err(PartitionError::Internal(format!(
                "level {level}: single remaining part holds a K_{}",
                quotas[0]
            )));
        }
        return Ok(vec![0; n]);
    }
    let p = quotas[..k - 1].iter().sum::<usize>() + 2 - k;
    let q = quotas[k - 1];
    let tag = |e: PartitionError| match e {
        PartitionError::Exhausted {
            diagnostics,
            proven_infeasible,
            ..
        } => PartitionError::Exhausted {
            depth: level,
            diagnostics,
            proven_infeasible,
        },
        other => other,
    };
    check_bipartition_preconditions(g, p, q).map_err(tag)?;
    let two = engine.solve(g, p, q, 0).map_err(tag)?;
    used.push(two.strategy.clone());

    let mut first = two.part_set(0);
    let mut second = two.part_set(1);
    // make the K_q-free side maximal
    for v in first.to_vec() {
        let nb = second.intersection(g.neighbor_set(v));
        if find_clique(g, &nb, q - 1).is_none() {
            first.remove(v);
            second.insert(v);
        }
    }
    let mut assignment = vec![k - 1; n];
    if first.is_empty() {
        return Ok(assignment);
    }
    let (sub, back) = g.induced_by_set(&first);
    // padding only matters for a further bipartition; before the last part
    // its leaf edges would wrongly count against a quota of 2
    let padded = if k > 2 { pad_to_degree(&sub, p) } else { sub };
    let inner = split(&padded, &quotas[..k - 1], engine, level + 1, used)?;
    for (i, &v) in back.iter().enumerate() {
        assignment[v] = inner[i];
    }
    Ok(assignment)
}

/// Adds `target - Δ(g)` new leaves on the lowest vertex of maximum degree;
/// the new vertices come after the original ones.
pub(crate) fn pad_to_degree(g: &Graph, target: usize) -> Graph {
    let delta = g.max_degree();
    if delta >= target || g.n() == 0 {
        return g.clone();
    }
    let hub = (0..g.n()).find(|&v| g.degree(v) == delta).expect("nonempty graph");
    let extra = target - delta;
    let edges: Vec<(usize, usize)> = (0..extra).map(|i| (hub, g.n() + i)).collect();
    g.extended(extra, &edges).expect("pendant edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::cycle_graph;
    use crate::graph::{generate, GeneratorRecipe};
    use crate::partition::{clique_bipartition, EngineConfig};

    fn engine() -> Engine {
        Engine::new(EngineConfig::default()).unwrap()
    }

    fn delta13() -> Graph {
        let mut seed = 3;
        loop {
            let g = generate(&GeneratorRecipe::parse("regular:28,13", seed).unwrap()).unwrap();
            if clique_number(&g).omega <= 12 {
                return g;
            }
            seed += 1;
        }
    }

    #[test]
    fn three_equal_parts() {
        let g = delta13();
        let spec = PartitionSpec::new(vec![5, 5, 5]).unwrap();
        let part = kway_clique_partition(&g, &spec, &engine()).unwrap();
        assert_eq!(part.k(), 3);
        assert!(part.is_valid());
        assert!(part.part_omegas().iter().all(|&w| w <= 4));
    }

    #[test]
    fn single_part() {
        let g = delta13();
        let spec = PartitionSpec::new(vec![13]).unwrap();
        let part = kway_clique_partition(&g, &spec, &engine()).unwrap();
        assert!(part.assignment.iter().all(|&a| a == 0));
        assert!(part.is_valid());
    }

    #[test]
    fn quota_sum_guard() {
        let g = generate(&GeneratorRecipe::parse("regular:20,12", 1).unwrap()).unwrap();
        let spec = PartitionSpec::new(vec![5, 5, 5]).unwrap();
        assert!(matches!(
            kway_clique_partition(&g, &spec, &engine()),
            Err(PartitionError::Precondition { .. })
        ));
    }

    #[test]
    fn two_parts_agree_with_bipartition() {
        let g = delta13();
        let spec = PartitionSpec::new(vec![8, 6]).unwrap();
        let a = kway_clique_partition(&g, &spec, &engine()).is_ok();
        let b = clique_bipartition(&g, 8, 6, &engine()).is_ok();
        assert_eq!(a, b);
    }

    #[test]
    fn all_two_quotas_are_a_coloring() {
        // C9 with distance-2 chords: Δ = 4, ω = 3, χ = 3
        let g = Graph::from_edges(9, (0..9).flat_map(|i| [(i, (i + 1) % 9), (i, (i + 2) % 9)])).unwrap();
        let spec = PartitionSpec::new(vec![2, 2, 2]).unwrap();
        let part = kway_clique_partition(&g, &spec, &engine()).unwrap();
        assert!(part.is_valid());
        for (u, v) in g.edges() {
            assert_ne!(part.assignment[u], part.assignment[v]);
        }
    }

    #[test]
    fn padding() {
        let g = cycle_graph(5);
        let h = pad_to_degree(&g, 4);
        assert_eq!(h.max_degree(), 4);
        assert_eq!(h.n(), 7);
        assert_eq!(h.degree(0), 4);
        assert_eq!(pad_to_degree(&g, 2), g);
    }
}
