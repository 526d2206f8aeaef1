//! Independent sets, computed as cliques of the complement.

use super::search;
use crate::graph::{Graph, VertexSet};

/// Largest vertex count for which [`maximum_independent_set`] is exact.
pub const EXACT_MIS_LIMIT: usize = 40;

/// A maximum independent set of `g[within]` (lexicographically smallest)
/// when `|within| <= EXACT_MIS_LIMIT`, otherwise a greedy set improved by
/// 1-for-2 swaps.
pub fn maximum_independent_set(g: &Graph, within: &VertexSet) -> Vec<usize> {
    if within.len() <= EXACT_MIS_LIMIT {
        exact_mis(g, within)
    } else {
        local_search_mis(g, within)
    }
}

pub fn exact_mis(g: &Graph, within: &VertexSet) -> Vec<usize> {
    let (sub, back) = g.induced_by_set(within);
    let comp = sub.complement();
    let all = comp.all_vertices();
    let size = search::max_clique_size(&comp, &all);
    let clique = search::lex_first_clique(&comp, &all, size).expect("clique of max size exists");
    clique.into_iter().map(|v| back[v]).collect()
}

/// Min-degree greedy followed by (1-out, 2-in) improvement swaps.
pub fn local_search_mis(g: &Graph, within: &VertexSet) -> Vec<usize> {
    let mut set = greedy_mis(g, within);
    loop {
        let mut improved = false;
        // free vertices: in `within`, outside the set, with exactly one
        // neighbor in the set
        let members = VertexSet::from_iter(g.n(), set.iter().copied());
        'outer: for &x in &set {
            let cands: Vec<usize> = within
                .iter()
                .filter(|&u| !members.contains(u) && g.has_edge(u, x) && g.degree_into(u, &members) == 1)
                .collect();
            for (i, &a) in cands.iter().enumerate() {
                for &b in &cands[i + 1..] {
                    if !g.has_edge(a, b) {
                        set.retain(|&y| y != x);
                        set.push(a);
                        set.push(b);
                        improved = true;
                        break 'outer;
                    }
                }
            }
        }
        if !improved {
            break;
        }
        // make maximal again
        let mut members = VertexSet::from_iter(g.n(), set.iter().copied());
        for u in within.iter() {
            if !members.contains(u) && g.degree_into(u, &members) == 0 {
                members.insert(u);
                set.push(u);
            }
        }
    }
    set.sort_unstable();
    set
}

pub fn greedy_mis(g: &Graph, within: &VertexSet) -> Vec<usize> {
    let mut rest = within.clone();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let v = rest
            .iter()
            .min_by_key(|&v| (g.degree_into(v, &rest), v))
            .unwrap();
        out.push(v);
        rest.remove(v);
        rest.difference_with(g.neighbor_set(v));
    }
    out.sort_unstable();
    out
}

/// Greedily extends the independent set `base` to a maximal one inside
/// `within`, preferring low-degree vertices.
pub fn extend_to_maximal(g: &Graph, within: &VertexSet, base: &[usize]) -> Vec<usize> {
    let mut rest = within.clone();
    let mut out = base.to_vec();
    for &v in base {
        rest.remove(v);
        rest.difference_with(g.neighbor_set(v));
    }
    out.extend(greedy_mis(g, &rest));
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{cycle_graph, petersen};
    use crate::graph::{generate, GeneratorRecipe};

    #[test]
    fn exact_sizes() {
        let p = petersen();
        let s = maximum_independent_set(&p, &p.all_vertices());
        assert_eq!(s.len(), 4);
        assert!(p.is_independent(&s));
        let c = cycle_graph(7);
        assert_eq!(maximum_independent_set(&c, &c.all_vertices()).len(), 3);
    }

    #[test]
    fn heuristic_is_independent_and_maximal() {
        let g = generate(&GeneratorRecipe::parse("gnp:60,0.2", 5).unwrap()).unwrap();
        let all = g.all_vertices();
        let s = local_search_mis(&g, &all);
        assert!(g.is_independent(&s));
        let members = VertexSet::from_iter(60, s.iter().copied());
        assert!(all.iter().all(|v| members.contains(v) || g.degree_into(v, &members) > 0));
        assert!(s.len() <= exact_mis(&g, &all).len());
    }
}
