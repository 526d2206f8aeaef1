use super::{Graph, GraphError};

/// Strong product `g1 ⊠ g2`. Vertex `(a, b)` gets id `a * g2.n() + b`; two
/// distinct pairs are adjacent when every coordinate is equal or adjacent.
pub fn strong_product(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let (n1, n2) = (g1.n(), g2.n());
    let n = n1
        .checked_mul(n2)
        .ok_or_else(|| GraphError::TooLarge(format!("{n1} x {n2} vertices")))?;
    let id = |a: usize, b: usize| a * n2 + b;
    let mut edges = Vec::new();
    for a in 0..n1 {
        // same first coordinate, adjacent second
        for (b, c) in g2.edges() {
            edges.push((id(a, b), id(a, c)));
        }
    }
    for (a, a2) in g1.edges() {
        for b in 0..n2 {
            edges.push((id(a, b), id(a2, b)));
            for &c in g2.neighbors(b) {
                edges.push((id(a, b), id(a2, c)));
            }
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete_graph, cycle_graph, petersen};

    #[test]
    fn identity_and_cliques() {
        let k1 = complete_graph(1);
        let p = petersen();
        assert_eq!(strong_product(&k1, &p).unwrap(), p);
        let k4 = strong_product(&complete_graph(2), &complete_graph(2)).unwrap();
        assert_eq!(k4, complete_graph(4));
    }

    /// Edge count of a strong product by testing every vertex pair against
    /// the coordinate rule directly.
    fn brute_force_edges(g1: &Graph, g2: &Graph) -> usize {
        let pairs: Vec<(usize, usize)> = (0..g1.n())
            .flat_map(|a| (0..g2.n()).map(move |b| (a, b)))
            .collect();
        let close = |g: &Graph, x: usize, y: usize| x == y || g.has_edge(x, y);
        let mut count = 0;
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                if close(g1, a, c) && close(g2, b, d) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn c5_times_k2_edge_count() {
        let (c5, k2) = (cycle_graph(5), complete_graph(2));
        let g = strong_product(&c5, &k2).unwrap();
        assert_eq!(brute_force_edges(&c5, &k2), 25);
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 25);
    }

    #[test]
    fn degree_law() {
        let (a, b) = (petersen(), cycle_graph(4));
        let g = strong_product(&a, &b).unwrap();
        assert_eq!(g.edge_count(), brute_force_edges(&a, &b));
        for x in 0..a.n() {
            for y in 0..b.n() {
                let expect = (a.degree(x) + 1) * (b.degree(y) + 1) - 1;
                assert_eq!(g.degree(x * b.n() + y), expect);
            }
        }
    }
}
