//! Deterministic generators for the graph families used in tests, probes and
//! the CLI.
//!
//! Recipes have a compact text form used on the command line:
//!
//! | kind                         | text                 |
//! |------------------------------|----------------------|
//! | complete                     | `complete:5`         |
//! | cycle / path                 | `cycle:7`, `path:4`  |
//! | G(n, p)                      | `gnp:20,0.3`         |
//! | random d-regular             | `regular:28,13`      |
//! | C_len ⊠ K_m                  | `strong:5x2`         |
//! | disjoint union               | `union:A+B`          |
//! | base + pendant K_c at vertex | `pendant:13@0/BASE`  |

use super::{strong_product, Graph, GraphError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorKind {
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Gnp { n: usize, p: f64 },
    RandomRegular { n: usize, d: usize },
    StrongProductCycleClique { cycle_len: usize, m: usize },
    DisjointUnion(Box<GeneratorKind>, Box<GeneratorKind>),
    /// `base` plus a disjoint `K_clique`, joined by one edge from `attach`
    /// to the first clique vertex.
    JoinPendantClique {
        base: Box<GeneratorKind>,
        clique: usize,
        attach: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorRecipe {
    pub kind: GeneratorKind,
    pub seed: u64,
}

impl GeneratorRecipe {
    pub fn new(kind: GeneratorKind, seed: u64) -> Self {
        GeneratorRecipe { kind, seed }
    }

    pub fn complete(n: usize) -> Self {
        Self::new(GeneratorKind::Complete { n }, 0)
    }

    pub fn parse(text: &str, seed: u64) -> Result<Self, GraphError> {
        Ok(Self::new(text.parse()?, seed))
    }
}

pub fn generate(recipe: &GeneratorRecipe) -> Result<Graph, GraphError> {
    build(&recipe.kind, recipe.seed)
}

fn recipe_err(msg: impl Into<String>) -> GraphError {
    GraphError::Recipe(msg.into())
}

fn build(kind: &GeneratorKind, seed: u64) -> Result<Graph, GraphError> {
    use GeneratorKind::*;
    match kind {
        Complete { n } => Ok(complete_graph(*n)),
        Cycle { n } => {
            if *n < 3 {
                return Err(recipe_err(format!("cycle needs at least 3 vertices, got {n}")));
            }
            Ok(cycle_graph(*n))
        }
        Path { n } => Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i))),
        Gnp { n, p } => {
            if !(0.0..=1.0).contains(p) {
                return Err(recipe_err(format!("edge probability {p} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if rng.gen_bool(*p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(*n, edges)
        }
        RandomRegular { n, d } => random_regular(*n, *d, seed),
        StrongProductCycleClique { cycle_len, m } => {
            if *cycle_len < 5 || cycle_len % 2 == 0 {
                return Err(recipe_err(format!(
                    "cycle length must be odd and at least 5, got {cycle_len}"
                )));
            }
            if *m == 0 {
                return Err(recipe_err("clique size must be at least 1"));
            }
            strong_product(&cycle_graph(*cycle_len), &complete_graph(*m))
        }
        DisjointUnion(a, b) => {
            let ga = build(a, seed)?;
            let gb = build(b, seed.wrapping_add(0x9e37_79b9_7f4a_7c15))?;
            Ok(ga.disjoint_union(&gb))
        }
        JoinPendantClique {
            base,
            clique,
            attach,
        } => {
            let g = build(base, seed)?;
            if *attach >= g.n() {
                return Err(recipe_err(format!(
                    "attach vertex {attach} not in base graph on {} vertices",
                    g.n()
                )));
            }
            if *clique == 0 {
                return Err(recipe_err("pendant clique must be nonempty"));
            }
            let off = g.n();
            let joined = g.disjoint_union(&complete_graph(*clique));
            joined.extended(0, &[(*attach, off)])
        }
    }
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete graph is simple")
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`,
/// spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("petersen is simple")
}

const MAX_REGULAR_RESTARTS: u64 = 1000;

/// Random d-regular graph by stub pairing. Pairs that would form a loop or a
/// repeated edge are rejected individually; a dead end restarts the pairing
/// with the next sub-seed.
fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    if (n * d) % 2 == 1 {
        return Err(recipe_err(format!("n*d must be even (n={n}, d={d})")));
    }
    if d >= n && !(n == 0 && d == 0) {
        return Err(recipe_err(format!("degree {d} impossible on {n} vertices")));
    }
    for sub in 0..MAX_REGULAR_RESTARTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(sub);
        if let Some(edges) = try_pairing(n, d, &mut rng) {
            return Graph::from_edges(n, edges);
        }
    }
    Err(recipe_err(format!(
        "no simple {d}-regular pairing on {n} vertices after {MAX_REGULAR_RESTARTS} restarts"
    )))
}

fn try_pairing(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::with_capacity(n * d / 2);
    let ok = |adj: &Vec<Vec<bool>>, u: usize, v: usize| u != v && !adj[u][v];
    while !stubs.is_empty() {
        let mut placed = false;
        for _ in 0..64 {
            let i = rng.gen_range(0..stubs.len());
            let j = rng.gen_range(0..stubs.len());
            if ok(&adj, stubs[i], stubs[j]) {
                let (u, v) = (stubs[i], stubs[j]);
                let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                stubs.swap_remove(hi);
                stubs.swap_remove(lo);
                adj[u][v] = true;
                adj[v][u] = true;
                edges.push((u, v));
                placed = true;
                break;
            }
        }
        if !placed {
            // check whether any legal pair remains before giving up
            let legal: Vec<(usize, usize)> = (0..stubs.len())
                .flat_map(|i| (i + 1..stubs.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| ok(&adj, stubs[i], stubs[j]))
                .collect();
            if legal.is_empty() {
                return None;
            }
            let (i, j) = legal[rng.gen_range(0..legal.len())];
            let (u, v) = (stubs[i], stubs[j]);
            stubs.swap_remove(j);
            stubs.swap_remove(i);
            adj[u][v] = true;
            adj[v][u] = true;
            edges.push((u, v));
        }
    }
    Some(edges)
}

fn parse_usize(s: &str) -> Result<usize, GraphError> {
    s.trim()
        .parse()
        .map_err(|_| recipe_err(format!("expected an integer, got `{s}`")))
}

fn two_ints(s: &str, sep: char) -> Result<(usize, usize), GraphError> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| recipe_err(format!("expected `a{sep}b`, got `{s}`")))?;
    Ok((parse_usize(a)?, parse_usize(b)?))
}

impl FromStr for GeneratorKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        use GeneratorKind::*;
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| recipe_err(format!("expected `kind:params`, got `{s}`")))?;
        match kind {
            "complete" => Ok(Complete { n: parse_usize(rest)? }),
            "cycle" => Ok(Cycle { n: parse_usize(rest)? }),
            "path" => Ok(Path { n: parse_usize(rest)? }),
            "gnp" => {
                let (n, p) = rest
                    .split_once(',')
                    .ok_or_else(|| recipe_err("gnp expects `n,p`"))?;
                let p: f64 = p
                    .trim()
                    .parse()
                    .map_err(|_| recipe_err(format!("bad probability `{p}`")))?;
                Ok(Gnp { n: parse_usize(n)?, p })
            }
            "regular" => {
                let (n, d) = two_ints(rest, ',')?;
                Ok(RandomRegular { n, d })
            }
            "strong" => {
                let (cycle_len, m) = two_ints(rest, 'x')?;
                Ok(StrongProductCycleClique { cycle_len, m })
            }
            "union" => {
                let (a, b) = rest
                    .rsplit_once('+')
                    .ok_or_else(|| recipe_err("union expects `A+B`"))?;
                Ok(DisjointUnion(Box::new(a.parse()?), Box::new(b.parse()?)))
            }
            "pendant" => {
                let (head, base) = rest
                    .split_once('/')
                    .ok_or_else(|| recipe_err("pendant expects `c@v/BASE`"))?;
                let (clique, attach) = two_ints(head, '@')?;
                Ok(JoinPendantClique {
                    base: Box::new(base.parse()?),
                    clique,
                    attach,
                })
            }
            other => Err(recipe_err(format!("unknown generator kind `{other}`"))),
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorKind::*;
        match self {
            Complete { n } => write!(f, "complete:{n}"),
            Cycle { n } => write!(f, "cycle:{n}"),
            Path { n } => write!(f, "path:{n}"),
            Gnp { n, p } => write!(f, "gnp:{n},{p}"),
            RandomRegular { n, d } => write!(f, "regular:{n},{d}"),
            StrongProductCycleClique { cycle_len, m } => write!(f, "strong:{cycle_len}x{m}"),
            DisjointUnion(a, b) => write!(f, "union:{a}+{b}"),
            JoinPendantClique {
                base,
                clique,
                attach,
            } => write!(f, "pendant:{clique}@{attach}/{base}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::dimacs::write_dimacs;

    fn gen(text: &str, seed: u64) -> Graph {
        generate(&GeneratorRecipe::parse(text, seed).unwrap()).unwrap()
    }

    #[test]
    fn complete_five() {
        let g = gen("complete:5", 0);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.max_degree(), 4);
    }

    #[test]
    fn strong_product_family_is_regular() {
        let g = gen("strong:5x2", 0);
        assert_eq!(g.n(), 10);
        assert!(g.is_regular());
        assert_eq!(g.max_degree(), 5);
    }

    #[test]
    fn pendant_clique_on_c4() {
        let g = gen("pendant:13@0/cycle:4", 0);
        assert_eq!(g.n(), 17);
        assert_eq!(g.max_degree(), 13);
        assert!(g.has_edge(0, 4));
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.edge_count(), 4 + 78 + 1);
    }

    #[test]
    fn random_regular_is_regular_and_reproducible() {
        let a = gen("regular:28,13", 3);
        assert_eq!(a.n(), 28);
        assert!(a.is_regular());
        assert_eq!(a.max_degree(), 13);
        let b = gen("regular:28,13", 3);
        assert_eq!(write_dimacs(&a), write_dimacs(&b));
        assert_ne!(a, gen("regular:28,13", 4));
    }

    #[test]
    fn infeasible_params_rejected() {
        assert!(generate(&GeneratorRecipe::parse("regular:5,3", 0).unwrap()).is_err());
        assert!(generate(&GeneratorRecipe::parse("strong:4x2", 0).unwrap()).is_err());
        assert!(generate(&GeneratorRecipe::parse("strong:3x2", 0).unwrap()).is_err());
        assert!(generate(&GeneratorRecipe::parse("gnp:5,1.5", 0).unwrap()).is_err());
        assert!(generate(&GeneratorRecipe::parse("pendant:3@9/cycle:4", 0).unwrap()).is_err());
        assert!(GeneratorRecipe::parse("blob:3", 0).is_err());
        assert!(GeneratorRecipe::parse("complete", 0).is_err());
    }

    #[test]
    fn union_and_display_round_trip() {
        let kind: GeneratorKind = "union:complete:4+complete:4".parse().unwrap();
        assert_eq!(kind.to_string(), "union:complete:4+complete:4");
        let g = generate(&GeneratorRecipe::new(kind, 1)).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 12);
        for text in ["gnp:12,0.3", "pendant:5@1/path:3", "strong:7x3", "regular:10,3"] {
            let k: GeneratorKind = text.parse().unwrap();
            assert_eq!(k.to_string(), text);
        }
    }

    #[test]
    fn gnp_deterministic() {
        assert_eq!(gen("gnp:30,0.4", 11), gen("gnp:30,0.4", 11));
    }
}
