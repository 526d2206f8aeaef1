//! DSatur greedy coloring and an exact DSatur branch-and-bound decision
//! procedure.

use crate::graph::Graph;

/// Greedy DSatur coloring; colors are `0..`.
pub fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by(|&a, &b| {
                sat[a]
                    .cmp(&sat[b])
                    .then(g.degree(a).cmp(&g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains");
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        color[v] = c;
        for &u in g.neighbors(v) {
            let s = &mut seen[u];
            if s.len() <= c {
                s.resize(c + 1, false);
            }
            if !s[c] {
                s[c] = true;
                sat[u] += 1;
            }
        }
    }
    color
}

pub fn num_colors(coloring: &[usize]) -> usize {
    coloring.iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// Color classes, indexed by color.
pub fn color_classes(coloring: &[usize]) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); num_colors(coloring)];
    for (v, &c) in coloring.iter().enumerate() {
        classes[c].push(v);
    }
    classes
}

pub fn is_proper(g: &Graph, coloring: &[usize]) -> bool {
    coloring.len() == g.n() && g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
}

/// Search-state budget exhausted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatesExceeded(pub u64);

/// Decides whether `g` has a proper coloring with at most `k` colors,
/// exploring at most `max_states` search nodes.
pub fn exact_coloring(g: &Graph, k: usize, max_states: u64) -> Result<Option<Vec<usize>>, StatesExceeded> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut st = ExactColoring {
        g,
        k,
        color: vec![usize::MAX; n],
        // nb[v][c]: neighbors of v holding color c
        nb: vec![vec![0u32; k]; n],
        sat: vec![0; n],
        states: 0,
        max_states,
    };
    match st.search(0, 0) {
        Some(true) => Ok(Some(st.color)),
        Some(false) => Ok(None),
        None => Err(StatesExceeded(st.states)),
    }
}

struct ExactColoring<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    nb: Vec<Vec<u32>>,
    sat: Vec<usize>,
    states: u64,
    max_states: u64,
}

impl ExactColoring<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &u in self.g.neighbors(v) {
            self.nb[u][c] += 1;
            if self.nb[u][c] == 1 {
                self.sat[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = usize::MAX;
        for &u in self.g.neighbors(v) {
            self.nb[u][c] -= 1;
            if self.nb[u][c] == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    /// `None` on budget exhaustion.
    fn search(&mut self, colored: usize, used: usize) -> Option<bool> {
        if colored == self.g.n() {
            return Some(true);
        }
        self.states += 1;
        if self.states > self.max_states {
            return None;
        }
        let g = self.g;
        let v = (0..g.n())
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by(|&a, &b| {
                self.sat[a]
                    .cmp(&self.sat[b])
                    .then(g.degree(a).cmp(&g.degree(b)))
                    .then(b.cmp(&a))
            })
            .unwrap();
        // new colors are interchangeable: only try the first unused one
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.nb[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            let r = self.search(colored + 1, used.max(c + 1));
            self.unassign(v, c);
            match r {
                Some(true) => {
                    self.color[v] = c;
                    return Some(true);
                }
                Some(false) => {}
                None => return None,
            }
        }
        Some(false)
    }
}
