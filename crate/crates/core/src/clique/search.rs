//! Bitset branch-and-bound over candidate sets, with greedy coloring as the
//! upper bound.

use crate::graph::{Graph, VertexSet};

/// Greedy sequential coloring of `cand`. Returns vertices in nondecreasing
/// color order alongside their colors (1-based). The color of the last
/// vertex bounds the clique number of `cand`.
pub(crate) fn color_sort(g: &Graph, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut colors = Vec::with_capacity(cand.len());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(g.neighbor_set(v));
            uncolored.remove(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

/// Upper bound on ω within `cand`.
pub(crate) fn color_bound(g: &Graph, cand: &VertexSet) -> usize {
    color_sort(g, cand).1.last().copied().unwrap_or(0)
}

/// Size of a maximum clique inside `within`.
pub(crate) fn max_clique_size(g: &Graph, within: &VertexSet) -> usize {
    let mut best = 0;
    let mut cur = 0;
    expand_max(g, &mut cur, within.clone(), &mut best);
    best
}

fn expand_max(g: &Graph, depth: &mut usize, mut cand: VertexSet, best: &mut usize) {
    let (order, colors) = color_sort(g, &cand);
    for i in (0..order.len()).rev() {
        if *depth + colors[i] <= *best {
            return;
        }
        let v = order[i];
        let next = cand.intersection(g.neighbor_set(v));
        *depth += 1;
        if next.is_empty() {
            if *depth > *best {
                *best = *depth;
            }
        } else {
            expand_max(g, depth, next, best);
        }
        *depth -= 1;
        cand.remove(v);
    }
}

/// Lexicographically first clique (as an ascending vertex list) of exactly
/// `target` vertices inside `within`, if one exists.
pub(crate) fn lex_first_clique(g: &Graph, within: &VertexSet, target: usize) -> Option<Vec<usize>> {
    let mut cur = Vec::with_capacity(target);
    if lex_dfs(g, within, target, &mut cur) {
        Some(cur)
    } else {
        None
    }
}

fn lex_dfs(g: &Graph, cand: &VertexSet, target: usize, cur: &mut Vec<usize>) -> bool {
    if cur.len() == target {
        return true;
    }
    let need = target - cur.len();
    if cand.len() < need || color_bound(g, cand) < need {
        return false;
    }
    let mut rest = cand.clone();
    for v in cand.iter() {
        rest.remove(v);
        if rest.len() + 1 < need {
            return false;
        }
        let next = rest.intersection(g.neighbor_set(v));
        cur.push(v);
        if lex_dfs(g, &next, target, cur) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Collects every clique of maximum size inside `within`. Stops with `None`
/// once more than `cap` maximum cliques have been seen.
pub(crate) fn all_max_cliques(g: &Graph, within: &VertexSet, cap: usize) -> Option<(usize, Vec<Vec<usize>>)> {
    let mut st = AllMax {
        best: 0,
        found: Vec::new(),
        cur: Vec::new(),
        cap,
        overflow: false,
    };
    st.expand(g, within.clone());
    if st.overflow {
        return None;
    }
    let mut cliques: Vec<Vec<usize>> = st
        .found
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    cliques.sort();
    cliques.dedup();
    if st.best == 0 {
        cliques.clear();
    }
    Some((st.best, cliques))
}

struct AllMax {
    best: usize,
    found: Vec<Vec<usize>>,
    cur: Vec<usize>,
    cap: usize,
    overflow: bool,
}

impl AllMax {
    fn expand(&mut self, g: &Graph, mut cand: VertexSet) {
        let (order, colors) = color_sort(g, &cand);
        for i in (0..order.len()).rev() {
            if self.overflow || self.cur.len() + colors[i] < self.best {
                return;
            }
            let v = order[i];
            let next = cand.intersection(g.neighbor_set(v));
            self.cur.push(v);
            if next.is_empty() {
                let size = self.cur.len();
                if size > self.best {
                    self.best = size;
                    self.found.clear();
                }
                if size == self.best {
                    self.found.push(self.cur.clone());
                    if self.found.len() > self.cap {
                        self.overflow = true;
                    }
                }
            } else {
                self.expand(g, next);
            }
            self.cur.pop();
            cand.remove(v);
        }
    }
}

/// Enumerates all cliques of exactly `t` vertices inside `within` in
/// lexicographic order. Returns `Err(count)` once `cap` is exceeded.
pub(crate) fn cliques_of_size_within(
    g: &Graph,
    within: &VertexSet,
    t: usize,
    cap: usize,
) -> Result<Vec<Vec<usize>>, usize> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    fn rec(
        g: &Graph,
        cand: &VertexSet,
        t: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if cur.len() == t {
            out.push(cur.clone());
            return out.len() <= cap;
        }
        let need = t - cur.len();
        if cand.len() < need {
            return true;
        }
        let mut rest = cand.clone();
        for v in cand.iter() {
            rest.remove(v);
            if rest.len() + 1 < need {
                break;
            }
            let next = rest.intersection(g.neighbor_set(v));
            cur.push(v);
            let ok = rec(g, &next, t, cap, cur, out);
            cur.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if t == 0 {
        return Ok(vec![Vec::new()]);
    }
    if rec(g, within, t, cap, &mut cur, &mut out) {
        Ok(out)
    } else {
        Err(out.len())
    }
}
