//! Exchange search over the splits of a distinguished clique `K`.
//!
//! The vertices outside `K` are already split into `W1` (`K_p`-free) and
//! `W2` (`K_q`-free). A split `(V', V'')` of `K` is scored by the cross
//! edges `e = |E[W1, V']| + |E[W2, V'']|`; the search lowers `e` with single
//! moves and pair swaps inside `K` and, once at a local minimum, applies
//! targeted repairs that break an offending clique.

use super::{Partition, PartitionError};
use crate::clique::find_clique;
use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use std::collections::HashSet;
use std::ops::RangeInclusive;

/// A clique `K`, a fixed split `(W1, W2)` of the other vertices, and the
/// current split `(V', V'')` of `K` with its maintained cross-edge score.
#[derive(Debug, Clone)]
pub struct CliqueSplitFamily {
    clique: Vec<usize>,
    w1: VertexSet,
    w2: VertexSet,
    window: RangeInclusive<usize>,
    v1: VertexSet,
    /// `|N(x) ∩ W1|` and `|N(x) ∩ W2|` per clique vertex, indexed like `clique`
    to_w1: Vec<usize>,
    to_w2: Vec<usize>,
    score: usize,
}

impl CliqueSplitFamily {
    /// `initial` is `V'`; it must be a subset of `clique` whose size lies in
    /// `window`.
    pub fn new(
        g: &Graph,
        clique: Vec<usize>,
        w1: VertexSet,
        w2: VertexSet,
        window: RangeInclusive<usize>,
        initial: &[usize],
    ) -> Result<Self, PartitionError> {
        let n = g.n();
        if !g.is_clique(&clique) {
            return Err(PartitionError::precondition("distinguished set is not a clique"));
        }
        let k = VertexSet::from_iter(n, clique.iter().copied());
        if k.len() != clique.len() {
            return Err(PartitionError::precondition("clique has repeated vertices"));
        }
        if w1.intersection_len(&w2) != 0 || w1.intersection_len(&k) != 0 || w2.intersection_len(&k) != 0 {
            return Err(PartitionError::precondition("K, W1, W2 must be disjoint"));
        }
        if k.len() + w1.len() + w2.len() != n {
            return Err(PartitionError::precondition("K, W1, W2 must cover the graph"));
        }
        let v1 = VertexSet::from_iter(n, initial.iter().copied());
        if !v1.is_subset(&k) || v1.len() != initial.len() {
            return Err(PartitionError::precondition("initial V' must be a subset of K"));
        }
        if !window.contains(&v1.len()) {
            return Err(PartitionError::precondition(format!(
                "|V'| = {} outside window {:?}",
                v1.len(),
                window
            )));
        }
        let mut fam = CliqueSplitFamily {
            clique,
            w1,
            w2,
            window,
            v1,
            to_w1: Vec::new(),
            to_w2: Vec::new(),
            score: 0,
        };
        fam.refresh_counts(g);
        fam.score = fam.recompute_score(g);
        Ok(fam)
    }

    fn refresh_counts(&mut self, g: &Graph) {
        self.to_w1 = self.clique.iter().map(|&x| g.degree_into(x, &self.w1)).collect();
        self.to_w2 = self.clique.iter().map(|&x| g.degree_into(x, &self.w2)).collect();
    }

    pub fn clique(&self) -> &[usize] {
        &self.clique
    }

    pub fn window(&self) -> &RangeInclusive<usize> {
        &self.window
    }

    pub fn score(&self) -> usize {
        self.score
    }

    pub fn v_prime(&self) -> Vec<usize> {
        self.v1.to_vec()
    }

    pub fn v_double_prime(&self) -> Vec<usize> {
        self.clique.iter().copied().filter(|&x| !self.v1.contains(x)).collect()
    }

    pub fn outside(&self) -> (&VertexSet, &VertexSet) {
        (&self.w1, &self.w2)
    }

    /// `|E[W1, V']| + |E[W2, V'']|` from scratch.
    pub fn recompute_score(&self, g: &Graph) -> usize {
        self.clique
            .iter()
            .map(|&x| {
                if self.v1.contains(x) {
                    g.degree_into(x, &self.w1)
                } else {
                    g.degree_into(x, &self.w2)
                }
            })
            .sum()
    }

    /// `(W1 ∪ V', W2 ∪ V'')`.
    pub fn sides(&self) -> (VertexSet, VertexSet) {
        let mut a = self.w1.clone();
        a.union_with(&self.v1);
        let mut b = self.w2.clone();
        for &x in &self.clique {
            if !self.v1.contains(x) {
                b.insert(x);
            }
        }
        (a, b)
    }

    /// Score change if clique vertex `idx` switched sides.
    fn flip_delta(&self, idx: usize) -> i64 {
        let x = self.clique[idx];
        let (a, b) = (self.to_w1[idx] as i64, self.to_w2[idx] as i64);
        if self.v1.contains(x) {
            b - a
        } else {
            a - b
        }
    }

    fn flip(&mut self, idx: usize) {
        let d = self.flip_delta(idx);
        let x = self.clique[idx];
        if self.v1.contains(x) {
            self.v1.remove(x);
        } else {
            self.v1.insert(x);
        }
        self.score = (self.score as i64 + d) as usize;
    }

    fn move_outside(&mut self, g: &Graph, w: usize) {
        if self.w1.contains(w) {
            self.w1.remove(w);
            self.w2.insert(w);
        } else {
            self.w2.remove(w);
            self.w1.insert(w);
        }
        self.refresh_counts(g);
        self.score = self.recompute_score(g);
    }

    fn state_key(&self) -> (VertexSet, VertexSet) {
        (self.v1.clone(), self.w1.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    /// one clique vertex changes sides
    Single,
    /// a clique vertex of `V'` trades places with one of `V''`
    Swap,
    /// targeted repair: swap or move that breaks an offending clique
    Repair,
    /// targeted repair: an outside vertex of an offending clique changes sides
    Relocate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StuckReport {
    /// Part (0 or 1) holding the offending clique.
    pub part: usize,
    pub offending_clique: Vec<usize>,
    pub score: usize,
    pub moves: usize,
}

#[derive(Debug, Clone)]
pub enum ExchangeOutcome {
    Success {
        partition: Partition,
        /// Every accepted move with the score after it.
        trace: Vec<(MoveKind, usize)>,
    },
    Stuck(StuckReport),
}

fn offending(g: &Graph, fam: &CliqueSplitFamily, p: usize, q: usize) -> Option<(usize, Vec<usize>)> {
    let (a, b) = fam.sides();
    if let Some(c) = find_clique(g, &a, p) {
        return Some((0, c));
    }
    find_clique(g, &b, q).map(|c| (1, c))
}

/// Number of sides that still contain a forbidden clique.
fn violation_count(g: &Graph, fam: &CliqueSplitFamily, p: usize, q: usize) -> usize {
    let (a, b) = fam.sides();
    usize::from(find_clique(g, &a, p).is_some()) + usize::from(find_clique(g, &b, q).is_some())
}

/// Searches the splits of `family.clique` for one making
/// `(W1 ∪ V', W2 ∪ V'')` valid for `(p, q)`.
pub fn exchange_refine(g: &Graph, family: CliqueSplitFamily, p: usize, q: usize) -> Result<ExchangeOutcome, PartitionError> {
    let mut fam = family;
    if find_clique(g, &fam.w1, p).is_some() || find_clique(g, &fam.w2, q).is_some() {
        return Err(PartitionError::precondition("outside split (W1, W2) is not valid for (p, q)"));
    }
    let k = fam.clique.len();
    let move_budget = 50 * k * k;
    let repair_budget = 50 * k * k;
    let mut trace: Vec<(MoveKind, usize)> = Vec::new();
    let mut repairs = 0;
    let mut visited: HashSet<(VertexSet, VertexSet)> = HashSet::new();
    visited.insert(fam.state_key());

    loop {
        let Some((part, clique)) = offending(g, &fam, p, q) else {
            let (a, _) = fam.sides();
            let partition = Partition::from_sides(g, &a, &[p, q], "exchange");
            return Ok(ExchangeOutcome::Success { partition, trace });
        };
        let swaps = trace.iter().filter(|(m, _)| matches!(m, MoveKind::Single | MoveKind::Swap)).count();
        if swaps < move_budget {
            if let Some((kind, moves)) = best_descent(&fam) {
                for idx in moves {
                    fam.flip(idx);
                }
                check_integrity(g, &fam)?;
                visited.insert(fam.state_key());
                trace.push((kind, fam.score));
                continue;
            }
        }
        if repairs < repair_budget {
            if let Some(kind) = repair(g, &mut fam, p, q, part, &clique, &visited) {
                check_integrity(g, &fam)?;
                visited.insert(fam.state_key());
                trace.push((kind, fam.score));
                repairs += 1;
                continue;
            }
        }
        return Ok(ExchangeOutcome::Stuck(StuckReport {
            part,
            offending_clique: clique,
            score: fam.score,
            moves: trace.len(),
        }));
    }
}

fn check_integrity(g: &Graph, fam: &CliqueSplitFamily) -> Result<(), PartitionError> {
    let fresh = fam.recompute_score(g);
    if fresh != fam.score {
        return Err(PartitionError::Internal(format!(
            "maintained score {} differs from recomputed {fresh}",
            fam.score
        )));
    }
    Ok(())
}

/// Most improving single move or pair swap that keeps `|V'|` in the window.
fn best_descent(fam: &CliqueSplitFamily) -> Option<(MoveKind, Vec<usize>)> {
    let size = fam.v1.len();
    let k = fam.clique.len();
    let mut best: Option<(i64, MoveKind, Vec<usize>)> = None;
    let mut consider = |d: i64, kind: MoveKind, moves: Vec<usize>| {
        if d < 0 && best.as_ref().is_none_or(|(bd, _, _)| d < *bd) {
            best = Some((d, kind, moves));
        }
    };
    for i in 0..k {
        let in_v1 = fam.v1.contains(fam.clique[i]);
        let new_size = if in_v1 { size.wrapping_sub(1) } else { size + 1 };
        if fam.window.contains(&new_size) {
            consider(fam.flip_delta(i), MoveKind::Single, vec![i]);
        }
    }
    for i in 0..k {
        if !fam.v1.contains(fam.clique[i]) {
            continue;
        }
        for j in 0..k {
            if fam.v1.contains(fam.clique[j]) {
                continue;
            }
            consider(fam.flip_delta(i) + fam.flip_delta(j), MoveKind::Swap, vec![i, j]);
        }
    }
    best.map(|(_, kind, moves)| (kind, moves))
}

/// Tries the targeted repairs for `clique` (a forbidden clique in side
/// `part`) and applies the best one that reaches an unvisited state, ranked
/// by (remaining violations, score).
fn repair(
    g: &Graph,
    fam: &mut CliqueSplitFamily,
    p: usize,
    q: usize,
    part: usize,
    clique: &[usize],
    visited: &HashSet<(VertexSet, VertexSet)>,
) -> Option<MoveKind> {
    let idx_of = |x: usize| fam.clique.iter().position(|&y| y == x);
    let in_k: Vec<usize> = clique.iter().filter_map(|&x| idx_of(x)).collect();
    let outside: Vec<usize> = clique.iter().copied().filter(|&x| idx_of(x).is_none()).collect();
    let other_side: Vec<usize> = (0..fam.clique.len())
        .filter(|&j| fam.v1.contains(fam.clique[j]) == (part == 1))
        .collect();

    enum Candidate {
        Flips(Vec<usize>),
        Relocate(usize),
    }
    let mut candidates = Vec::new();
    for &i in &in_k {
        for &j in &other_side {
            // prefer partners missing an outside member of the clique
            let y = fam.clique[j];
            if outside.is_empty() || outside.iter().any(|&w| !g.has_edge(w, y)) {
                candidates.push(Candidate::Flips(vec![i, j]));
            }
        }
        let size = fam.v1.len();
        let new_size = if part == 0 { size.wrapping_sub(1) } else { size + 1 };
        if fam.window.contains(&new_size) {
            candidates.push(Candidate::Flips(vec![i]));
        }
    }
    for &w in &outside {
        // moving w must keep the outside split valid
        let (mut to, quota) = if part == 0 { (fam.w2.clone(), q) } else { (fam.w1.clone(), p) };
        to.insert(w);
        if find_clique(g, &to, quota).is_none() {
            candidates.push(Candidate::Relocate(w));
        }
    }

    let mut best: Option<((usize, usize, usize), usize)> = None;
    for (ci, cand) in candidates.iter().enumerate() {
        let mut trial = fam.clone();
        match cand {
            Candidate::Flips(ix) => ix.iter().for_each(|&i| trial.flip(i)),
            Candidate::Relocate(w) => trial.move_outside(g, *w),
        }
        if visited.contains(&trial.state_key()) {
            continue;
        }
        let rank = (violation_count(g, &trial, p, q), trial.score, ci);
        if best.as_ref().is_none_or(|(r, _)| rank < *r) {
            best = Some((rank, ci));
        }
    }
    let (_, ci) = best?;
    match &candidates[ci] {
        Candidate::Flips(ix) => {
            ix.iter().for_each(|&i| fam.flip(i));
            Some(MoveKind::Repair)
        }
        Candidate::Relocate(w) => {
            fam.move_outside(g, *w);
            Some(MoveKind::Relocate)
        }
    }
}
