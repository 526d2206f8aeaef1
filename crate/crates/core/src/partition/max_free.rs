//! Bipartitions whose `K_p`-free side is as large as possible.

use super::exchange::{exchange_refine, CliqueSplitFamily, ExchangeOutcome};
use super::strategy::Engine;
use super::{Partition, PartitionError};
use crate::clique::{clique_number, find_clique, maximum_cliques_within};
use crate::graph::{Graph, VertexSet};
use crate::oracle::OracleError;
use serde::Serialize;

/// Most maximum cliques tried as the excised clique.
const EXCISION_POOL: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MaxFreeCertificate {
    /// `|V1|` is maximum over all valid bipartitions (exhaustive search).
    Exhaustive,
    /// No single move into `V1` and no one-out-two-in exchange enlarges `V1`.
    Local,
}

#[derive(Debug, Clone)]
pub struct MaxFreePartition {
    pub partition: Partition,
    pub certificate: MaxFreeCertificate,
}

impl MaxFreePartition {
    pub fn first_size(&self) -> usize {
        self.partition.assignment.iter().filter(|&&a| a == 0).count()
    }
}

/// A valid `(p, q)` bipartition maximizing `|V1|`, exact up to the oracle's
/// assignment cap and locally maximal above it.
///
/// Requires `p, q >= 1`, `p + q = Δ + 1` and `ω <= Δ - 1`.
pub fn max_kpfree_partition(g: &Graph, p: usize, q: usize, engine: &Engine) -> Result<MaxFreePartition, PartitionError> {
    let delta = g.max_degree();
    if p == 0 || q == 0 || p + q != delta + 1 {
        return Err(PartitionError::precondition(format!(
            "need p, q >= 1 with p + q = Δ + 1 = {}, got ({p}, {q})",
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
    let budget = engine.config().budget;
    if g.n() <= budget.max_assignment_n {
        let mut search = Exact {
            g,
            quotas: [p, q],
            sides: [VertexSet::new(g.n()), VertexSet::new(g.n())],
            best: None,
            states: 0,
            max_states: budget.max_states,
        };
        if !search.run(0) {
            return Err(OracleError::TooManyStates {
                routine: "max_kpfree_partition",
                cap: budget.max_states,
            }
            .into());
        }
        let Some(first) = search.best else {
            return Err(PartitionError::Exhausted {
                depth: 0,
                diagnostics: Vec::new(),
                proven_infeasible: true,
            });
        };
        return Ok(MaxFreePartition {
            partition: Partition::from_sides(g, &first, &[p, q], "max-free-exact"),
            certificate: MaxFreeCertificate::Exhaustive,
        });
    }

    // every maximum clique is tried as the excised one before falling back
    let cliques = match maximum_cliques_within(g, &g.all_vertices(), EXCISION_POOL) {
        Some((_, all)) => all,
        None => vec![cert.witness.clone()],
    };
    let seed = match cliques.into_iter().find_map(|k| excise_and_split(g, k, p, q, engine).ok()) {
        Some(part) => part,
        None => engine.solve(g, p, q, 0)?,
    };
    let first = grow_and_swap(g, p, q, seed.part_set(0));
    Ok(MaxFreePartition {
        partition: Partition::from_sides(g, &first, &[p, q], "max-free-local"),
        certificate: MaxFreeCertificate::Local,
    })
}

struct Exact<'a> {
    g: &'a Graph,
    quotas: [usize; 2],
    sides: [VertexSet; 2],
    best: Option<VertexSet>,
    states: u64,
    max_states: u64,
}

impl Exact<'_> {
    fn fits(&self, v: usize, s: usize) -> bool {
        let need = self.quotas[s] - 1;
        let nb = self.sides[s].intersection(self.g.neighbor_set(v));
        nb.len() < need || find_clique(self.g, &nb, need).is_none()
    }

    /// Tries `V1` before `V2` per vertex; only strict improvements replace
    /// the incumbent. Returns false on budget exhaustion.
    fn run(&mut self, v: usize) -> bool {
        self.states += 1;
        if self.states > self.max_states {
            return false;
        }
        let n = self.g.n();
        if let Some(b) = &self.best {
            if self.sides[0].len() + (n - v) <= b.len() {
                return true;
            }
        }
        if v == n {
            self.best = Some(self.sides[0].clone());
            return true;
        }
        for s in 0..2 {
            if self.fits(v, s) {
                self.sides[s].insert(v);
                let ok = self.run(v + 1);
                self.sides[s].remove(v);
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// Removes a maximum clique, solves the rest, and puts `p - 1` clique
/// vertices back into `V1` (the rest into `V2`), repairing with the
/// exchange search.
fn excise_and_split(g: &Graph, clique: Vec<usize>, p: usize, q: usize, engine: &Engine) -> Result<Partition, PartitionError> {
    let n = g.n();
    let t = clique.len();
    let kset = VertexSet::from_iter(n, clique.iter().copied());
    let mut rest = g.all_vertices();
    rest.difference_with(&kset);
    let (sub, back) = g.induced_by_set(&rest);
    let inner = engine.solve(&sub, p, q, 1)?;
    let mut w1 = VertexSet::new(n);
    let mut w2 = VertexSet::new(n);
    for (i, &part) in inner.assignment.iter().enumerate() {
        if part == 0 {
            w1.insert(back[i]);
        } else {
            w2.insert(back[i]);
        }
    }
    let lo = t.saturating_sub(q - 1);
    let hi = t.min(p - 1);
    if lo > hi {
        return Err(PartitionError::precondition("clique does not fit the quota window"));
    }
    let mut order = clique.clone();
    order.sort_by_key(|&x| (g.degree_into(x, &w1) as i64 - g.degree_into(x, &w2) as i64, x));
    let family = CliqueSplitFamily::new(g, clique, w1, w2, lo..=hi, &order[..hi])?;
    match exchange_refine(g, family, p, q)? {
        ExchangeOutcome::Success { partition, .. } => Ok(partition),
        ExchangeOutcome::Stuck(r) => Err(PartitionError::Internal(format!(
            "exchange stuck on clique {:?}",
            r.offending_clique
        ))),
    }
}

fn can_join(g: &Graph, side: &VertexSet, v: usize, quota: usize) -> bool {
    let nb = side.intersection(g.neighbor_set(v));
    nb.len() < quota - 1 || find_clique(g, &nb, quota - 1).is_none()
}

/// Enlarges a valid `V1` by single moves from `V2` and by trading one `V1`
/// vertex for two `V2` vertices, until neither applies. The traded vertex
/// is only moved when `V2` can take it.
fn grow_and_swap(g: &Graph, p: usize, q: usize, mut first: VertexSet) -> VertexSet {
    loop {
        let mut second = g.all_vertices();
        second.difference_with(&first);
        if let Some(v) = second.iter().find(|&v| can_join(g, &first, v, p)) {
            first.insert(v);
            continue;
        }
        let mut traded = false;
        'out: for x in first.to_vec() {
            if !can_join(g, &second, x, q) {
                continue;
            }
            let mut f = first.clone();
            f.remove(x);
            let cands: Vec<usize> = second.iter().filter(|&y| can_join(g, &f, y, p)).collect();
            for &y in &cands {
                let mut f2 = f.clone();
                f2.insert(y);
                if let Some(z) = cands.iter().copied().find(|&z| z != y && can_join(g, &f2, z, p)) {
                    first = f2;
                    first.insert(z);
                    traded = true;
                    break 'out;
                }
            }
        }
        if !traded {
            return first;
        }
    }
}
