use crate::clique::{clique_number_within, CliqueCertificate};
use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("quota list is empty")]
    Empty,
    #[error("quota {0} is below 2")]
    QuotaTooSmall(usize),
    #[error("quotas must be non-increasing: {0:?}")]
    NotSorted(Vec<usize>),
}

/// Ordered quota list `p_1 >= ... >= p_k >= 2`; part `i` must have clique
/// number at most `p_i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionSpec {
    quotas: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(quotas: Vec<usize>) -> Result<Self, SpecError> {
        if quotas.is_empty() {
            return Err(SpecError::Empty);
        }
        if let Some(&q) = quotas.iter().find(|&&q| q < 2) {
            return Err(SpecError::QuotaTooSmall(q));
        }
        if quotas.windows(2).any(|w| w[0] < w[1]) {
            return Err(SpecError::NotSorted(quotas));
        }
        Ok(PartitionSpec { quotas })
    }

    pub fn quotas(&self) -> &[usize] {
        &self.quotas
    }

    pub fn k(&self) -> usize {
        self.quotas.len()
    }

    pub fn sum(&self) -> usize {
        self.quotas.iter().sum()
    }

    /// Whether `Σ p_i = Δ(g) - 1 + k`.
    pub fn matches_degree(&self, g: &Graph) -> bool {
        self.sum() + 1 == g.max_degree() + self.k()
    }

    /// Every non-increasing quota list with `k` entries, each at least 2,
    /// summing to `Δ - 1 + k`.
    pub fn all_for_degree(max_degree: usize, k: usize) -> Vec<PartitionSpec> {
        let total = (max_degree + k).checked_sub(1);
        let Some(total) = total else { return Vec::new() };
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(rem: usize, slots: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<PartitionSpec>) {
            if slots == 0 {
                if rem == 0 {
                    out.push(PartitionSpec { quotas: cur.clone() });
                }
                return;
            }
            let hi = cap.min(rem.saturating_sub(2 * (slots - 1)));
            for p in (2..=hi).rev() {
                cur.push(p);
                rec(rem - p, slots - 1, p, cur, out);
                cur.pop();
            }
        }
        if k > 0 {
            rec(total, k, total, &mut cur, &mut out);
        }
        out
    }
}

/// Total assignment of vertices to parts plus per-part clique certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub assignment: Vec<usize>,
    pub quotas: Vec<usize>,
    pub certificates: Vec<CliqueCertificate>,
    /// Name of the strategy that produced it.
    pub strategy: String,
}

impl Partition {
    /// Builds a partition and computes exact per-part clique numbers.
    /// Panics if an entry of `assignment` is not a part index.
    pub fn new(g: &Graph, assignment: Vec<usize>, quotas: &[usize], strategy: impl Into<String>) -> Self {
        assert_eq!(assignment.len(), g.n(), "assignment must cover every vertex");
        let sets = part_sets(g.n(), &assignment, quotas.len());
        let certificates = sets.iter().map(|s| clique_number_within(g, s)).collect();
        Partition {
            assignment,
            quotas: quotas.to_vec(),
            certificates,
            strategy: strategy.into(),
        }
    }

    pub fn from_sides(g: &Graph, first: &VertexSet, quotas: &[usize], strategy: impl Into<String>) -> Self {
        let assignment = (0..g.n()).map(|v| usize::from(!first.contains(v))).collect();
        Self::new(g, assignment, quotas, strategy)
    }

    pub fn k(&self) -> usize {
        self.quotas.len()
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.k()];
        for (v, &p) in self.assignment.iter().enumerate() {
            parts[p].push(v);
        }
        parts
    }

    pub fn part_set(&self, i: usize) -> VertexSet {
        VertexSet::from_iter(
            self.assignment.len(),
            self.assignment
                .iter()
                .enumerate()
                .filter(|&(_, &p)| p == i)
                .map(|(v, _)| v),
        )
    }

    pub fn part_omegas(&self) -> Vec<usize> {
        self.certificates.iter().map(|c| c.omega).collect()
    }

    /// `ω(g[V_i]) <= p_i - 1` for every part.
    pub fn is_valid(&self) -> bool {
        self.certificates
            .iter()
            .zip(&self.quotas)
            .all(|(c, &p)| c.omega < p)
    }

    pub fn with_strategy(mut self, name: impl Into<String>) -> Self {
        self.strategy = name.into();
        self
    }
}

pub(crate) fn part_sets(n: usize, assignment: &[usize], k: usize) -> Vec<VertexSet> {
    let mut sets = vec![VertexSet::new(n); k];
    for (v, &p) in assignment.iter().enumerate() {
        sets[p].insert(v);
    }
    sets
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub part: usize,
    /// A clique of exactly `p_i` vertices inside the part.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub part_omegas: Vec<usize>,
    pub valid: bool,
    pub violations: Vec<Violation>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(PartitionSpec::new(vec![5, 5, 5]).is_ok());
        assert_eq!(PartitionSpec::new(vec![]), Err(SpecError::Empty));
        assert_eq!(PartitionSpec::new(vec![3, 1]), Err(SpecError::QuotaTooSmall(1)));
        assert!(matches!(PartitionSpec::new(vec![3, 4]), Err(SpecError::NotSorted(_))));
    }

    #[test]
    fn enumerates_degree_matched_specs() {
        let specs = PartitionSpec::all_for_degree(13, 2);
        let pairs: Vec<Vec<usize>> = specs.iter().map(|s| s.quotas().to_vec()).collect();
        assert_eq!(pairs.first().unwrap(), &vec![12, 2]);
        assert_eq!(pairs.last().unwrap(), &vec![7, 7]);
        assert_eq!(pairs.len(), 6);
        for s in PartitionSpec::all_for_degree(13, 3) {
            assert_eq!(s.sum(), 15);
            assert!(s.quotas().windows(2).all(|w| w[0] >= w[1]));
        }
        assert_eq!(PartitionSpec::all_for_degree(3, 2).len(), 1);
        assert!(PartitionSpec::all_for_degree(2, 2).is_empty());
    }
}
