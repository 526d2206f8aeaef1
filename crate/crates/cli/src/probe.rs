//! Sampling small graphs for oracle-infeasible specs, engine failures and
//! graphs with `χ = Δ`.

use crate::args::ProbeArgs;
use crate::commands::{budget, parse_quotas};
use crate::error::{exit, CliError};
use crate::report::{Phenomenon, ProbeFinding, ProbeSummary};
use clique_splitter::graph::json::AdjacencyJson;
use clique_splitter::graph::{generate, GeneratorRecipe};
use clique_splitter::oracle::{chromatic_number, exists_clique_partition};
use clique_splitter::partition::{clique_bipartition, kway_clique_partition};
use clique_splitter::{clique_number, Engine, EngineConfig, Graph, OracleBudget, PartitionError, PartitionSpec};
use rayon::prelude::*;
use std::io::Write;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotaPolicy {
    /// `k = Δ - 1` parts of quota 2 (a proper `(Δ-1)`-coloring).
    AllTwo,
    /// Every non-increasing `(p, q)` with `p + q = Δ + 1`.
    AllFeasible,
    Fixed(Vec<usize>),
    None,
}

impl QuotaPolicy {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        Ok(match text {
            "all2" => QuotaPolicy::AllTwo,
            "all-feasible" => QuotaPolicy::AllFeasible,
            "none" | "" => QuotaPolicy::None,
            list => QuotaPolicy::Fixed(parse_quotas(list)?),
        })
    }

    fn specs(&self, max_degree: usize) -> Vec<PartitionSpec> {
        match self {
            QuotaPolicy::None => Vec::new(),
            QuotaPolicy::AllTwo if max_degree >= 2 => PartitionSpec::new(vec![2; max_degree - 1]).into_iter().collect(),
            QuotaPolicy::AllTwo => Vec::new(),
            QuotaPolicy::AllFeasible => PartitionSpec::all_for_degree(max_degree, 2),
            QuotaPolicy::Fixed(q) => PartitionSpec::new(q.clone())
                .ok()
                .filter(|s| s.sum() + 1 == max_degree + s.k())
                .into_iter()
                .collect(),
        }
    }
}

#[derive(Default)]
struct SampleResult {
    findings: Vec<ProbeFinding>,
    summary: ProbeSummary,
}

fn engine_solves(g: &Graph, spec: &PartitionSpec, engine: &Engine) -> Result<bool, PartitionError> {
    let q = spec.quotas();
    let res = if spec.k() == 2 {
        clique_bipartition(g, q[0], q[1], engine)
    } else {
        kway_clique_partition(g, spec, engine)
    };
    match res {
        Ok(part) => Ok(part.is_valid()),
        Err(PartitionError::Exhausted { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

fn probe_one(recipe: &str, seed: u64, policy: &QuotaPolicy, budget: &OracleBudget, engine: &Engine) -> SampleResult {
    let mut out = SampleResult::default();
    out.summary.samples = 1;
    let g = match GeneratorRecipe::parse(recipe, seed).and_then(|r| generate(&r)) {
        Ok(g) => g,
        Err(e) => {
            log::warn!("{recipe} seed {seed}: generation failed: {e}");
            out.summary.budget_skipped += 1;
            return out;
        }
    };
    let delta = g.max_degree();
    let omega = clique_number(&g).omega;
    if omega >= delta {
        out.summary.excluded = 1;
        return out;
    }
    let specs = policy.specs(delta);
    if specs.is_empty() {
        return out;
    }
    let chromatic = match chromatic_number(&g, budget) {
        Ok(c) => Some(c),
        Err(e) => {
            log::warn!("{recipe} seed {seed}: {e}");
            out.summary.budget_skipped += 1;
            None
        }
    };
    let finding = |spec: Option<Vec<usize>>, phenomenon, engine_solved| ProbeFinding {
        recipe: recipe.to_string(),
        seed,
        graph: AdjacencyJson::from(&g),
        max_degree: delta,
        omega,
        chromatic,
        spec,
        phenomenon,
        engine_solved,
    };
    if chromatic == Some(delta) {
        out.findings.push(finding(None, Phenomenon::BkTight, None));
    }
    for spec in specs {
        let oracle = match exists_clique_partition(&g, spec.quotas(), budget) {
            Ok(found) => Some(found.is_some()),
            Err(e) => {
                log::warn!("{recipe} seed {seed} spec {:?}: {e}", spec.quotas());
                out.summary.budget_skipped += 1;
                None
            }
        };
        let solved = match engine_solves(&g, &spec, engine) {
            Ok(s) => s,
            Err(e) => {
                log::warn!("{recipe} seed {seed} spec {:?}: engine: {e}", spec.quotas());
                out.summary.budget_skipped += 1;
                continue;
            }
        };
        if oracle == Some(false) {
            if solved {
                log::error!("{recipe} seed {seed} spec {:?}: engine solved an infeasible spec", spec.quotas());
                out.summary.contradictions += 1;
            }
            out.findings
                .push(finding(Some(spec.quotas().to_vec()), Phenomenon::OracleInfeasible, Some(solved)));
        } else if !solved {
            out.findings
                .push(finding(Some(spec.quotas().to_vec()), Phenomenon::EngineExhausted, Some(false)));
        }
    }
    out.summary.findings = out.findings.len();
    out
}

/// Runs the probe over every (recipe, seed) pair; output order is recipe
/// order, then seed order, independent of thread scheduling.
pub fn probe(args: &ProbeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    for r in &args.recipes {
        GeneratorRecipe::parse(r, 0)?;
    }
    let policy = QuotaPolicy::parse(&args.quotas)?;
    let budget = budget(&args.budget);
    let engine = Engine::new(EngineConfig {
        seed: args.seed_start,
        budget,
        ..EngineConfig::default()
    })?;
    let jobs: Vec<(&str, u64)> = args
        .recipes
        .iter()
        .flat_map(|r| (0..args.samples).map(move |i| (r.as_str(), args.seed_start + i)))
        .collect();
    let results: Vec<SampleResult> = jobs
        .par_iter()
        .map(|&(r, seed)| probe_one(r, seed, &policy, &budget, &engine))
        .collect();

    let mut lines = String::new();
    let mut total = ProbeSummary::default();
    for res in results {
        for f in &res.findings {
            lines.push_str(&serde_json::to_string(f).expect("finding serializes"));
            lines.push('\n');
        }
        total.samples += res.summary.samples;
        total.excluded += res.summary.excluded;
        total.budget_skipped += res.summary.budget_skipped;
        total.findings += res.summary.findings;
        total.contradictions += res.summary.contradictions;
    }
    match &args.out {
        Some(path) => std::fs::write(path, &lines).map_err(|e| CliError::io(path.display().to_string(), e))?,
        None => out.write_all(lines.as_bytes()).map_err(|e| CliError::io("<stdout>", e))?,
    }
    writeln!(err, "{}", serde_json::to_string(&total).expect("summary serializes"))
        .map_err(|e| CliError::io("<stderr>", e))?;
    Ok(exit::OK)
}
