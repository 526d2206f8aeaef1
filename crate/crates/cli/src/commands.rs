use crate::args::{BudgetArgs, Format, GenArgs, GraphSource, PartitionArgs, StatsArgs, VerifyArgs};
use crate::error::{exit, CliError};
use crate::report::{GraphSummary, InputDescriptor, PartitionDoc, RunReport};
use clique_splitter::graph::dimacs::{parse_dimacs, write_dimacs};
use clique_splitter::graph::json::{parse_json, to_json};
use clique_splitter::graph::{generate, GeneratorRecipe};
use clique_splitter::oracle::{chromatic_number, degeneracy, verify_assignment};
use clique_splitter::partition::{
    clique_bipartition, detect_cycle_clique_product, kway_clique_partition, max_kpfree_partition,
};
use clique_splitter::{clique_number, Engine, EngineConfig, Graph, OracleBudget, PartitionSpec};
use std::io::Write;
use std::path::Path;
use std::time::Instant;

pub fn budget(args: &BudgetArgs) -> OracleBudget {
    let mut b = OracleBudget::default();
    if let Some(n) = args.budget_n {
        b.max_assignment_n = n;
    }
    b
}

/// Parses `p1,p2,...`; order is not checked here.
pub fn parse_quotas(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("bad quota `{s}` in `{text}`")))
        })
        .collect()
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path.display().to_string(), e))
}

/// Reads or generates the graph named by `source`.
pub fn load_graph(source: &GraphSource) -> Result<(Graph, InputDescriptor), CliError> {
    match (&source.input, &source.gen) {
        (Some(path), _) => {
            let text = read(path)?;
            let format = source.format.unwrap_or_else(|| {
                if path.extension().is_some_and(|e| e == "json") {
                    Format::Json
                } else {
                    Format::Dimacs
                }
            });
            let g = match format {
                Format::Dimacs => parse_dimacs(&text)?,
                Format::Json => parse_json(&text)?,
            };
            Ok((g, InputDescriptor::File(path.display().to_string())))
        }
        (None, Some(recipe)) => {
            let r = GeneratorRecipe::parse(recipe, source.seed)?;
            Ok((generate(&r)?, InputDescriptor::Recipe(r.kind.to_string())))
        }
        (None, None) => Err(CliError::Input("either --in or --gen is required".into())),
    }
}

fn engine(seed: u64, budget: OracleBudget, strategy: Option<&str>) -> Result<Engine, CliError> {
    let mut config = EngineConfig {
        seed,
        budget,
        ..EngineConfig::default()
    };
    if let Some(names) = strategy {
        config.cascade = names.split(',').map(|s| s.trim().to_string()).collect();
    }
    Ok(Engine::new(config)?)
}

pub fn partition(args: &PartitionArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (g, input) = load_graph(&args.source)?;
    let quotas = parse_quotas(&args.quotas)?;
    let spec = PartitionSpec::new(quotas.clone()).map_err(|e| CliError::Precondition {
        reason: e.to_string(),
        witness: None,
    })?;
    let budget = budget(&args.budget);
    let engine = engine(args.source.seed, budget, args.strategy.as_deref())?;
    let started = Instant::now();
    let (part, certificate) = if args.maximize_first {
        if spec.k() != 2 {
            return Err(CliError::Input("--maximize-first needs exactly two quotas".into()));
        }
        let res = max_kpfree_partition(&g, quotas[0], quotas[1], &engine)?;
        (res.partition, Some(res.certificate.into()))
    } else if spec.k() == 2 {
        (clique_bipartition(&g, quotas[0], quotas[1], &engine)?, None)
    } else {
        (kway_clique_partition(&g, &spec, &engine)?, None)
    };
    let elapsed_ms = if args.no_timing {
        0
    } else {
        started.elapsed().as_millis() as u64
    };
    let check = verify_assignment(&g, &part.assignment, &quotas)?;
    let report = RunReport {
        input,
        n: g.n(),
        quotas,
        strategy: part.strategy.clone(),
        assignment: part.assignment.clone(),
        part_omegas: check.part_omegas.clone(),
        valid: check.valid,
        elapsed_ms,
        seed: args.source.seed,
        certificate,
    };
    let text = serde_json::to_string(&report).expect("report serializes");
    if let Some(path) = &args.out {
        write_file(path, &format!("{text}\n"))?;
    }
    let io = |e| CliError::io("<stdout>", e);
    if args.json {
        writeln!(out, "{text}").map_err(io)?;
    } else {
        writeln!(
            out,
            "n={} quotas={:?} strategy={} valid={} elapsed_ms={}",
            report.n, report.quotas, report.strategy, report.valid, report.elapsed_ms
        )
        .map_err(io)?;
        for (i, (w, p)) in report.part_omegas.iter().zip(&report.quotas).enumerate() {
            let size = report.assignment.iter().filter(|&&a| a == i).count();
            writeln!(out, "  part {i}: {size} vertices, omega {w} (limit {})", p - 1).map_err(io)?;
        }
    }
    Ok(if report.valid { exit::OK } else { exit::INVALID })
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (g, _) = load_graph(&args.source)?;
    let doc: PartitionDoc = serde_json::from_str(&read(&args.partition)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.partition.display())))?;
    let quotas = match (&args.quotas, doc.quotas) {
        (Some(text), _) => parse_quotas(text)?,
        (None, Some(q)) => q,
        (None, None) => return Err(CliError::Input("no quotas in the report; pass --quotas".into())),
    };
    let report = verify_assignment(&g, &doc.assignment, &quotas)?;
    let io = |e| CliError::io("<stdout>", e);
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes")).map_err(io)?;
    } else {
        writeln!(out, "part  quota  omega  ok").map_err(io)?;
        for (i, (w, p)) in report.part_omegas.iter().zip(&quotas).enumerate() {
            writeln!(out, "{i:>4}  {p:>5}  {w:>5}  {}", if w < p { "yes" } else { "NO" }).map_err(io)?;
        }
        for v in &report.violations {
            writeln!(out, "part {} holds the clique {:?}", v.part, v.witness).map_err(io)?;
        }
        writeln!(out, "{}", if report.valid { "valid" } else { "invalid" }).map_err(io)?;
    }
    Ok(if report.valid { exit::OK } else { exit::INVALID })
}

fn summary(g: &Graph, budget: &OracleBudget) -> GraphSummary {
    GraphSummary {
        n: g.n(),
        m: g.edge_count(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        omega: clique_number(g).omega,
        regular: g.is_regular(),
        degeneracy: degeneracy(g),
        chromatic: chromatic_number(g, budget).ok(),
        cycle_clique_product: detect_cycle_clique_product(g),
    }
}

fn summary_line(s: &GraphSummary) -> String {
    format!("n={} m={} Δ={} ω={}", s.n, s.m, s.max_degree, s.omega)
}

pub fn gen(args: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let recipe = GeneratorRecipe::parse(&args.recipe, args.seed)?;
    let g = generate(&recipe)?;
    let text = match args.format {
        Format::Dimacs => write_dimacs(&g),
        Format::Json => format!("{}\n", to_json(&g)),
    };
    let s = GraphSummary {
        chromatic: None,
        ..summary(&g, &OracleBudget::with_max_n(0))
    };
    let line = if args.json {
        serde_json::to_string(&s).expect("summary serializes")
    } else {
        summary_line(&s)
    };
    let io = |e| CliError::io("<output>", e);
    match &args.out {
        Some(path) => {
            write_file(path, &text)?;
            writeln!(out, "{line}").map_err(io)?;
        }
        None => {
            write!(out, "{text}").map_err(io)?;
            writeln!(err, "{line}").map_err(io)?;
        }
    }
    Ok(exit::OK)
}

pub fn stats(args: &StatsArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (g, _) = load_graph(&args.source)?;
    let s = summary(&g, &budget(&args.budget));
    let io = |e| CliError::io("<stdout>", e);
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&s).expect("summary serializes")).map_err(io)?;
    } else {
        writeln!(out, "{}", summary_line(&s)).map_err(io)?;
        writeln!(out, "δ={} regular={} degeneracy={}", s.min_degree, s.regular, s.degeneracy).map_err(io)?;
        match s.chromatic {
            Some(c) => writeln!(out, "χ={c}").map_err(io)?,
            None => writeln!(out, "χ=? (over budget)").map_err(io)?,
        }
        if let Some((len, m)) = s.cycle_clique_product {
            writeln!(out, "isomorphic to C{len} ⊠ K{m}").map_err(io)?;
        }
    }
    Ok(exit::OK)
}
