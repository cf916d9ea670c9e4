//! `vc-lab`: command-line front end for the vertex cover experiments.
//!
//! Exit codes: 0 on success, 2 for bad input (unreadable or malformed graphs,
//! invalid flags), 3 when a resource limit such as the exact solver's node
//! budget is hit.

mod args;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use args::*;
use vc_lab::analysis::{
    benchmark_sweep, compare_algorithms, counterexample_search, runtime_scaling_probe,
    AnalysisError, CompareOptions, ExperimentReport, ReportRow, SweepOptions,
};
use vc_lab::graph::{
    generate, parse_dimacs, parse_edge_list, write_dimacs, write_edge_list, GeneratorSpec, Graph,
    GraphError, Model, ParseMode,
};
use vc_lab::solvers::{
    exact_vertex_cover, is_vertex_cover, matching_vertex_cover, CoverResult, EdgeOrder,
    GreedyPolicy, PickScript, SolveError, TieBreak,
};

const THREADS_ENV: &str = "VC_LAB_THREADS";

#[derive(Debug)]
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn resource(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { .. } => CliError::resource(e.to_string()),
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::OracleBudgetExceeded(_) => CliError::resource(e.to_string()),
            _ => CliError::input(e.to_string()),
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Gen(a) => run_gen(a),
        Command::Bench(a) => run_bench(a),
        Command::Compare(a) => run_compare(a),
        Command::Search(a) => run_search(a),
        Command::Probe(a) => run_probe(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("vc-lab: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn model_from(
    kind: ModelKind,
    n: Option<usize>,
    k: Option<usize>,
    p: Option<f64>,
) -> CliResult<Model> {
    let need_n = || n.ok_or_else(|| CliError::input(format!("--n is required for {kind:?}")));
    Ok(match kind {
        ModelKind::Gnp => Model::Gnp {
            n: need_n()?,
            p: p.ok_or_else(|| CliError::input("--p is required for gnp"))?,
        },
        ModelKind::Star => Model::Star { n: need_n()? },
        ModelKind::Path => Model::Path { n: need_n()? },
        ModelKind::Complete => Model::Complete { n: need_n()? },
        ModelKind::Crown => Model::Crown {
            k: k.ok_or_else(|| CliError::input("--k is required for crown"))?,
        },
    })
}

fn generator_spec(m: &ModelArgs) -> CliResult<GeneratorSpec> {
    let kind = m
        .model
        .ok_or_else(|| CliError::input("--model is required"))?;
    Ok(GeneratorSpec::new(model_from(kind, m.n, m.k, m.p)?, m.seed))
}

fn read_graph(path: &Path, lenient: bool) -> CliResult<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let parsed = match ext {
        "edges" | "el" | "txt" => parse_edge_list(&text),
        _ => parse_dimacs(
            &text,
            if lenient {
                ParseMode::Lenient
            } else {
                ParseMode::Strict
            },
        ),
    };
    parsed.map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// Loads the graph and a display name for it.
fn load_input(input: &InputArgs) -> CliResult<(Graph, String)> {
    match (&input.input, input.model.model) {
        (Some(_), Some(_)) => Err(CliError::input(
            "give either an input file or --model, not both",
        )),
        (None, None) => Err(CliError::input("an input file or --model is required")),
        (Some(path), None) => {
            let name = path
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            Ok((read_graph(path, input.lenient)?, name))
        }
        (None, Some(_)) => {
            let spec = generator_spec(&input.model)?;
            Ok((generate(&spec)?, spec.model.to_string()))
        }
    }
}

fn sidecar_script(input: &InputArgs, solver: &SolverArgs) -> Option<PathBuf> {
    if solver.no_script {
        return None;
    }
    if let Some(p) = &solver.script {
        return Some(p.clone());
    }
    let path = input.input.as_ref()?.with_extension("trace");
    path.is_file().then_some(path)
}

fn greedy_policy(g: &Graph, script: Option<&Path>, solver: &SolverArgs) -> CliResult<GreedyPolicy> {
    let tie = match solver.tie {
        TieChoice::Lowest => TieBreak::LowestId,
        TieChoice::Highest => TieBreak::HighestId,
        TieChoice::Random => TieBreak::SeededRandom(solver.solver_seed),
    };
    let Some(path) = script else {
        return Ok(GreedyPolicy::new(tie));
    };
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let script = PickScript::parse(&text, g)?;
    eprintln!("vc-lab: greedy picks follow {}", path.display());
    Ok(GreedyPolicy::scripted(script, tie))
}

fn edge_order(solver: &SolverArgs) -> EdgeOrder {
    match solver.edge_order {
        EdgeOrderChoice::Lex => EdgeOrder::Lexicographic,
        EdgeOrderChoice::Random => EdgeOrder::SeededRandom(solver.solver_seed),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> CliResult {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::resource(format!("{}: {e}", p.display())))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::resource(e.to_string()))
        }
    }
}

#[derive(Serialize)]
struct SolveRecord {
    algorithm: String,
    size: usize,
    valid: bool,
    proven_optimal: bool,
    cover: Vec<String>,
}

fn run_solve(a: SolveArgs) -> CliResult {
    let (g, _) = load_input(&a.input)?;
    let algs: &[AlgChoice] = match a.alg {
        AlgChoice::All => &[AlgChoice::Greedy, AlgChoice::Matching, AlgChoice::Exact],
        ref one => std::slice::from_ref(one),
    };

    let mut results: Vec<CoverResult> = Vec::new();
    for alg in algs {
        let r = match alg {
            AlgChoice::Greedy => {
                let script = sidecar_script(&a.input, &a.solver);
                greedy_policy(&g, script.as_deref(), &a.solver)?.solve(&g)?
            }
            AlgChoice::Matching => matching_vertex_cover(&g, edge_order(&a.solver)),
            AlgChoice::Exact => exact_vertex_cover(&g, a.solver.budget)?,
            AlgChoice::All => unreachable!(),
        };
        assert!(
            is_vertex_cover(&g, &r.cover),
            "{} returned a non-cover",
            r.algorithm
        );
        results.push(r);
    }

    let records: Vec<SolveRecord> = results
        .iter()
        .map(|r| SolveRecord {
            algorithm: r.algorithm.to_string(),
            size: r.len(),
            valid: is_vertex_cover(&g, &r.cover),
            proven_optimal: r.proven_optimal,
            cover: r.labels(&g),
        })
        .collect();

    let text = match a.format {
        Format::Table => {
            let mut out = String::new();
            for (r, rec) in results.iter().zip(&records) {
                if a.verbose >= 1 && !r.trace.steps.is_empty() {
                    out.push_str(&format!("{} trace:\n", rec.algorithm));
                    out.push_str(&r.trace.narrate(&g));
                }
                let mut line = format!("{}: cover size {}", rec.algorithm, rec.size);
                if !rec.cover.is_empty() {
                    line.push_str(": ");
                    line.push_str(&rec.cover.join(" "));
                }
                out.push_str(&line);
                out.push('\n');
                out.push_str(&format!(
                    "{}: valid cover {}\n",
                    rec.algorithm,
                    if rec.valid { "yes" } else { "no" }
                ));
            }
            out
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::CRLF)
                .from_writer(Vec::new());
            w.write_record(["algorithm", "size", "valid", "proven_optimal", "cover"])
                .expect("write to memory");
            for rec in &records {
                w.write_record([
                    rec.algorithm.clone(),
                    rec.size.to_string(),
                    rec.valid.to_string(),
                    rec.proven_optimal.to_string(),
                    rec.cover.join(" "),
                ])
                .expect("write to memory");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&records).expect("records serialize");
            s.push('\n');
            s
        }
    };
    write_output(a.output.as_deref(), &text)
}

fn run_gen(a: GenArgs) -> CliResult {
    let spec = generator_spec(&a.model)?;
    let mut g = generate(&spec)?;
    if let Some(labels) = a.labels {
        g = g.with_labels(labels)?;
    }
    let text = match a.format {
        GraphFormat::Dimacs => write_dimacs(&g),
        GraphFormat::Edgelist => write_edge_list(&g),
    };
    write_output(a.output.as_deref(), &text)
}

fn render_report(report: &ExperimentReport, args: &ReportArgs) -> String {
    match args.format {
        Format::Csv => report.to_csv(!args.no_timing),
        Format::Json => report.to_json(!args.no_timing),
        Format::Table => report.to_table(),
    }
}

fn threads_from_env() -> CliResult<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .map(Some)
            .ok_or_else(|| CliError::input(format!("{THREADS_ENV} must be a positive integer"))),
        Err(_) => Ok(None),
    }
}

fn run_bench(a: BenchArgs) -> CliResult {
    let specs: Vec<GeneratorSpec> = if a.model == ModelKind::Crown {
        if a.k.is_empty() {
            return Err(CliError::input("--k is required for crown"));
        }
        a.k.iter()
            .map(|&k| GeneratorSpec::new(Model::Crown { k }, a.seed))
            .collect()
    } else {
        if a.n.is_empty() {
            return Err(CliError::input("--n is required"));
        }
        a.n.iter()
            .map(|&n| {
                model_from(a.model, Some(n), None, a.p).map(|m| GeneratorSpec::new(m, a.seed))
            })
            .collect::<CliResult<_>>()?
    };
    if a.solver.script.is_some() {
        return Err(CliError::input(
            "--script does not apply to generated instances",
        ));
    }

    let opts = SweepOptions {
        compare: CompareOptions {
            with_exact: !a.no_exact,
            greedy: greedy_policy(&Graph::empty(0), None, &a.solver)?,
            edge_order: edge_order(&a.solver),
            budget: a.solver.budget,
            repetitions: a.report.repetitions,
        },
        threads: threads_from_env()?,
    };
    let report = benchmark_sweep(&specs, a.trials, a.seed, &opts)?;
    write_output(
        a.report.output.as_deref(),
        &render_report(&report, &a.report),
    )?;
    eprintln!("{}", report.summary.line());

    if !report.rows.is_empty() && report.summary.failed == report.rows.len() {
        return Err(CliError::resource("every instance failed"));
    }
    Ok(())
}

fn run_compare(a: CompareArgs) -> CliResult {
    let (g, name) = load_input(&a.input)?;
    let script = sidecar_script(&a.input, &a.solver);
    let opts = CompareOptions {
        with_exact: !a.no_exact,
        greedy: greedy_policy(&g, script.as_deref(), &a.solver)?,
        edge_order: edge_order(&a.solver),
        budget: a.solver.budget,
        repetitions: a.report.repetitions,
    };
    let row = compare_algorithms(&g, &opts)?;
    let report = ExperimentReport::new(
        a.input.model.seed,
        1,
        vec![ReportRow {
            index: 0,
            instance: name,
            trial: 0,
            seed: a.input.model.seed,
            comparison: Some(row),
            error: None,
        }],
    );
    write_output(
        a.report.output.as_deref(),
        &render_report(&report, &a.report),
    )
}

fn run_search(a: SearchArgs) -> CliResult {
    let start = match (&a.start, a.from) {
        (Some(path), _) => Some(read_graph(path, false)?),
        (None, Some(kind)) => Some(generate(&GeneratorSpec::new(
            model_from(kind, a.n, a.k, a.p)?,
            a.seed,
        ))?),
        (None, None) => None,
    };
    let state = counterexample_search(a.nmax, a.iters, a.seed, start)?;
    let text = format!(
        "best ratio {}/{} = {:.4} (epsilon {:.4}) on n={} m={} after {} iterations, {} accepted\n",
        state.best_greedy,
        state.best_optimal,
        state.best_ratio(),
        2.0 - state.best_ratio(),
        state.best.n(),
        state.best.m(),
        state.iterations,
        state.accepted
    );
    write_output(None, &text)?;
    if let Some(path) = &a.output {
        write_output(Some(path), &write_dimacs(&state.best))?;
    }
    Ok(())
}

fn run_probe(a: ProbeArgs) -> CliResult {
    let report = runtime_scaling_probe(&a.sizes, a.p, a.trials, a.seed)?;
    let text = match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("probe serializes");
            s.push('\n');
            s
        }
        Format::Csv => report.to_csv(),
        Format::Table => report.to_table(),
    };
    write_output(a.output.as_deref(), &text)
}
