//! Command-line front end: `analyze`, `search`, `enumerate`, `certify`, `sdist`.
//!
//! Exit status: 0 success, 1 usage error, 2 data error, 3 counterexample found.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twodist::embedding::{borsuk_check_with, parse_precision, realize, TAU_DIGITS};
use twodist::enumerate::enumerate_all;
use twodist::io::{parse_graphs, GraphFormat};
use twodist::multidist::{
    dim_at, h_ratio_at, minimize_rank, sdist_borsuk_check_dim, EdgeColoring, ParamPoint,
    SdistVerdict,
};
use twodist::roots::mu_tau1;
use twodist::search::{hill_climb_logged, parse_blocks, CandidateStatus, PlateauPolicy, SearchConfig};
use twodist::{derive_seed, io::encode_graph6, Error, Graph};

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "twodist", version, about = "Two-distance embeddings of graphs and Borsuk counterexample search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph6,
    Dimacs,
    Edges,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Graph6 => GraphFormat::Graph6,
            Format::Dimacs => GraphFormat::Dimacs,
            Format::Edges => GraphFormat::Edges,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Plateau {
    Restart,
    Perturb,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report mu, tau1, dimension, theta and sphericality of each graph in FILE.
    Analyze {
        file: PathBuf,
        /// Input format; detected from the content when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write the report here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Search-node budget of the clique cover solver.
        #[arg(long, default_value_t = twodist::cover::DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Skip the numeric cross-check of sphericality.
        #[arg(long)]
        no_audit: bool,
    },
    /// Local search over inter-block edges of a fixed clique partition.
    Search {
        /// `BxK` for B blocks of size K, or a comma list of block sizes.
        #[arg(long)]
        blocks: String,
        /// Iterations per restart.
        #[arg(long, default_value_t = 200)]
        iters: u64,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSONL log; an existing log with the same settings is resumed.
        #[arg(long)]
        log: PathBuf,
        #[arg(long, default_value_t = 8)]
        tabu: usize,
        #[arg(long, default_value_t = 10)]
        sideways: usize,
        #[arg(long, value_enum, default_value_t = Plateau::Restart)]
        plateau: Plateau,
        /// Search-node budget when verifying a candidate's clique cover.
        #[arg(long, default_value_t = 100_000_000)]
        node_budget: u64,
        /// Only walk through graphs whose clique cover number stays equal to the block count.
        #[arg(long)]
        keep_cover_minimal: bool,
    },
    /// Check theta + mu <= n on every graph with at most K vertices.
    Enumerate {
        #[arg(long)]
        max_n: usize,
    },
    /// Realize a graph numerically and certify its distances.
    Certify {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Isolating-interval width for tau1, e.g. 1e-24.
        #[arg(long, default_value = "1e-24")]
        precision: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// s-distance analysis of an edge coloring given as JSON.
    Sdist {
        file: PathBuf,
        /// Parameter point t2[,t3...], fractions or decimals.
        #[arg(long, conflicts_with = "budget", required_unless_present = "budget")]
        params: Option<String>,
        /// Evaluation budget of the rank search.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = twodist::cover::DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
}

/// A failure with its exit status.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_DATA, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure(EXIT_DATA, format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, format!("{text}\n"))
            .map_err(|e| Failure(EXIT_DATA, format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure(EXIT_DATA, e.to_string())),
                _ => Ok(()),
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value serializes")
}

fn load_graphs(file: &Path, format: Option<Format>) -> Result<Vec<Graph>, Failure> {
    let bytes = read(file)?;
    let graphs = parse_graphs(&bytes, format.map(Into::into))?;
    if graphs.is_empty() {
        return Err(Failure(EXIT_DATA, format!("{}: no graphs", file.display())));
    }
    Ok(graphs)
}

fn analyze(
    file: &Path,
    format: Option<Format>,
    output: Option<&Path>,
    node_budget: u64,
    audit: bool,
) -> Outcome {
    let graphs = load_graphs(file, format)?;
    let reports = graphs
        .iter()
        .map(|g| borsuk_check_with(g, node_budget, audit))
        .collect::<Result<Vec<_>, _>>()?;
    let found = reports.iter().any(|r| r.is_counterexample());
    let text = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        serde_json::to_string_pretty(&reports).expect("reports serialize")
    };
    emit(&text, output)?;
    Ok(if found { EXIT_COUNTEREXAMPLE } else { 0 })
}

fn search(blocks: &str, cfg: SearchConfig, log: &Path) -> Outcome {
    let c0 = parse_blocks(blocks).map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
    cfg.validate().map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
    let out = hill_climb_logged(&c0, &cfg, log)?;
    let status = out.verification.as_ref().map(|v| v.status);
    let summary = json!({
        "schema": 1,
        "n": c0.n(),
        "m": c0.m(),
        "best_score": out.best.score,
        "mu": out.best.mu,
        "restart": out.best.restart,
        "iteration": out.best.iteration,
        "graph6": encode_graph6(&out.best.graph),
        "records": out.trace.len(),
        "candidate": status,
        "report": out.verification.as_ref().map(|v| serde_json::to_value(&v.report).expect("report serializes")),
    });
    emit(&pretty(&summary), None)?;
    Ok(if status == Some(CandidateStatus::Counterexample) {
        EXIT_COUNTEREXAMPLE
    } else {
        0
    })
}

fn enumerate(max_n: usize) -> Outcome {
    if max_n == 0 || max_n > 10 {
        return Err(Failure(EXIT_USAGE, "--max-n must lie in 1..=10".into()));
    }
    let report = enumerate_all(max_n);
    emit(report.to_table().trim_end(), None)?;
    for v in &report.violations {
        eprintln!(
            "VIOLATION: {} has n={} mu={} theta={}",
            v.graph6, v.n, v.mu, v.theta
        );
    }
    for g6 in &report.unresolved {
        eprintln!("warning: clique cover of {g6} unresolved within budget");
    }
    Ok(if report.violations.is_empty() { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn certify(file: &Path, format: Option<Format>, precision: &str, output: Option<&Path>) -> Outcome {
    let precision = parse_precision(precision).map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
    let graphs = load_graphs(file, format)?;
    let mut out = Vec::with_capacity(graphs.len());
    for g in &graphs {
        let (mu, tau1) = mu_tau1(g)?;
        let cfg = realize(g, &precision)?;
        out.push(json!({
            "schema": 1,
            "n": g.n(),
            "mu": mu,
            "tau1": tau1.map(|t| t.to_decimal(TAU_DIGITS)),
            "dim": cfg.dim,
            "t": cfg.t,
            "max_deviation": cfg.max_deviation,
            "points": cfg.points,
        }));
    }
    let v = if out.len() == 1 { out.remove(0) } else { Value::Array(out) };
    emit(&pretty(&v), output)?;
    Ok(0)
}

fn sdist(file: &Path, params: Option<&str>, budget: Option<usize>, seed: u64, node_budget: u64) -> Outcome {
    let text = String::from_utf8(read(file)?)
        .map_err(|_| Failure(EXIT_DATA, format!("{}: not UTF-8", file.display())))?;
    let l = EdgeColoring::from_json(&text)?;
    let mut v = json!({ "schema": 1, "n": l.n(), "s": l.s() });
    let dim = if let Some(params) = params {
        let p = ParamPoint::parse(params).map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
        let dim = dim_at(&l, &p)?;
        let h = h_ratio_at(&l, &p)?;
        v["params"] = json!(p.to_string());
        v["dim"] = json!(dim);
        v["h_ratio"] = json!(h.as_ref().map(ToString::to_string));
        v["possibly_spherical"] = json!(h.is_some());
        dim
    } else {
        let budget = budget.expect("clap requires --params or --budget");
        let r = minimize_rank(&l, budget, derive_seed(seed, "sdist"))?;
        v["dim"] = json!(r.dim);
        v["witness"] = json!(r.witness.as_ref().map(ToString::to_string));
        v["exact"] = json!(r.exact);
        v["evaluations"] = json!(r.evaluations);
        v["feasible_grid_points"] = json!(r.grid.iter().filter(|s| s.dim.is_some()).count());
        r.dim
    };
    let mut code = 0;
    if let Some(dim) = dim {
        let check = sdist_borsuk_check_dim(&l, dim, node_budget);
        v["theta"] = json!(check.theta.upper);
        v["theta_exact"] = json!(check.theta.exact);
        v["verdict"] = json!(check.verdict);
        if check.verdict == SdistVerdict::Candidate {
            code = EXIT_COUNTEREXAMPLE;
        }
    } else {
        v["verdict"] = Value::Null;
    }
    emit(&pretty(&v), None)?;
    Ok(code)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Analyze {
            file,
            format,
            output,
            node_budget,
            no_audit,
        } => analyze(&file, format, output.as_deref(), node_budget, !no_audit),
        Command::Search {
            blocks,
            iters,
            restarts,
            seed,
            log,
            tabu,
            sideways,
            plateau,
            node_budget,
            keep_cover_minimal,
        } => {
            let cfg = SearchConfig {
                max_iters: iters,
                restarts,
                tabu_length: tabu,
                sideways_limit: sideways,
                plateau_policy: match plateau {
                    Plateau::Restart => PlateauPolicy::Restart,
                    Plateau::Perturb => PlateauPolicy::Perturb,
                },
                node_budget,
                seed: derive_seed(seed, "search"),
                keep_cover_minimal,
            };
            search(&blocks, cfg, &log)
        }
        Command::Enumerate { max_n } => enumerate(max_n),
        Command::Certify {
            file,
            format,
            precision,
            output,
        } => certify(&file, format, &precision, output.as_deref()),
        Command::Sdist {
            file,
            params,
            budget,
            seed,
            node_budget,
        } => sdist(&file, params.as_deref(), budget, seed, node_budget),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
