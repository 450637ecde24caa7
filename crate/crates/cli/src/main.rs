//! `hypercolor`: generate, play, sweep, solve, verify, bounds.
//!
//! Exit codes: 0 success, 2 a check reported a violation, 1 anything else
//! (bad flags, unreadable input, solver budget exhausted).

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hypercolor::analysis::{suite, CheckRecord};
use hypercolor::experiment::{run_trial, sweep, sweep_csv, TrialConfig};
use hypercolor::solver::{chromatic_number, game_chromatic_number, SolveError, SolverConfig};
use hypercolor::Hypergraph;

#[derive(Parser)]
#[command(name = "hypercolor", version, about = "Coloring game experiments on random uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample H(n, k, d) and write it in the text format.
    Gen(GenArgs),
    /// Play one game and print its trial record as JSON.
    Play(PlayArgs),
    /// Win rate of Alice for each q in a range, as CSV.
    Sweep(SweepArgs),
    /// Game chromatic and chromatic number by exhaustive search.
    Solve(SolveArgs),
    /// Run a named check and print its JSON report.
    Verify(VerifyArgs),
    /// Print the derived bound parameters as JSON.
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Read the hypergraph from a file instead of sampling one.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Density: each k-set is an edge with probability d / n^(k-1).
    #[arg(long)]
    d: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl GraphArgs {
    fn load(&self) -> Result<Hypergraph> {
        match &self.input {
            Some(path) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                Ok(Hypergraph::parse(&text).with_context(|| format!("parsing {}", path.display()))?)
            }
            None => {
                let (Some(n), Some(d)) = (self.n, self.d) else {
                    bail!("either --in or both --n and --d are required");
                };
                Ok(Hypergraph::generate_random(n, self.k, d, self.seed)?)
            }
        }
    }

    /// `d` for strategy parameters: the flag, else `m n^{k-1} / C(n, k)`.
    fn degree(&self, h: &Hypergraph) -> f64 {
        self.d.unwrap_or_else(|| {
            let (n, k) = (h.n() as f64, h.k());
            let subsets = (0..k).fold(1.0, |acc, i| acc * (n - i as f64) / (i + 1) as f64);
            h.edge_count() as f64 * n.powi(k as i32 - 1) / subsets
        })
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long)]
    d: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlayArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    q: usize,
    #[arg(long, default_value = "greedy")]
    alice: String,
    #[arg(long, default_value = "mirror")]
    bob: String,
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    /// Include the per-move trace in the record.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// A single q or a range `A..B` (inclusive).
    #[arg(long, conflicts_with = "q_range")]
    q: Option<String>,
    #[arg(long = "q-range", value_name = "A..B")]
    q_range: Option<String>,
    #[arg(long, default_value = "greedy")]
    alice: String,
    #[arg(long, default_value = "mirror")]
    bob: String,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, default_value_t = 4)]
    qmax: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: formula, deb, bins, chernoff, density, bounds.
    #[arg(long)]
    check: String,
    /// Sample count (compositions, Monte Carlo draws or sampled sets).
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<f64>,
    #[arg(long, default_value_t = 3)]
    k: u32,
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    d: f64,
    #[arg(long, default_value_t = 3)]
    k: u32,
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
}

fn parse_q_range(text: &str) -> Result<RangeInclusive<usize>> {
    let range = match text.split_once("..") {
        Some((a, b)) => {
            let a = a.trim().parse().with_context(|| format!("bad range start in `{text}`"))?;
            let b = b.trim().trim_start_matches('=').parse().with_context(|| format!("bad range end in `{text}`"))?;
            a..=b
        }
        None => {
            let q = text.trim().parse().with_context(|| format!("bad q `{text}`"))?;
            q..=q
        }
    };
    if range.is_empty() || *range.start() == 0 {
        bail!("q range `{text}` must be nonempty and start at 1 or more");
    }
    Ok(range)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Returns whether every check held.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen(a) => {
            let h = Hypergraph::generate_random(a.n, a.k, a.d, a.seed)?;
            emit(&a.out, &h.to_text())?;
        }
        Command::Play(a) => {
            let h = a.graph.load()?;
            let config = TrialConfig {
                n: h.n(),
                k: h.k(),
                d: a.graph.degree(&h),
                q: a.q,
                alice: a.alice,
                bob: a.bob,
                delta: a.delta,
                master_seed: a.graph.seed,
                trace: a.trace,
            };
            let record = run_trial(&h, &config, 0)?;
            emit(&a.out, &json_line(&record)?)?;
        }
        Command::Sweep(a) => {
            let q_text = match (&a.q, &a.q_range) {
                (Some(s), None) | (None, Some(s)) => s.clone(),
                _ => bail!("one of --q or --q-range is required"),
            };
            let qs = parse_q_range(&q_text)?;
            let h = a.graph.load()?;
            let base = TrialConfig {
                n: h.n(),
                k: h.k(),
                d: a.graph.degree(&h),
                q: 0,
                alice: a.alice,
                bob: a.bob,
                delta: a.delta,
                master_seed: a.graph.seed,
                trace: false,
            };
            let rows = sweep(&h, &base, qs, a.trials)?;
            emit(&a.out, &sweep_csv(&rows))?;
        }
        Command::Solve(a) => {
            let h = a.graph.load()?;
            let config = SolverConfig::default();
            let solved = game_chromatic_number(&h, a.qmax, config).and_then(|g| {
                let chi = chromatic_number(&h, config.node_budget)?;
                Ok((g, chi))
            });
            let (chi_g, chi) = match solved {
                Ok(v) => v,
                Err(SolveError::BudgetExceeded { budget }) => {
                    bail!("solver budget exceeded: more than {budget} nodes; no answer was produced")
                }
                Err(e) => return Err(e.into()),
            };
            let report = serde_json::json!({
                "n": h.n(),
                "k": h.k(),
                "edges": h.edge_count(),
                "qmax": a.qmax,
                "game_chromatic_number": chi_g,
                "exceeds_qmax": chi_g.is_none(),
                "chromatic_number": chi,
            });
            emit(&a.out, &json_line(&report)?)?;
        }
        Command::Verify(a) => {
            let records = verify(&a)?;
            let ok = records.iter().all(|r| r.holds);
            emit(&a.out, &json_line(&records)?)?;
            return Ok(ok);
        }
        Command::Bounds(a) => {
            let b = hypercolor::analysis::eval_bounds(a.d, a.k, a.eps, a.delta)?;
            println!("{}", serde_json::to_string_pretty(&b)?);
        }
    }
    Ok(true)
}

fn verify(a: &VerifyArgs) -> Result<Vec<CheckRecord>> {
    Ok(match a.check.as_str() {
        "formula" => {
            let mut eps = vec![0.01, 0.1];
            if !eps.contains(&a.eps) {
                eps.push(a.eps);
            }
            suite::formula_report(&eps)
        }
        "deb" => suite::deb_report(a.trials.unwrap_or(1000), a.seed),
        "bins" => suite::bins_report(a.trials.unwrap_or(1_000_000), a.seed),
        "chernoff" => suite::chernoff_report(a.trials.unwrap_or(1_000_000), a.seed),
        "density" => {
            let n = a.n.unwrap_or(1000);
            let d = a.d.unwrap_or(20.0);
            let h = Hypergraph::generate_random(n, 3, d, a.seed)?;
            suite::density_report(&h, d, a.trials.unwrap_or(10_000), a.seed)
        }
        "bounds" => suite::bounds_report(a.d.unwrap_or(100.0), a.k, a.eps, a.delta)?,
        other => bail!("unknown check `{other}` (expected one of {})", suite::CHECKS.join(", ")),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
