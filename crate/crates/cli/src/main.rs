//! `sams`: generate, verify and sweep regular sparse anti-magic squares.
//!
//! Exit codes: 0 success, 1 operational error (I/O, parse, internal check),
//! 2 refusal, failed verification or an inconclusive search.

mod document;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use log::{debug, info};
use sams_core::compose::{generate_with, GenerateOptions};
use sams_core::latin::build_b;
use sams_core::{
    kotzig, search, sfd, sweep, verify_kotzig, verify_regular_sams, verify_sfd, Error, Execution, GenerationOutcome,
    SearchConfig, SearchMode, SweepStatus, Verdict,
};

use document::Format;

#[derive(Parser)]
#[command(name = "sams", version, about = "Regular sparse anti-magic squares")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a regular SAMS(n,d).
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Try the search for densities without a construction.
        #[arg(long)]
        oracle_fallback: bool,
        /// Time budget for the fallback search, in seconds.
        #[arg(long, default_value_t = 10)]
        budget_secs: u64,
    },
    /// Check a JSON document or CSV grid.
    Verify {
        path: PathBuf,
        /// Density to check against; defaults to the document's, or for CSV
        /// to positive cells / n.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Generate and verify every admissible (n,d) up to a bound, as CSV.
    Sweep {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
        /// Write 0 in the millis column so output is byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print a building block.
    Blocks {
        #[command(subcommand)]
        kind: Block,
        #[arg(long, value_enum, default_value = "pretty", global = true)]
        format: BlockFormat,
    },
    /// Backtracking search for a witness at small orders.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// No default budget: running dry certifies nonexistence.
        #[arg(long, conflicts_with = "count")]
        exhaust: bool,
        /// Visit the whole space and count every witness.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        time_secs: Option<u64>,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Single-threaded, fixed order; reproducible node counts.
        #[arg(long)]
        deterministic: bool,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Block {
    /// The diagonal Latin square `b(i,j) = <2i+j-1>_n`.
    Latin {
        #[arg(long)]
        n: usize,
    },
    /// Symmetric diagonal Kotzig array, d x n.
    Kotzig {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Symmetric forward-diagonals array over [1+l, nt+l].
    Sfd {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        l: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum BlockFormat {
    Csv,
    Pretty,
}

/// How a command ended, mapped onto the exit-code contract.
enum Outcome {
    Ok,
    /// Refused, invalid or inconclusive, with a message for standard error.
    Rejected(String),
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Domain errors from the library are refusals, anything else is operational.
fn domain(err: Error) -> Result<Outcome> {
    match err {
        Error::Density { .. } | Error::Order { .. } => Ok(Outcome::Rejected(format!("out_of_domain: {err}"))),
        other => Err(other.into()),
    }
}

fn cmd_gen(n: usize, d: usize, format: Format, out: Option<&Path>, fallback: Option<Duration>) -> Result<Outcome> {
    let opts = GenerateOptions { oracle_fallback: fallback.map(SearchConfig::find_one) };
    let outcome = match generate_with(n, d, &opts) {
        Ok(o) => o,
        Err(e) => return domain(e),
    };
    match outcome {
        GenerationOutcome::Constructed { square, provenance } => {
            info!("constructed ({n},{d}) via {provenance}");
            emit(out, &document::render(&square, d, provenance, format)?)?;
            Ok(Outcome::Ok)
        }
        GenerationOutcome::Refused(r) => Ok(Outcome::Rejected(format!("{}: {}", r.kind, r.reason))),
    }
}

fn cmd_verify(path: &Path, d: Option<usize>) -> Result<Outcome> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let loaded = document::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    let sq = loaded.square;
    let n = sq.order();
    let d = d.or(loaded.d).unwrap_or_else(|| sq.positive_cells().count() / n);
    debug!("verifying order {n} at density {d}");
    let report = match verify_regular_sams(&sq, d) {
        Ok(r) => r,
        Err(e) => return domain(e),
    };
    if report.is_valid() {
        let p = sq.sum_profile();
        println!("valid regular SAMS({n},{d}); sums {}..={}", p.min(), p.max());
        Ok(Outcome::Ok)
    } else {
        print!("{report}");
        Ok(Outcome::Rejected(format!("not a regular SAMS({n},{d}): {} violation(s)", report.violations().len())))
    }
}

fn cmd_sweep(n_max: usize, out: Option<&Path>, sequential: bool, no_timing: bool) -> Result<Outcome> {
    if n_max < 5 {
        return Ok(Outcome::Rejected(format!("out_of_domain: n-max {n_max} is below 5")));
    }
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let rows = sweep(n_max, exec);
    let mut csv = String::from("n,d,status,sum_min,sum_max,millis\n");
    let mut failed = 0;
    for r in &rows {
        let (lo, hi) = r.sum_range.map_or((String::new(), String::new()), |(a, b)| (a.to_string(), b.to_string()));
        let millis = if no_timing { 0 } else { r.millis };
        csv.push_str(&format!("{},{},{},{lo},{hi},{millis}\n", r.n, r.d, r.status));
        if r.status == SweepStatus::Fail {
            failed += 1;
            log::error!("({},{}) failed: {}", r.n, r.d, r.detail);
        }
    }
    emit(out, &csv)?;
    let passed = rows.iter().filter(|r| r.status == SweepStatus::Pass).count();
    info!("{passed} pass, {failed} fail, {} external", rows.len() - passed - failed);
    Ok(if failed == 0 { Outcome::Ok } else { Outcome::Rejected(format!("{failed} sweep row(s) failed")) })
}

fn cmd_blocks(kind: &Block, format: BlockFormat) -> Result<Outcome> {
    let built = match *kind {
        Block::Latin { n } => build_b(n).map(|b| {
            let sq = b.as_square();
            match format {
                BlockFormat::Csv => document::to_csv(sq),
                BlockFormat::Pretty => sq.to_string(),
            }
        }),
        Block::Kotzig { d, n } => kotzig(d, n).map(|a| {
            debug!("verify_kotzig: {}", verify_kotzig(&a));
            rect_text(&a, format)
        }),
        Block::Sfd { t, n, l } => sfd(t, n, l).map(|a| {
            debug!("verify_sfd: {}", verify_sfd(&a, l));
            rect_text(&a, format)
        }),
    };
    match built {
        Ok(text) => {
            emit(None, &text)?;
            Ok(Outcome::Ok)
        }
        Err(e) => Ok(Outcome::Rejected(format!("out_of_domain: {e}"))),
    }
}

fn rect_text(a: &sams_core::RectArray, format: BlockFormat) -> String {
    match format {
        BlockFormat::Pretty => a.to_string(),
        BlockFormat::Csv => {
            a.row_iter().map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(",") + "\n").collect()
        }
    }
}

struct SearchArgs {
    n: usize,
    d: usize,
    exhaust: bool,
    count: bool,
    time_secs: Option<u64>,
    node_limit: Option<u64>,
    deterministic: bool,
    format: Format,
}

fn cmd_search(a: SearchArgs) -> Result<Outcome> {
    let cfg = SearchConfig {
        time_budget: a.time_secs.map(Duration::from_secs),
        node_limit: a.node_limit,
        deterministic: a.deterministic,
        mode: match (a.exhaust, a.count) {
            (_, true) => SearchMode::Count,
            (true, _) => SearchMode::Exhaust,
            _ => SearchMode::FindOne,
        },
    };
    // Find-one without limits gets a default budget rather than an error.
    let cfg =
        if cfg.validate().is_err() { SearchConfig { time_budget: Some(Duration::from_secs(60)), ..cfg } } else { cfg };
    let out = match search(a.n, a.d, &cfg) {
        Ok(o) => o,
        Err(e) => return domain(e),
    };
    eprintln!(
        "{}: {} nodes, {} patterns, {} solutions, {:.3}s",
        out.verdict,
        out.stats.nodes,
        out.stats.patterns,
        out.stats.solutions,
        out.stats.elapsed.as_secs_f64()
    );
    if let Some(w) = &out.witness {
        emit(None, &document::render(w, a.d, "oracle", a.format)?)?;
    }
    Ok(match out.verdict {
        Verdict::Found | Verdict::ExhaustedNone => Outcome::Ok,
        Verdict::BudgetExceeded => Outcome::Rejected("budget_exceeded: no conclusion".into()),
    })
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Gen { n, d, format, out, oracle_fallback, budget_secs } => {
            let fallback = oracle_fallback.then(|| Duration::from_secs(budget_secs));
            cmd_gen(n, d, format, out.as_deref(), fallback)
        }
        Command::Verify { path, d } => cmd_verify(&path, d),
        Command::Sweep { n_max, out, sequential, no_timing } => cmd_sweep(n_max, out.as_deref(), sequential, no_timing),
        Command::Blocks { kind, format } => cmd_blocks(&kind, format),
        Command::Search { n, d, exhaust, count, time_secs, node_limit, deterministic, format } => {
            cmd_search(SearchArgs { n, d, exhaust, count, time_secs, node_limit, deterministic, format })
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SAMS_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage errors are operational; --help and --version are not errors.
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Rejected(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
