//! Runs a Monte-Carlo experiment described by a JSON config and writes the
//! aggregate CSV.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use csar::engine::Algorithm;
use csar::harness::{emit_csv, run_experiment, write_csv, ExperimentConfig};

#[derive(Debug, Parser)]
#[command(name = "csar-experiment", version, about)]
struct Args {
    /// Experiment config (JSON).
    #[arg(long)]
    config: PathBuf,
    /// CSV output path; defaults to `outputs.csv` from the config, else stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the number of trials per cell.
    #[arg(long)]
    trials: Option<u64>,
    /// Override the master seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Only run these algorithms (comma separated).
    #[arg(long, value_delimiter = ',')]
    algo: Option<Vec<Algorithm>>,
    /// Override the horizon grid (comma separated).
    #[arg(long, value_delimiter = ',')]
    horizons: Option<Vec<u64>>,
    /// Write one JSON trace per trial into this directory.
    #[arg(long)]
    traces: Option<PathBuf>,
    /// Worker thread cap.
    #[arg(long)]
    threads: Option<usize>,
}

fn run(args: Args) -> csar::Result<()> {
    let mut cfg = ExperimentConfig::load(&args.config)?;
    if let Some(t) = args.trials {
        cfg.trials = t;
    }
    if let Some(s) = args.seed {
        cfg.master_seed = s;
    }
    if let Some(algos) = args.algo {
        cfg.algorithms.retain(|a| algos.contains(a));
    }
    if let Some(h) = args.horizons {
        cfg.horizons = h;
    }
    if args.traces.is_some() {
        cfg.outputs.traces = args.traces;
    }

    let aggregates = run_experiment(&cfg, args.threads)?;
    for a in &aggregates {
        eprintln!(
            "{:<15} H={:<7} error_rate={:.4} fails={} zeta_violations={} thm1={:.4} two_term={:.4} ({} ms)",
            a.algorithm,
            a.horizon,
            a.error_rate,
            a.fail_count,
            a.zeta_violation_count,
            a.theorem1_bound,
            a.proof_two_term_bound,
            a.wall_ms
        );
    }
    match args.out.or(cfg.outputs.csv) {
        Some(path) => emit_csv(&aggregates, &path),
        None => write_csv(&aggregates, std::io::stdout().lock()),
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
