//! Error rate of every algorithm over a horizon grid, from the shipped
//! config, with the CSV written to stdout.
//!
//! cargo run --release --example decay_sweep -- [TRIALS]

use std::path::Path;

use csar::harness::{run_experiment, write_csv, ExperimentConfig};

fn main() -> csar::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/six_arm_bernoulli.json");
    let mut cfg = ExperimentConfig::load(&path)?;
    if let Some(t) = std::env::args().nth(1) {
        cfg.trials = t.parse().expect("TRIALS");
    }
    let aggs = run_experiment(&cfg, None)?;

    for a in &aggs {
        let bar = "#".repeat((a.error_rate * 400.0).round() as usize);
        eprintln!(
            "{:<15} {:>6} {:>8.4} {bar}",
            a.algorithm, a.horizon, a.error_rate
        );
    }
    write_csv(&aggs, std::io::stdout().lock())
}
