//! Lower bound on the probability that the selections come out in reward
//! order, computed from each run's own trace, next to the observed
//! frequency.
//!
//! cargo run --release --example ranking_bound -- [HORIZON] [TRIALS]

use csar::analysis::{ranking_lower_bound, RankingBoundInput};
use csar::bandit::{BanditInstance, RandomStream};
use csar::engine::run_csar;
use csar::schedule::make_schedule;

fn main() -> csar::Result<()> {
    let mut args = std::env::args().skip(1);
    let horizon: u64 = args.next().map_or(3200, |s| s.parse().expect("HORIZON"));
    let trials: u64 = args.next().map_or(1000, |s| s.parse().expect("TRIALS"));

    let inst = BanditInstance::bernoulli(
        &[0.9, 0.8, 0.7, 0.6, 0.5, 0.4],
        &[0.2, 0.3, 0.7, 0.4, 0.8, 0.3],
        0.5,
        2,
    )?;
    let means = inst.reward_means();
    let schedule = make_schedule(inst.num_arms(), horizon)?;

    let (mut ok, mut ranked, mut undefined) = (0u64, 0u64, 0u64);
    let mut bounds = Vec::new();
    for seed in 0..trials {
        let out = run_csar(&inst, &schedule, &mut RandomStream::new(seed))?;
        if !out.is_success() {
            continue;
        }
        ok += 1;
        ranked += u64::from(out.is_ranked_correctly(&means));
        let input = RankingBoundInput::from_trace(&out, &means)?;
        if seed == 0 {
            println!("factors of the first trace: {:?}", input.factors);
        }
        match ranking_lower_bound(&input) {
            Ok(b) => bounds.push(b),
            // The empirical leader was not the true leader.
            Err(_) => undefined += 1,
        }
    }
    let min = bounds.iter().copied().fold(f64::INFINITY, f64::min);
    let mean = bounds.iter().sum::<f64>() / bounds.len().max(1) as f64;
    println!(
        "{ok} successful runs, {ranked} in reward order ({:.4})",
        ranked as f64 / ok as f64
    );
    println!("per-trace bound: mean {mean:.4}, min {min:.4}, undefined {undefined}");
    Ok(())
}
