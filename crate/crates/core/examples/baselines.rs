//! Same instance, same budget, same seeds: CSAR against successive sample
//! average approximation and uniform allocation.
//!
//! cargo run --release --example baselines -- [HORIZON] [TRIALS]

use csar::bandit::{ground_truth, BanditInstance, RandomStream};
use csar::baselines::BaselineKind;
use csar::engine::{run_csar, Algorithm};
use csar::harness::derive_trial_seed;
use csar::schedule::make_schedule;

fn main() -> csar::Result<()> {
    let mut args = std::env::args().skip(1);
    let horizon: u64 = args.next().map_or(2000, |s| s.parse().expect("HORIZON"));
    let trials: u64 = args.next().map_or(2000, |s| s.parse().expect("TRIALS"));

    // Seven arms, three of them infeasible with high reward.
    let inst = BanditInstance::bernoulli(
        &[0.95, 0.9, 0.85, 0.8, 0.75, 0.6, 0.5],
        &[0.7, 0.6, 0.3, 0.35, 0.65, 0.4, 0.2],
        0.5,
        3,
    )?;
    let truth = ground_truth(&inst, 0.0, 0.0)?;
    let schedule = make_schedule(inst.num_arms(), horizon)?;
    println!(
        "target {:?}, H = {horizon}, {trials} trials",
        truth.top_m_sorted()
    );

    for algo in Algorithm::ALL {
        let mut wrong = 0;
        let mut fails = 0;
        for t in 0..trials {
            let mut stream = RandomStream::new(derive_trial_seed(1, 0, horizon, t));
            let out = match algo {
                Algorithm::Csar => run_csar(&inst, &schedule, &mut stream)?,
                Algorithm::SuccessiveSaa => {
                    BaselineKind::SuccessiveSaa.run(&inst, horizon, &mut stream)?
                }
                Algorithm::UniformTopM => {
                    BaselineKind::UniformTopM.run(&inst, horizon, &mut stream)?
                }
            };
            wrong += u64::from(!out.is_correct(&truth));
            fails += u64::from(!out.is_success());
        }
        println!(
            "{:<15} error {:.4} ({wrong} wrong, {fails} fail)",
            algo,
            wrong as f64 / trials as f64
        );
    }
    Ok(())
}
