//! Checks the concentration event on many CSAR runs and shows that every
//! run where it held returned the right set.
//!
//! cargo run --release --example zeta_monitor -- [HORIZON] [TRIALS]

use csar::analysis::zeta_union_bound;
use csar::bandit::{ground_truth, BanditInstance, RandomStream};
use csar::engine::{check_zeta, run_csar, ZetaChannel};
use csar::schedule::make_schedule;

fn main() -> csar::Result<()> {
    let mut args = std::env::args().skip(1);
    let horizon: u64 = args.next().map_or(1600, |s| s.parse().expect("HORIZON"));
    let trials: u64 = args.next().map_or(2000, |s| s.parse().expect("TRIALS"));

    let inst = BanditInstance::bernoulli(
        &[0.9, 0.8, 0.7, 0.6, 0.5, 0.4],
        &[0.2, 0.3, 0.7, 0.4, 0.8, 0.3],
        0.5,
        2,
    )?;
    let truth = ground_truth(&inst, 0.0, 0.0)?;
    let schedule = make_schedule(inst.num_arms(), horizon)?;

    let (mut held, mut held_and_wrong, mut wrong) = (0, 0, 0);
    let (mut by_cost, mut by_reward) = (0, 0);
    for seed in 0..trials {
        let out = run_csar(&inst, &schedule, &mut RandomStream::new(seed))?;
        let z = check_zeta(&out, &truth);
        let correct = out.is_correct(&truth);
        wrong += u64::from(!correct);
        if z.holds {
            held += 1;
            held_and_wrong += u64::from(!correct);
        } else if z.violations.iter().any(|v| v.channel == ZetaChannel::Cost) {
            by_cost += 1;
        } else {
            by_reward += 1;
        }
    }
    println!("H = {horizon}, {trials} trials");
    println!("zeta held in {held}, of which {held_and_wrong} were wrong");
    println!("violations: {by_cost} with a cost deviation, {by_reward} reward only");
    println!("wrong outputs overall: {wrong}");
    println!(
        "violation frequency {:.4}, union bound {:.4}",
        (trials - held) as f64 / trials as f64,
        zeta_union_bound(&truth, &schedule)
    );
    Ok(())
}
