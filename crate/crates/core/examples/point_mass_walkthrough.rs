//! Runs CSAR once on a three-arm instance with deterministic rewards and
//! costs and prints what happens in every phase.
//!
//! cargo run --example point_mass_walkthrough

use csar::bandit::{ground_truth, BanditInstance, RandomStream};
use csar::engine::run_csar;
use csar::schedule::make_schedule;

fn main() -> csar::Result<()> {
    // Arm 2 has the best reward but is infeasible; arm 1 is the answer.
    let inst = BanditInstance::point_masses(&[0.5, 0.8, 0.99], &[0.2, 0.4, 0.9], 0.5, 1)?;
    let truth = ground_truth(&inst, 0.0, 0.0)?;
    println!(
        "feasible set {:?}, target {:?}",
        truth.feasible_set, truth.top_m
    );

    let schedule = make_schedule(inst.num_arms(), 100)?;
    println!("n_k = {:?}, N_k = {:?}", schedule.n, schedule.increments);

    let out = run_csar(&inst, &schedule, &mut RandomStream::new(0))?;
    for p in &out.phases {
        println!(
            "phase {}: active {:?}, looks feasible {:?}, gaps {:?}",
            p.k, p.active_set, p.empirical_feasible, p.empirical_gap
        );
        println!(
            "  deactivate {:?} -> {:?} (m_k was {}, exit {:?})",
            p.deactivated, p.decision, p.m_k, p.exit
        );
    }
    println!(
        "{:?}: selections {:?} using {} of 100 pulls",
        out.status, out.selections, out.total_pulls
    );
    Ok(())
}
