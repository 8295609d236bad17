//! Ground-truth gaps and the closed-form misidentification bounds for the
//! six-arm Bernoulli instance, across a range of budgets.
//!
//! cargo run --example bounds

use csar::analysis::{
    bound_report, proof_two_term_bound, proof_two_term_log_slope, theorem1_log_slope,
    zeta_union_bound,
};
use csar::bandit::{ground_truth, BanditInstance};
use csar::schedule::make_schedule;

fn main() -> csar::Result<()> {
    let inst = BanditInstance::bernoulli(
        &[0.9, 0.8, 0.7, 0.6, 0.5, 0.4],
        &[0.2, 0.3, 0.7, 0.4, 0.8, 0.3],
        0.5,
        2,
    )?;
    let k = inst.num_arms();
    let p = ground_truth(&inst, 0.0, 0.0)?;
    println!("feasible {:?}, top-m {:?}", p.feasible_set, p.top_m);
    println!("delta_c {:?}", p.delta_c);
    println!("delta   {:?}", p.delta);
    println!("delta_min {}", p.delta_min);
    println!(
        "log slopes: single-rate {:.4e}, two-term {:.4e}",
        theorem1_log_slope(&p, k),
        proof_two_term_log_slope(&p, k)
    );

    println!(
        "{:>7} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "H", "single", "two-term", "cost", "reward", "zeta union"
    );
    for h in [200u64, 800, 3200, 8000, 16_000, 25_600, 40_000] {
        let r = bound_report(&p, k, h)?;
        let two = proof_two_term_bound(&p, k, h)?;
        let zeta = zeta_union_bound(&p, &make_schedule(k, h)?);
        println!(
            "{:>7} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e}{}",
            h,
            r.theorem1_bound,
            r.proof_two_term_bound,
            two.cost_term,
            two.reward_term,
            zeta,
            if r.clipped { "  (clipped)" } else { "" }
        );
    }
    Ok(())
}
