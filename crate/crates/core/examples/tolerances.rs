//! Instances with a cost mean exactly at the threshold or tied rewards are
//! rejected unless a tolerance is supplied.
//!
//! cargo run --example tolerances

use csar::bandit::{ground_truth, BanditInstance};

fn main() -> csar::Result<()> {
    let on_threshold = BanditInstance::point_masses(&[0.9, 0.7, 0.5], &[0.5, 0.2, 0.1], 0.5, 1)?;
    match ground_truth(&on_threshold, 0.0, 0.0) {
        Err(e) => println!("epsilon = 0: {e}"),
        Ok(_) => unreachable!(),
    }
    let p = ground_truth(&on_threshold, 0.01, 0.0)?;
    println!(
        "epsilon = 0.01: delta_c {:?}, delta_min {}",
        p.delta_c, p.delta_min
    );

    let tied = BanditInstance::point_masses(&[0.9, 0.7, 0.7, 0.3], &[0.1, 0.1, 0.1, 0.1], 0.5, 2)?;
    match ground_truth(&tied, 0.0, 0.0) {
        Err(e) => println!("delta_tol = 0: {e}"),
        Ok(_) => unreachable!(),
    }
    let p = ground_truth(&tied, 0.0, 0.01)?;
    println!("delta_tol = 0.01: delta {:?}, top-m {:?}", p.delta, p.top_m);
    Ok(())
}
