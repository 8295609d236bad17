//! End-to-end Monte-Carlo checks through the public API.

use csar::analysis::bound_report;
use csar::bandit::{ground_truth, BanditInstance};
use csar::engine::Algorithm;
use csar::harness::{run_experiment, write_csv, ExperimentConfig, Outputs, Tolerance};

fn config(instance: BanditInstance, horizons: Vec<u64>, trials: u64) -> ExperimentConfig {
    ExperimentConfig {
        schema_version: 1,
        instance: instance.into(),
        algorithms: Algorithm::ALL.to_vec(),
        horizons,
        trials,
        master_seed: 5,
        tolerance: Tolerance::default(),
        outputs: Outputs::default(),
        zeta_monitor: true,
        rank_monitor: true,
    }
}

fn three_arm() -> BanditInstance {
    // One clear winner, one infeasible decoy, one feasible runner-up.
    BanditInstance::bernoulli(&[0.7, 0.95, 0.3], &[0.1, 0.9, 0.1], 0.5, 1).unwrap()
}

#[test]
fn identical_config_twice_gives_identical_csv() {
    let cfg = config(three_arm(), vec![30, 120], 300);
    let mut a = Vec::new();
    let mut b = Vec::new();
    write_csv(&run_experiment(&cfg, None).unwrap(), &mut a).unwrap();
    write_csv(&run_experiment(&cfg, Some(1)).unwrap(), &mut b).unwrap();
    assert_eq!(a, b);
}

#[test]
fn error_never_exceeds_clipped_bound_plus_slack() {
    let inst = three_arm();
    let profile = ground_truth(&inst, 0.0, 0.0).unwrap();
    let horizons = vec![30, 200, 1000, 3000];
    let aggs = run_experiment(&config(inst.clone(), horizons, 1000), None).unwrap();
    for a in &aggs {
        let r = bound_report(&profile, inst.num_arms(), a.horizon).unwrap();
        for b in [r.theorem1_bound, r.proof_two_term_bound] {
            let slack = 3.0 * (b * (1.0 - b) / a.trials as f64).sqrt();
            assert!(a.error_rate <= b + slack, "{a:?} vs {b}");
        }
        assert!(a.incorrect_count >= a.fail_count);
        assert!(a.rank_correct_count <= a.trials - a.fail_count);
    }
}

#[test]
fn csar_error_falls_with_budget() {
    let inst = BanditInstance::bernoulli(
        &[0.9, 0.8, 0.7, 0.6, 0.5, 0.4],
        &[0.2, 0.3, 0.7, 0.4, 0.8, 0.3],
        0.5,
        2,
    )
    .unwrap();
    let mut cfg = config(inst, vec![100, 1600], 1000);
    cfg.algorithms = vec![Algorithm::Csar];
    let aggs = run_experiment(&cfg, None).unwrap();
    assert!(aggs[1].error_rate < aggs[0].error_rate, "{aggs:?}");
}
