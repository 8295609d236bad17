use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{ExperimentConfig, ValidatedConfig};
use super::seed::derive_trial_seed;
use crate::analysis::bound_report;
use crate::bandit::{BanditInstance, RandomStream};
use crate::baselines::{run_successive_saa, run_uniform_top_m};
use crate::engine::{check_zeta, run_csar, Algorithm, RunOutcome};
use crate::error::{Error, Result};
use crate::schedule::{make_schedule, PhaseSchedule};

/// Monte-Carlo summary of one `(algorithm, horizon)` cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialAggregate {
    pub algorithm: Algorithm,
    pub horizon: u64,
    pub trials: u64,
    /// Runs whose selection differs from the true top-`m` set; includes fails.
    pub incorrect_count: u64,
    pub fail_count: u64,
    pub zeta_violation_count: u64,
    /// Successful runs with strictly decreasing true means `mu(T_1) > ... > mu(T_m)`.
    pub rank_correct_count: u64,
    pub error_rate: f64,
    pub theorem1_bound: f64,
    pub proof_two_term_bound: f64,
    pub mean_total_pulls: f64,
    /// Wall-clock time of the cell. Not part of the CSV, which must replay
    /// byte for byte.
    pub wall_ms: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Counts {
    incorrect: u64,
    fail: u64,
    zeta_violation: u64,
    rank_correct: u64,
    pulls: u64,
}

impl Counts {
    fn merge(self, o: Counts) -> Counts {
        Counts {
            incorrect: self.incorrect + o.incorrect,
            fail: self.fail + o.fail,
            zeta_violation: self.zeta_violation + o.zeta_violation,
            rank_correct: self.rank_correct + o.rank_correct,
            pulls: self.pulls + o.pulls,
        }
    }
}

/// Runs one trial of `algorithm` at `horizon` with the given seed.
pub fn run_trial(
    validated: &ValidatedConfig,
    algorithm: Algorithm,
    horizon: u64,
    seed: u64,
) -> Result<RunOutcome> {
    let inst = &validated.instance;
    let schedule = make_schedule(inst.num_arms(), horizon)?;
    dispatch(inst, algorithm, &schedule, &mut RandomStream::new(seed))
}

fn dispatch(
    inst: &BanditInstance,
    algorithm: Algorithm,
    schedule: &PhaseSchedule,
    stream: &mut RandomStream,
) -> Result<RunOutcome> {
    match algorithm {
        Algorithm::Csar => run_csar(inst, schedule, stream),
        Algorithm::SuccessiveSaa => run_successive_saa(inst, schedule.horizon, stream),
        Algorithm::UniformTopM => run_uniform_top_m(inst, schedule.horizon, stream),
    }
}

fn trace_path(dir: &Path, algorithm: Algorithm, horizon: u64, trial: u64) -> std::path::PathBuf {
    dir.join(format!("{algorithm}_h{horizon}_trial{trial:06}.json"))
}

fn run_cell(
    validated: &ValidatedConfig,
    algorithm: Algorithm,
    horizon: u64,
) -> Result<TrialAggregate> {
    let cfg = &validated.config;
    let inst = &validated.instance;
    let profile = &validated.profile;
    let schedule = make_schedule(inst.num_arms(), horizon)?;
    let means = inst.reward_means();
    let started = Instant::now();

    let counts = (0..cfg.trials)
        .into_par_iter()
        .map(|t| -> Result<Counts> {
            let seed = derive_trial_seed(cfg.master_seed, algorithm.id(), horizon, t);
            let out = dispatch(inst, algorithm, &schedule, &mut RandomStream::new(seed))?;
            if let Some(dir) = &cfg.outputs.traces {
                let path = trace_path(dir, algorithm, horizon, t);
                let text = serde_json::to_string(&out)?;
                std::fs::write(&path, text).map_err(|e| Error::io(path, e))?;
            }
            let zeta_violation = cfg.zeta_monitor
                && algorithm == Algorithm::Csar
                && !check_zeta(&out, profile).holds;
            let rank_correct = cfg.rank_monitor && out.is_ranked_correctly(&means);
            Ok(Counts {
                incorrect: u64::from(!out.is_correct(profile)),
                fail: u64::from(!out.is_success()),
                zeta_violation: u64::from(zeta_violation),
                rank_correct: u64::from(rank_correct),
                pulls: out.total_pulls,
            })
        })
        .try_reduce(Counts::default, |a, b| Ok(a.merge(b)))?;

    let bounds = bound_report(profile, inst.num_arms(), horizon)?;
    Ok(TrialAggregate {
        algorithm,
        horizon,
        trials: cfg.trials,
        incorrect_count: counts.incorrect,
        fail_count: counts.fail,
        zeta_violation_count: counts.zeta_violation,
        rank_correct_count: counts.rank_correct,
        error_rate: counts.incorrect as f64 / cfg.trials as f64,
        theorem1_bound: bounds.theorem1_bound,
        proof_two_term_bound: bounds.proof_two_term_bound,
        mean_total_pulls: counts.pulls as f64 / cfg.trials as f64,
        wall_ms: started.elapsed().as_millis() as u64,
    })
}

/// Runs every `(algorithm, horizon)` cell of `config`, algorithms outer and
/// horizons inner, in config order.
///
/// Trial seeds depend only on the master seed, the algorithm, the horizon
/// and the trial index, and counts are summed as integers, so the result
/// does not depend on `threads` or on which other cells are configured.
/// `threads = None` uses rayon's default.
pub fn run_experiment(
    config: &ExperimentConfig,
    threads: Option<usize>,
) -> Result<Vec<TrialAggregate>> {
    let validated = config.validate()?;
    if let Some(dir) = &config.outputs.traces {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder.build()?;
    pool.install(|| {
        let mut out = Vec::new();
        for &algorithm in &config.algorithms {
            for &horizon in &config.horizons {
                out.push(run_cell(&validated, algorithm, horizon)?);
            }
        }
        Ok(out)
    })
}
