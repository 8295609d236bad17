//! Comparator selectors sharing the CSAR trace format.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bandit::{rank, BanditInstance, RandomStream};
use crate::engine::{Algorithm, ArmStats, Decision, PhaseExit, PhaseRecord, RunOutcome};
use crate::error::{Error, Result};
use crate::ArmId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaselineKind {
    SuccessiveSaa,
    UniformTopM,
}

impl BaselineKind {
    pub fn algorithm(self) -> Algorithm {
        match self {
            BaselineKind::SuccessiveSaa => Algorithm::SuccessiveSaa,
            BaselineKind::UniformTopM => Algorithm::UniformTopM,
        }
    }

    pub fn run(
        self,
        instance: &BanditInstance,
        horizon: u64,
        stream: &mut RandomStream,
    ) -> Result<RunOutcome> {
        match self {
            BaselineKind::SuccessiveSaa => run_successive_saa(instance, horizon, stream),
            BaselineKind::UniformTopM => run_uniform_top_m(instance, horizon, stream),
        }
    }
}

/// Splits `total` over `arms` as evenly as possible; the first
/// `total % arms.len()` arms (lowest ids) get one extra pull.
fn split_even(total: u64, arms: &[ArmId]) -> Vec<(ArmId, u64)> {
    let n = arms.len() as u64;
    let (base, extra) = (total / n, total % n);
    arms.iter()
        .enumerate()
        .map(|(i, &a)| (a, base + u64::from((i as u64) < extra)))
        .collect()
}

/// Counts, empirical costs, empirically feasible arms and their means.
type Snapshot = (
    BTreeMap<ArmId, u64>,
    BTreeMap<ArmId, f64>,
    Vec<ArmId>,
    BTreeMap<ArmId, f64>,
);

struct Sampler<'a> {
    instance: &'a BanditInstance,
    stats: Vec<ArmStats>,
    pulls: u64,
}

impl<'a> Sampler<'a> {
    fn new(instance: &'a BanditInstance) -> Self {
        Sampler {
            instance,
            stats: vec![ArmStats::default(); instance.num_arms()],
            pulls: 0,
        }
    }

    fn pull(&mut self, arm: ArmId, times: u64, stream: &mut RandomStream) -> Result<()> {
        for _ in 0..times {
            let d = self.instance.draw(arm, stream)?;
            let s = &mut self.stats[arm];
            s.reward_sum += d.reward;
            s.cost_sum += d.cost;
            s.count += 1;
            self.pulls += 1;
        }
        Ok(())
    }

    /// Empirical costs, feasible set and feasible means over `active`.
    fn snapshot(&self, active: &[ArmId]) -> Snapshot {
        let counts = active.iter().map(|&a| (a, self.stats[a].count)).collect();
        let costs: BTreeMap<ArmId, f64> = active
            .iter()
            .filter_map(|&a| self.stats[a].mean_cost().map(|c| (a, c)))
            .collect();
        let feasible: Vec<ArmId> = costs
            .iter()
            .filter(|(_, &c)| c <= self.instance.tau())
            .map(|(&a, _)| a)
            .collect();
        let means = feasible
            .iter()
            .map(|&a| (a, self.stats[a].mean_reward().expect("sampled")))
            .collect();
        (counts, costs, feasible, means)
    }
}

/// Successive sample-average approximation: `m` phases, each spending an
/// equal share of the budget uniformly over the arms not yet selected and
/// selecting the empirically best arm among those that look feasible.
/// Samples accumulate across phases.
pub fn run_successive_saa(
    instance: &BanditInstance,
    horizon: u64,
    stream: &mut RandomStream,
) -> Result<RunOutcome> {
    let m = instance.m();
    let num_arms = instance.num_arms();
    let need = (m * num_arms) as u64;
    if horizon < need {
        return Err(Error::HorizonTooSmall(format!(
            "successive SAA needs H >= m * |A| = {need}, got {horizon}"
        )));
    }
    let mut sampler = Sampler::new(instance);
    let mut active = instance.arm_ids();
    let mut selections = vec![None; m];
    let mut phases = Vec::with_capacity(m);
    let phase_budgets: Vec<u64> = split_even(horizon, &(0..m).collect::<Vec<_>>())
        .into_iter()
        .map(|(_, b)| b)
        .collect();

    for (k, &budget) in (1..=m).zip(&phase_budgets) {
        for (a, times) in split_even(budget, &active) {
            sampler.pull(a, times, stream)?;
        }
        let (sample_counts, costs, feasible, means) = sampler.snapshot(&active);
        let selected = if feasible.is_empty() {
            None
        } else {
            Some(rank(&means, &feasible)?.top())
        };
        phases.push(PhaseRecord {
            k,
            active_set: active.clone(),
            sample_counts,
            empirical_cost: costs,
            empirical_feasible: feasible,
            empirical_mean: means,
            empirical_gap: BTreeMap::new(),
            m_k: m - (k - 1),
            deactivated: selected,
            decision: if selected.is_some() {
                Decision::Accepted
            } else {
                Decision::NoSelection
            },
            exit: if k == m && selected.is_some() {
                PhaseExit::AllAccepted
            } else {
                PhaseExit::None
            },
        });
        match selected {
            Some(d) => {
                selections[k - 1] = Some(d);
                active.retain(|&a| a != d);
            }
            None => break,
        }
    }
    Ok(RunOutcome::finish(
        Algorithm::SuccessiveSaa,
        selections,
        phases,
        sampler.pulls,
    ))
}

/// Uniform allocation control: `floor(H / |A|)` pulls per arm, then the
/// top-`m` empirical means among arms that look feasible.
pub fn run_uniform_top_m(
    instance: &BanditInstance,
    horizon: u64,
    stream: &mut RandomStream,
) -> Result<RunOutcome> {
    let m = instance.m();
    let num_arms = instance.num_arms();
    if horizon < num_arms as u64 {
        return Err(Error::BudgetBelowArmCount {
            horizon,
            arms: num_arms,
        });
    }
    let mut sampler = Sampler::new(instance);
    let active = instance.arm_ids();
    let per_arm = horizon / num_arms as u64;
    for &a in &active {
        sampler.pull(a, per_arm, stream)?;
    }
    let (sample_counts, costs, feasible, means) = sampler.snapshot(&active);
    let mut selections = vec![None; m];
    if !feasible.is_empty() {
        let ranked = rank(&means, &feasible)?;
        for (slot, &a) in selections.iter_mut().zip(ranked.order()) {
            *slot = Some(a);
        }
    }
    let complete = selections.iter().all(Option::is_some);
    let phase = PhaseRecord {
        k: 1,
        active_set: active,
        sample_counts,
        empirical_cost: costs,
        empirical_feasible: feasible,
        empirical_mean: means,
        empirical_gap: BTreeMap::new(),
        m_k: m,
        deactivated: None,
        decision: if complete {
            Decision::Accepted
        } else {
            Decision::NoSelection
        },
        exit: if complete {
            PhaseExit::AllAccepted
        } else {
            PhaseExit::None
        },
    };
    Ok(RunOutcome::finish(
        Algorithm::UniformTopM,
        selections,
        vec![phase],
        sampler.pulls,
    ))
}
