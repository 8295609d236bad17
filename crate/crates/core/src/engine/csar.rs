use std::collections::BTreeMap;

use super::trace::{Algorithm, ArmStats, Decision, PhaseExit, PhaseRecord, RunOutcome};
use crate::bandit::{BanditInstance, RandomStream, RankMap};
use crate::error::{Error, Result};
use crate::schedule::PhaseSchedule;
use crate::ArmId;

/// Empirical gap of each arm in `feasible` relative to the top-`m_k`
/// boundary of the empirical means.
///
/// An arm of rank `r <= m_k` gets `mu_(r) - mu_(m_k + 1)`; any other arm gets
/// `mu_(m_k) - mu_(r)`. Requires `1 <= m_k < |feasible|`.
pub fn empirical_gap(
    means: &BTreeMap<ArmId, f64>,
    feasible: &[ArmId],
    m_k: usize,
) -> Result<BTreeMap<ArmId, f64>> {
    if m_k == 0 || feasible.len() <= m_k {
        return Err(Error::GapUndefined {
            feasible: feasible.len(),
            m_k,
        });
    }
    let ranked = crate::bandit::rank(means, feasible)?;
    let upper = ranked.value_at(m_k);
    let lower = ranked.value_at(m_k + 1);
    Ok(ranked
        .order()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let v = ranked.value_at(i + 1);
            let gap = if i < m_k { v - lower } else { upper - v };
            (a, gap)
        })
        .collect())
}

/// Outcome of the deactivation step for one phase.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseChoice {
    pub deactivated: ArmId,
    pub decision: Decision,
    pub gaps: BTreeMap<ArmId, f64>,
}

/// Chooses the arm to deactivate and whether it is accepted.
///
/// `costs` holds the empirical cost of every sampled active arm; unsampled
/// arms count as maximally infeasible. `means` covers `feasible`.
pub fn choose_deactivation(
    active: &[ArmId],
    costs: &BTreeMap<ArmId, f64>,
    feasible: &[ArmId],
    means: &BTreeMap<ArmId, f64>,
    m_k: usize,
) -> Result<PhaseChoice> {
    if feasible.is_empty() {
        let worst = RankMap::from_fn(active, |a| {
            Some(costs.get(&a).copied().unwrap_or(f64::INFINITY))
        })?
        .top();
        return Ok(PhaseChoice {
            deactivated: worst,
            decision: Decision::ForcedInfeasibleEviction,
            gaps: BTreeMap::new(),
        });
    }
    let best = crate::bandit::rank(means, feasible)?.top();
    let (deactivated, gaps) = if feasible.len() > m_k {
        let gaps = empirical_gap(means, feasible, m_k)?;
        (crate::bandit::rank(&gaps, feasible)?.top(), gaps)
    } else {
        (best, BTreeMap::new())
    };
    let decision = if deactivated == best {
        Decision::Accepted
    } else {
        Decision::Rejected
    };
    Ok(PhaseChoice {
        deactivated,
        decision,
        gaps,
    })
}

/// Runs constrained successive accept-or-reject on `instance`.
///
/// Each phase tops every active arm up to `n_k` samples, deactivates one
/// arm, and accepts it as the next selection if it is also the empirically
/// best feasible arm. The run stops early once all `m` slots are filled or
/// when one slot remains and exactly two arms look feasible.
pub fn run_csar(
    instance: &BanditInstance,
    schedule: &PhaseSchedule,
    stream: &mut RandomStream,
) -> Result<RunOutcome> {
    let num_arms = instance.num_arms();
    if schedule.num_arms != num_arms {
        return Err(Error::ScheduleMismatch {
            schedule: schedule.num_arms,
            instance: num_arms,
        });
    }
    if schedule.num_phases() != num_arms - 1 || schedule.recompute_t() != schedule.t {
        return Err(Error::InvalidInstance("inconsistent phase schedule".into()));
    }

    let m = instance.m();
    let tau = instance.tau();
    let mut active: Vec<ArmId> = instance.arm_ids();
    let mut remaining = m;
    let mut selections: Vec<Option<ArmId>> = vec![None; m];
    let mut stats = vec![ArmStats::default(); num_arms];
    let mut phases = Vec::with_capacity(num_arms - 1);
    let mut pulls = 0u64;

    for k in 1..num_arms {
        for &a in &active {
            for _ in 0..schedule.increment_at(k) {
                let d = instance.draw(a, stream)?;
                let s = &mut stats[a];
                s.reward_sum += d.reward;
                s.cost_sum += d.cost;
                s.count += 1;
                pulls += 1;
            }
        }

        let sample_counts: BTreeMap<ArmId, u64> =
            active.iter().map(|&a| (a, stats[a].count)).collect();
        let costs: BTreeMap<ArmId, f64> = active
            .iter()
            .filter_map(|&a| stats[a].mean_cost().map(|c| (a, c)))
            .collect();
        let feasible: Vec<ArmId> = costs
            .iter()
            .filter(|(_, &c)| c <= tau)
            .map(|(&a, _)| a)
            .collect();
        let means: BTreeMap<ArmId, f64> = feasible
            .iter()
            .map(|&a| (a, stats[a].mean_reward().expect("sampled")))
            .collect();

        let m_k = remaining;
        let choice = choose_deactivation(&active, &costs, &feasible, &means, m_k)?;
        let d = choice.deactivated;
        if choice.decision == Decision::Accepted {
            selections[m - remaining] = Some(d);
            remaining -= 1;
        }

        let exit = if remaining == 0 {
            PhaseExit::AllAccepted
        } else if remaining == 1 && feasible.len() == 2 {
            let other = feasible
                .iter()
                .copied()
                .find(|&a| a != d)
                .expect("two arms");
            selections[m - 1] = Some(other);
            PhaseExit::LastPairShortcut
        } else {
            PhaseExit::None
        };

        phases.push(PhaseRecord {
            k,
            active_set: active.clone(),
            sample_counts,
            empirical_cost: costs,
            empirical_feasible: feasible,
            empirical_mean: means,
            empirical_gap: choice.gaps,
            m_k,
            deactivated: Some(d),
            decision: choice.decision,
            exit,
        });
        active.retain(|&a| a != d);
        if exit != PhaseExit::None {
            break;
        }
    }

    Ok(RunOutcome::finish(
        Algorithm::Csar,
        selections,
        phases,
        pulls,
    ))
}
