//! Closed-form bounds on misidentification and ranking probabilities.

use serde::{Deserialize, Serialize};

use crate::bandit::{rank, ComplexityProfile};
use crate::engine::{Decision, PhaseExit, RunOutcome};
use crate::error::{Error, Result};
use crate::schedule::PhaseSchedule;

/// A probability bound as computed, before clipping to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub raw: f64,
}

impl BoundValue {
    /// The value reported next to empirical frequencies: `min(raw, 1)`.
    pub fn reported(&self) -> f64 {
        self.raw.min(1.0)
    }

    pub fn is_clipped(&self) -> bool {
        self.raw > 1.0
    }
}

/// The two exponential terms of the union bound on the concentration event.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoTermBound {
    pub cost_term: f64,
    pub reward_term: f64,
}

impl TwoTermBound {
    pub fn value(&self) -> BoundValue {
        BoundValue {
            raw: self.cost_term + self.reward_term,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem1_bound: f64,
    pub proof_two_term_bound: f64,
    pub horizon: u64,
    /// Set when either bound exceeded 1 and is reported as 1.
    pub clipped: bool,
}

fn check_horizon(num_arms: usize, horizon: u64) -> Result<()> {
    if horizon < num_arms as u64 {
        return Err(Error::BudgetBelowArmCount {
            horizon,
            arms: num_arms,
        });
    }
    Ok(())
}

/// `(ln K + 1/2) K`, the common denominator of both exponents.
fn rate_denominator(num_arms: usize) -> f64 {
    let k = num_arms as f64;
    (k.ln() + 0.5) * k
}

/// `2 K^2 exp(-(H - K) delta_min / ((ln K + 1/2) K))`.
pub fn theorem1_bound(
    profile: &ComplexityProfile,
    num_arms: usize,
    horizon: u64,
) -> Result<BoundValue> {
    check_horizon(num_arms, horizon)?;
    if profile.delta_min.is_nan() || profile.delta_min <= 0.0 {
        return Err(Error::VacuousBound(format!(
            "delta_min = {}",
            profile.delta_min
        )));
    }
    let k = num_arms as f64;
    let spare = (horizon - num_arms as u64) as f64;
    Ok(BoundValue {
        raw: 2.0 * k * k * (-spare * profile.delta_min / rate_denominator(num_arms)).exp(),
    })
}

/// Cost term `2 K^2 exp(-(H - K) min delta_c^2 / (2 (ln K + 1/2) K))` plus
/// reward term `2 K^2 exp(-(H - K) min delta^2 / (8 (ln K + 1/2) K))`.
pub fn proof_two_term_bound(
    profile: &ComplexityProfile,
    num_arms: usize,
    horizon: u64,
) -> Result<TwoTermBound> {
    check_horizon(num_arms, horizon)?;
    let (dc, d) = (profile.min_delta_c(), profile.min_delta());
    if !(dc > 0.0 && d > 0.0) {
        return Err(Error::VacuousBound(format!(
            "min delta_c = {dc}, min delta = {d}"
        )));
    }
    let k = num_arms as f64;
    let spare = (horizon - num_arms as u64) as f64;
    let denom = rate_denominator(num_arms);
    Ok(TwoTermBound {
        cost_term: 2.0 * k * k * (-spare * dc * dc / (2.0 * denom)).exp(),
        reward_term: 2.0 * k * k * (-spare * d * d / (8.0 * denom)).exp(),
    })
}

/// Log-slope in `H` of `theorem1_bound`.
pub fn theorem1_log_slope(profile: &ComplexityProfile, num_arms: usize) -> f64 {
    -profile.delta_min / rate_denominator(num_arms)
}

/// Asymptotic log-slope in `H` of `proof_two_term_bound`, set by the slower
/// of its two terms.
pub fn proof_two_term_log_slope(profile: &ComplexityProfile, num_arms: usize) -> f64 {
    let (dc, d) = (profile.min_delta_c(), profile.min_delta());
    -(dc * dc / 2.0).min(d * d / 8.0) / rate_denominator(num_arms)
}

pub fn bound_report(
    profile: &ComplexityProfile,
    num_arms: usize,
    horizon: u64,
) -> Result<BoundReport> {
    let t1 = theorem1_bound(profile, num_arms, horizon)?;
    let two = proof_two_term_bound(profile, num_arms, horizon)?.value();
    Ok(BoundReport {
        theorem1_bound: t1.reported(),
        proof_two_term_bound: two.reported(),
        horizon,
        clipped: t1.is_clipped() || two.is_clipped(),
    })
}

/// Union bound on the probability that some phase `k <= |A_f| - 1` sees a
/// cost estimate off by more than `delta_c(a) / 2` or a reward estimate off
/// by more than a quarter gap, using the exact per-phase counts `n_k`.
///
/// The per-phase reward tolerance is random (it depends on the empirically
/// feasible set); it is lower-bounded by `min_a delta(a) / 4`, so the value
/// returned is a valid upper bound on the violation probability.
pub fn zeta_union_bound(profile: &ComplexityProfile, schedule: &PhaseSchedule) -> f64 {
    let phases = profile.feasible_set.len().saturating_sub(1);
    let d_lo = profile.min_delta();
    schedule.n[..phases.min(schedule.n.len())]
        .iter()
        .map(|&nk| {
            let n = nk as f64;
            let reward = 2.0 * (-n * d_lo * d_lo / 8.0).exp();
            profile
                .delta_c
                .iter()
                .map(|&dc| 2.0 * (-n * dc * dc / 2.0).exp() + reward)
                .sum::<f64>()
        })
        .sum()
}

/// One factor of the ranking lower bound: the selection made at phase `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingFactor {
    pub k: usize,
    /// Open selections when the slot was filled.
    pub m_k: usize,
    /// Per-arm samples at that phase.
    pub n_k: u64,
    /// `mu(best empirical) - mu(rank-j empirical)` for `j = 2..m_k`.
    pub phi: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingBoundInput {
    pub factors: Vec<RankingFactor>,
}

impl RankingBoundInput {
    /// Collects one factor per filled slot of a successful trace. A slot
    /// filled by the last-pair shortcut contributes a factor with `m_k = 1`.
    pub fn from_trace(trace: &RunOutcome, reward_means: &[f64]) -> Result<Self> {
        if !trace.is_success() {
            return Err(Error::RankingNeedsSuccess);
        }
        let mut factors = Vec::new();
        for p in &trace.phases {
            let n_k = p
                .deactivated
                .and_then(|d| p.sample_counts.get(&d).copied())
                .unwrap_or(0);
            if p.decision == Decision::Accepted {
                let ranked = rank(&p.empirical_mean, &p.empirical_feasible)?;
                let top = reward_means[ranked.top()];
                let upto = p.m_k.min(ranked.len());
                let phi = (2..=upto)
                    .map(|j| top - reward_means[ranked.arm_at(j)])
                    .collect();
                factors.push(RankingFactor {
                    k: p.k,
                    m_k: p.m_k,
                    n_k,
                    phi,
                });
            }
            if p.exit == PhaseExit::LastPairShortcut {
                factors.push(RankingFactor {
                    k: p.k,
                    m_k: 1,
                    n_k,
                    phi: Vec::new(),
                });
            }
        }
        Ok(RankingBoundInput { factors })
    }
}

/// `prod_i max(0, 1 - (m_{k_i} - 1) exp(-n_{k_i} (min_j phi_{k_i}(j))^2))`.
pub fn ranking_lower_bound(input: &RankingBoundInput) -> Result<f64> {
    let mut bound = 1.0;
    for f in &input.factors {
        if f.m_k <= 1 || f.phi.is_empty() {
            continue;
        }
        let min_phi = f.phi.iter().copied().fold(f64::INFINITY, f64::min);
        if min_phi.is_nan() || min_phi <= 0.0 {
            return Err(Error::DegenerateRankingGap(format!(
                "phase {}: min phi = {min_phi}",
                f.k
            )));
        }
        let miss = (f.m_k - 1) as f64 * (-(f.n_k as f64) * min_phi * min_phi).exp();
        bound *= (1.0 - miss).max(0.0);
    }
    Ok(bound)
}
