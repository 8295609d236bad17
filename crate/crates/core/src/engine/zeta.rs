use serde::{Deserialize, Serialize};

use super::trace::RunOutcome;
use crate::bandit::ComplexityProfile;
use crate::ArmId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaChannel {
    Cost,
    Reward,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZetaViolation {
    pub k: usize,
    pub arm: ArmId,
    pub channel: ZetaChannel,
    /// `|estimate - truth|`; infinite for an arm without samples.
    pub deviation: f64,
    pub allowed: f64,
}

/// Result of checking the concentration event on one recorded run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZetaReport {
    pub holds: bool,
    pub violations: Vec<ZetaViolation>,
    /// The run stopped before phase `|A_f| - 1`; only recorded phases were checked.
    pub truncated: bool,
}

/// Checks, phase by phase for `k = 1..|A_f| - 1`, that every active arm's
/// empirical cost is within `delta_c(a) / 2` of `C(a)` and that every
/// empirically feasible arm's empirical reward is within a quarter of the
/// largest true gap over that phase's empirically feasible set.
pub fn check_zeta(trace: &RunOutcome, profile: &ComplexityProfile) -> ZetaReport {
    let horizon = profile.feasible_set.len().saturating_sub(1);
    let mut violations = Vec::new();
    for phase in trace.phases.iter().take_while(|p| p.k <= horizon) {
        for &a in &phase.active_set {
            let allowed = profile.delta_c[a] / 2.0;
            let deviation = phase
                .empirical_cost
                .get(&a)
                .map_or(f64::INFINITY, |c| (c - profile.cost_means[a]).abs());
            if deviation > allowed {
                violations.push(ZetaViolation {
                    k: phase.k,
                    arm: a,
                    channel: ZetaChannel::Cost,
                    deviation,
                    allowed,
                });
            }
        }
        if let Some(max_gap) = profile.max_delta_over(&phase.empirical_feasible) {
            let allowed = max_gap / 4.0;
            for &a in &phase.empirical_feasible {
                let deviation = phase
                    .empirical_mean
                    .get(&a)
                    .map_or(f64::INFINITY, |m| (m - profile.reward_means[a]).abs());
                if deviation > allowed {
                    violations.push(ZetaViolation {
                        k: phase.k,
                        arm: a,
                        channel: ZetaChannel::Reward,
                        deviation,
                        allowed,
                    });
                }
            }
        }
    }
    ZetaReport {
        holds: violations.is_empty(),
        violations,
        truncated: trace.phases.len() < horizon,
    }
}
