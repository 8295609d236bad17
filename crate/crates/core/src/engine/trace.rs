use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bandit::ComplexityProfile;
use crate::ArmId;

/// Selection algorithms the crate can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Csar,
    SuccessiveSaa,
    UniformTopM,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [
        Algorithm::Csar,
        Algorithm::SuccessiveSaa,
        Algorithm::UniformTopM,
    ];

    /// Stable numeric id used in trial seed derivation.
    pub fn id(self) -> u64 {
        match self {
            Algorithm::Csar => 0,
            Algorithm::SuccessiveSaa => 1,
            Algorithm::UniformTopM => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Csar => "csar",
            Algorithm::SuccessiveSaa => "successive_saa",
            Algorithm::UniformTopM => "uniform_top_m",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                format!("unknown algorithm `{s}` (expected csar, successive_saa or uniform_top_m)")
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Accepted,
    Rejected,
    /// No arm looked feasible; the most infeasible-looking arm was removed.
    ForcedInfeasibleEviction,
    /// Baseline phase that could not select anything.
    NoSelection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseExit {
    None,
    AllAccepted,
    LastPairShortcut,
}

/// Everything observed and decided during one phase.
///
/// Empirical quantities are cumulative over all samples of an arm so far.
/// Arms that have not been sampled are absent from `empirical_cost`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseRecord {
    pub k: usize,
    pub active_set: Vec<ArmId>,
    pub sample_counts: BTreeMap<ArmId, u64>,
    pub empirical_cost: BTreeMap<ArmId, f64>,
    pub empirical_feasible: Vec<ArmId>,
    pub empirical_mean: BTreeMap<ArmId, f64>,
    pub empirical_gap: BTreeMap<ArmId, f64>,
    /// Selections still open when the phase began.
    pub m_k: usize,
    pub deactivated: Option<ArmId>,
    pub decision: Decision,
    pub exit: PhaseExit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RunStatus {
    Success,
    Fail,
}

/// Result of one run together with its full phase trace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunOutcome {
    pub algorithm: Algorithm,
    pub status: RunStatus,
    /// `T_1..T_m`; `None` marks an unfilled slot.
    pub selections: Vec<Option<ArmId>>,
    pub phases: Vec<PhaseRecord>,
    pub total_pulls: u64,
}

impl RunOutcome {
    pub(crate) fn finish(
        algorithm: Algorithm,
        selections: Vec<Option<ArmId>>,
        phases: Vec<PhaseRecord>,
        total_pulls: u64,
    ) -> Self {
        let status = if selections.iter().all(Option::is_some) {
            RunStatus::Success
        } else {
            RunStatus::Fail
        };
        RunOutcome {
            algorithm,
            status,
            selections,
            phases,
            total_pulls,
        }
    }

    pub fn is_success(&self) -> bool {
        self.status == RunStatus::Success
    }

    /// Selected arms, sorted, when every slot is filled.
    pub fn selected_set(&self) -> Option<Vec<ArmId>> {
        let mut v: Option<Vec<ArmId>> = self.selections.iter().copied().collect();
        if let Some(v) = v.as_mut() {
            v.sort_unstable();
        }
        v
    }

    /// Whether the selections equal the true top-`m` feasible set. A failed
    /// run is never correct.
    pub fn is_correct(&self, profile: &ComplexityProfile) -> bool {
        self.selected_set() == Some(profile.top_m_sorted())
    }

    /// Whether `mu(T_1) > mu(T_2) > ... > mu(T_m)` for a successful run.
    pub fn is_ranked_correctly(&self, reward_means: &[f64]) -> bool {
        match self.selections.iter().copied().collect::<Option<Vec<_>>>() {
            Some(sel) => sel
                .windows(2)
                .all(|w| reward_means[w[0]] > reward_means[w[1]]),
            None => false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct ArmStats {
    pub reward_sum: f64,
    pub cost_sum: f64,
    pub count: u64,
}

impl ArmStats {
    pub fn mean_reward(&self) -> Option<f64> {
        (self.count > 0).then(|| self.reward_sum / self.count as f64)
    }

    pub fn mean_cost(&self) -> Option<f64> {
        (self.count > 0).then(|| self.cost_sum / self.count as f64)
    }
}
