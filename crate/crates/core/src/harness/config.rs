use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::bandit::{ground_truth, BanditInstance, ComplexityProfile, InstanceSpec};
use crate::engine::Algorithm;
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerance {
    #[serde(default)]
    pub epsilon: f64,
    #[serde(default)]
    pub delta_tol: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Outputs {
    #[serde(default)]
    pub csv: Option<PathBuf>,
    /// Directory for one JSON trace per trial.
    #[serde(default)]
    pub traces: Option<PathBuf>,
}

/// Experiment description, read from a JSON file.
///
/// ```json
/// {
///   "schema_version": 1,
///   "instance": {"tau": 0.5, "m": 1, "arms": [
///     {"reward": {"kind": "bernoulli", "p": 0.9}, "cost": {"kind": "bernoulli", "p": 0.2}},
///     {"reward": {"kind": "bernoulli", "p": 0.6}, "cost": {"kind": "bernoulli", "p": 0.3}}
///   ]},
///   "algorithms": ["csar", "successive_saa"],
///   "horizons": [200, 400],
///   "trials": 1000,
///   "master_seed": 42
/// }
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub schema_version: u32,
    pub instance: InstanceSpec,
    pub algorithms: Vec<Algorithm>,
    pub horizons: Vec<u64>,
    pub trials: u64,
    pub master_seed: u64,
    #[serde(default)]
    pub tolerance: Tolerance,
    #[serde(default)]
    pub outputs: Outputs,
    #[serde(default)]
    pub zeta_monitor: bool,
    #[serde(default)]
    pub rank_monitor: bool,
}

/// A config that passed validation, with its derived ground truth.
#[derive(Debug, Clone)]
pub struct ValidatedConfig {
    pub config: ExperimentConfig,
    pub instance: BanditInstance,
    pub profile: ComplexityProfile,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::config("<root>", e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Checks every field and computes the ground truth. Errors name the
    /// offending field path.
    pub fn validate(&self) -> Result<ValidatedConfig> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::config(
                "schema_version",
                format!(
                    "unsupported version {} (expected {SCHEMA_VERSION})",
                    self.schema_version
                ),
            ));
        }
        for (i, arm) in self.instance.arms.iter().enumerate() {
            arm.reward
                .validate()
                .map_err(|e| Error::config(format!("instance.arms[{i}].reward"), e.to_string()))?;
            arm.cost
                .validate()
                .map_err(|e| Error::config(format!("instance.arms[{i}].cost"), e.to_string()))?;
        }
        let instance = BanditInstance::try_from(self.instance.clone())
            .map_err(|e| Error::config("instance", e.to_string()))?;
        let profile = ground_truth(&instance, self.tolerance.epsilon, self.tolerance.delta_tol)
            .map_err(|e| {
                let path = match e {
                    Error::InvalidTolerance(_) | Error::DegenerateInstance(_) => "tolerance",
                    _ => "instance",
                };
                Error::config(path, e.to_string())
            })?;

        if self.algorithms.is_empty() {
            return Err(Error::config(
                "algorithms",
                "at least one algorithm is required",
            ));
        }
        for (i, a) in self.algorithms.iter().enumerate() {
            if self.algorithms[..i].contains(a) {
                return Err(Error::config(
                    format!("algorithms[{i}]"),
                    format!("duplicate `{a}`"),
                ));
            }
        }
        if self.horizons.is_empty() {
            return Err(Error::config(
                "horizons",
                "at least one horizon is required",
            ));
        }
        let k = instance.num_arms() as u64;
        let saa_min = k * instance.m() as u64;
        for (i, &h) in self.horizons.iter().enumerate() {
            if self.horizons[..i].contains(&h) {
                return Err(Error::config(
                    format!("horizons[{i}]"),
                    format!("duplicate {h}"),
                ));
            }
            if h < k {
                return Err(Error::config(
                    format!("horizons[{i}]"),
                    format!("{h} is below the arm count {k}"),
                ));
            }
            if self.algorithms.contains(&Algorithm::SuccessiveSaa) && h < saa_min {
                return Err(Error::config(
                    format!("horizons[{i}]"),
                    format!("{h} is below m * |A| = {saa_min} required by successive_saa"),
                ));
            }
        }
        if self.trials == 0 {
            return Err(Error::config("trials", "must be at least 1"));
        }
        Ok(ValidatedConfig {
            config: self.clone(),
            instance,
            profile,
        })
    }
}
