//! The CSAR selection loop, its per-phase trace and the concentration-event
//! monitor.

mod csar;
mod trace;
mod zeta;

pub use csar::{choose_deactivation, empirical_gap, run_csar, PhaseChoice};
pub(crate) use trace::ArmStats;
pub use trace::{Algorithm, Decision, PhaseExit, PhaseRecord, RunOutcome, RunStatus};
pub use zeta::{check_zeta, ZetaChannel, ZetaReport, ZetaViolation};
