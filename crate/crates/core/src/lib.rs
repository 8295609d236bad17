//! Identification of the top-`m` feasible arms of a constrained multi-armed
//! bandit under a fixed sampling budget.
//!
//! Each arm yields a reward and a cost in `[0, 1]`. An arm is feasible when
//! its mean cost is at most a threshold `tau`; the goal is the set of `m`
//! feasible arms with the largest mean rewards. The crate provides:
//!
//! - [`bandit`]: instances, arm laws, seeded sampling, ranking and the
//!   ground-truth gap quantities.
//! - [`schedule`]: the harmonic phase allocation of a budget `H`.
//! - [`engine`]: the constrained successive accept-or-reject (CSAR) loop
//!   with a full per-phase trace, and the concentration-event monitor.
//! - [`baselines`]: successive sample-average approximation and uniform
//!   allocation.
//! - [`analysis`]: closed-form misidentification and ranking bounds.
//! - [`harness`]: reproducible parallel Monte-Carlo sweeps and CSV output.
//!
//! Runnable walkthroughs live in `examples/` (`cargo run --example NAME`):
//! `point_mass_walkthrough`, `schedule`, `bounds`, `tolerances`,
//! `baselines`, `zeta_monitor`, `ranking_bound` and `decay_sweep`.
//!
//! ```
//! use csar::bandit::{BanditInstance, RandomStream};
//! use csar::engine::run_csar;
//! use csar::schedule::make_schedule;
//!
//! let inst = BanditInstance::point_masses(&[0.5, 0.8, 0.99], &[0.2, 0.4, 0.9], 0.5, 1)?;
//! let schedule = make_schedule(inst.num_arms(), 100)?;
//! let out = run_csar(&inst, &schedule, &mut RandomStream::new(7))?;
//! assert_eq!(out.selections, vec![Some(1)]);
//! # Ok::<(), csar::Error>(())
//! ```

pub mod analysis;
pub mod bandit;
pub mod baselines;
pub mod engine;
mod error;
pub mod harness;
pub mod schedule;

pub use error::{Error, Result};

/// Zero-based arm index; also the tie-break order.
pub type ArmId = usize;
