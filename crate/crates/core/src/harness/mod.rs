//! Seeded Monte-Carlo experiments over horizon grids, with CSV output.

mod config;
mod csv_io;
mod runner;
mod seed;

pub use config::{ExperimentConfig, Outputs, Tolerance, ValidatedConfig, SCHEMA_VERSION};
pub use csv_io::{emit_csv, read_csv, write_csv, CSV_HEADER};
pub use runner::{run_experiment, run_trial, TrialAggregate};
pub use seed::derive_trial_seed;
