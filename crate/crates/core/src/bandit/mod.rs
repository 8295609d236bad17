//! Constrained bandit instances: arm laws, seeded sampling, ranking and
//! ground-truth gap quantities.

mod distribution;
mod instance;
mod profile;
mod rank;

pub use distribution::ArmDistribution;
pub use instance::{Arm, BanditInstance, InstanceSpec, RandomStream, SampleDraw};
pub use profile::{ground_truth, ComplexityProfile};
pub use rank::{rank, RankMap};
