//! Subsample-comparison bandit policies, baselines, reward environments,
//! theory verifiers and an experiment harness.

pub mod baseline;
pub mod env;
pub mod error;
pub mod harness;
pub mod history;
pub mod policy;
pub mod regret;
pub mod rng;
pub mod subsample;
pub mod theory;

pub use error::{Error, Result};
pub use history::ArmHistory;
pub use policy::{Policy, PolicyDecision};
pub use regret::{empirical_regret, RegretRecord};
pub use rng::{RandomnessContract, Stream};
