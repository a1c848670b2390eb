//! The allocation-policy contract shared by every procedure in the crate.

use crate::history::ArmHistory;
use crate::rng::Stream;

/// Non-empty, duplicate-free, sorted set of arm indices to sample this round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolicyDecision {
    arms: Vec<usize>,
}

impl PolicyDecision {
    /// Builds a decision from arbitrary indices; sorts and removes duplicates.
    ///
    /// Panics if `arms` is empty.
    pub fn new(mut arms: Vec<usize>) -> Self {
        assert!(!arms.is_empty(), "a policy decision must name at least one arm");
        arms.sort_unstable();
        arms.dedup();
        Self { arms }
    }

    pub fn single(arm: usize) -> Self {
        Self { arms: vec![arm] }
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn len(&self) -> usize {
        self.arms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, arm: usize) -> bool {
        self.arms.binary_search(&arm).is_ok()
    }
}

/// A sequential allocation procedure.
///
/// The round driver first samples every arm `initial_pulls()` times, then
/// repeatedly asks for a decision and samples every arm it names. Single-pull
/// policies always return a singleton.
pub trait Policy: Send {
    /// Observations taken from each arm in the seeding round.
    fn initial_pulls(&self) -> usize {
        1
    }

    fn decide(&mut self, arms: &[ArmHistory], rng: &mut Stream) -> PolicyDecision;
}

/// Index of the largest value, ties going to the smallest index.
pub(crate) fn argmax(values: impl IntoIterator<Item = f64>) -> usize {
    let mut best = 0;
    let mut best_value = f64::NEG_INFINITY;
    for (k, v) in values.into_iter().enumerate() {
        if v > best_value {
            best = k;
            best_value = v;
        }
    }
    best
}
