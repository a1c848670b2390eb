use super::roster::PolicySpec;
use super::scenario::Scenario;
use crate::env::{ArmModel, ArmSource, ArmSpec};
use crate::error::{Error, Result};
use crate::history::ArmHistory;
use crate::regret::RegretRecord;
use crate::rng::{RandomnessContract, ARM_PARAMS};
use rayon::prelude::*;

pub fn reward_label(policy: &str, arm: usize) -> String {
    format!("rewards/{policy}/{arm}")
}

pub fn policy_label(policy: &str) -> String {
    format!("policy/{policy}")
}

pub fn truncation_label(policy: &str) -> String {
    format!("truncation/{policy}")
}

/// Runs one replication of `spec` for exactly `horizon` pulls.
///
/// Arm parameters come from the replication's `arm-params` stream and are
/// therefore shared by every policy; rewards, policy randomization and
/// truncation each use their own per-policy stream.
pub fn run_replication(
    arms: &ArmSpec,
    spec: &PolicySpec,
    horizon: usize,
    replication: u64,
    contract: RandomnessContract,
) -> Result<RegretRecord> {
    let models = arms.realize(&mut contract.stream(replication, ARM_PARAMS));
    run_with_models(&models, spec, horizon, replication, contract)
}

pub(crate) fn run_with_models(
    models: &[ArmModel],
    spec: &PolicySpec,
    horizon: usize,
    replication: u64,
    contract: RandomnessContract,
) -> Result<RegretRecord> {
    let k = models.len();
    let label = spec.label();
    let mut policy = spec.build(horizon)?;
    let warm = policy.initial_pulls();
    if horizon < k * warm {
        return Err(Error::InvalidScenario(format!("horizon {horizon} below {k} arms x warm start {warm}")));
    }
    let mut sources: Vec<ArmSource> = models
        .iter()
        .enumerate()
        .map(|(i, m)| ArmSource::new(m.clone(), contract.stream(replication, &reward_label(&label, i))))
        .collect();
    let mut policy_rng = contract.stream(replication, &policy_label(&label));
    let mut truncation_rng = contract.stream(replication, &truncation_label(&label));

    let mut histories: Vec<ArmHistory> = (0..k).map(|_| ArmHistory::with_capacity(horizon)).collect();
    for _ in 0..warm {
        for (h, src) in histories.iter_mut().zip(&mut sources) {
            h.record(src.next_reward());
        }
    }
    let mut total = k * warm;
    while total < horizon {
        let decision = policy.decide(&histories, &mut policy_rng);
        let chosen = decision.arms();
        let remaining = horizon - total;
        if chosen.len() <= remaining {
            for &a in chosen {
                histories[a].record(sources[a].next_reward());
            }
            total += chosen.len();
        } else {
            // Sample `remaining` of the recommended arms uniformly.
            let mut picks: Vec<usize> = rand::seq::index::sample(&mut truncation_rng, chosen.len(), remaining)
                .into_iter()
                .map(|i| chosen[i])
                .collect();
            picks.sort_unstable();
            for a in picks {
                histories[a].record(sources[a].next_reward());
            }
            total = horizon;
        }
    }
    let means = models.iter().map(ArmModel::true_mean).collect();
    let counts = histories.iter().map(ArmHistory::count).collect();
    Ok(RegretRecord::new(means, counts, replication))
}

/// All replications of one (policy, horizon) cell, in replication order.
pub fn run_cell(scenario: &Scenario, spec: &PolicySpec, horizon: usize) -> Result<Vec<RegretRecord>> {
    let contract = RandomnessContract::new(scenario.seed);
    let work = || {
        (0..scenario.replications as u64)
            .into_par_iter()
            .map(|r| run_replication(&scenario.arms, spec, horizon, r, contract))
            .collect::<Result<Vec<_>>>()
    };
    match scenario.threads {
        None => work(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidScenario(format!("thread pool: {e}")))?
            .install(work),
    }
}
