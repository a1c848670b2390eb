use super::driver::run_cell;
use super::roster::PolicySpec;
use super::scenario::Scenario;
use crate::env::{ArmModel, ArmSpec, RewardModel};
use crate::error::{Error, Result};
use crate::theory::{burnetas_katehakis_bound, lai_robbins_bound, ExponentialFamily, LowerBoundReport};

/// The common exponential family of a set of arms, if there is one:
/// all Bernoulli, or all normal with one shared standard deviation.
pub fn infer_family(models: &[ArmModel]) -> Option<ExponentialFamily> {
    let iid: Vec<&RewardModel> = models
        .iter()
        .map(|m| match m {
            ArmModel::Iid(r) => Some(r),
            ArmModel::Markov(_) => None,
        })
        .collect::<Option<_>>()?;
    match iid.first()? {
        RewardModel::Bernoulli { .. } => {
            iid.iter().all(|m| matches!(m, RewardModel::Bernoulli { .. })).then_some(ExponentialFamily::Bernoulli)
        }
        RewardModel::Normal { sd, .. } => iid
            .iter()
            .all(|m| matches!(m, RewardModel::Normal { sd: s, .. } if s == sd))
            .then_some(ExponentialFamily::Normal { sd: *sd }),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ScenarioBound {
    LaiRobbins { family: ExponentialFamily, report: LowerBoundReport },
    BurnetasKatehakis { report: LowerBoundReport },
    Unavailable { reason: String },
}

fn fixed_models(scenario: &Scenario) -> Result<&[ArmModel]> {
    match &scenario.arms {
        ArmSpec::Fixed(models) => Ok(models),
        ArmSpec::Sampled { .. } => Err(Error::InvalidScenario(format!(
            "{}: arm parameters are redrawn every replication",
            scenario.name
        ))),
    }
}

/// Asymptotic regret lower bound for a fixed-arm scenario at `horizon`.
pub fn scenario_bound(scenario: &Scenario, horizon: u64) -> Result<ScenarioBound> {
    let models = fixed_models(scenario)?;
    let means: Vec<f64> = models.iter().map(ArmModel::true_mean).collect();
    if let Some(family) = infer_family(models) {
        return Ok(ScenarioBound::LaiRobbins { family, report: lai_robbins_bound(family, &means, horizon)? });
    }
    let sds: Option<Vec<f64>> = models
        .iter()
        .map(|m| match m {
            ArmModel::Iid(RewardModel::Normal { sd, .. }) => Some(*sd),
            _ => None,
        })
        .collect();
    Ok(match sds {
        Some(sds) => ScenarioBound::BurnetasKatehakis { report: burnetas_katehakis_bound(&means, &sds, horizon)? },
        None => ScenarioBound::Unavailable {
            reason: "arms are not from a common exponential family or normal with unknown variances".into(),
        },
    })
}

/// Mean pulls of one inferior arm against the efficient limit.
#[derive(Debug, Clone, PartialEq)]
pub struct EfficiencyRow {
    pub arm: usize,
    pub horizon: usize,
    pub mean_pulls: f64,
    /// `mean_pulls / log N`.
    pub ratio: f64,
    /// `1 / D(f_k | f_*)`.
    pub limit: f64,
}

/// `E n_k / log N` of every inferior arm at each horizon in `grid`,
/// estimated from `replications` runs.
pub fn efficiency_diagnostic(
    scenario: &Scenario,
    spec: &PolicySpec,
    grid: &[usize],
    replications: usize,
) -> Result<Vec<EfficiencyRow>> {
    let models = fixed_models(scenario)?;
    let family = infer_family(models)
        .ok_or_else(|| Error::InvalidScenario(format!("{}: arms are not from one exponential family", scenario.name)))?;
    let means: Vec<f64> = models.iter().map(ArmModel::true_mean).collect();
    let bound = lai_robbins_bound(family, &means, 1)?;
    let mut run = scenario.clone();
    run.replications = replications;
    let mut rows = Vec::new();
    for &n in grid {
        run.horizons = vec![n];
        run.validate()?;
        let records = run_cell(&run, spec, n)?;
        for arm in &bound.arms {
            let mean_pulls =
                records.iter().map(|r| r.pull_counts[arm.arm] as f64).sum::<f64>() / records.len() as f64;
            rows.push(EfficiencyRow {
                arm: arm.arm,
                horizon: n,
                mean_pulls,
                ratio: mean_pulls / (n as f64).ln(),
                limit: arm.pulls_per_log_horizon(),
            });
        }
    }
    Ok(rows)
}
