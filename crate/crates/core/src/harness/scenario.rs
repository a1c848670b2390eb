use super::roster::PolicySpec;
use crate::env::{ArmModel, ArmSampler, ArmSpec, MarkovRewardModel, RewardModel};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Everything needed to run an experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub arms: ArmSpec,
    pub horizons: Vec<usize>,
    pub replications: usize,
    pub policies: Vec<PolicySpec>,
    pub seed: u64,
    /// Left edges of the regret histogram bins; the last bin is open-ended.
    pub bin_edges: Vec<f64>,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

pub const DEFAULT_SEED: u64 = 20_240_917;
pub const DEFAULT_REPLICATIONS: usize = 1000;

impl Scenario {
    pub fn arm_count(&self) -> usize {
        self.arms.arm_count()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidScenario(format!("{}: {m}", self.name)));
        let k = self.arm_count();
        if k == 0 {
            return bad("no arms".into());
        }
        self.arms.validate()?;
        if self.horizons.is_empty() {
            return bad("no horizons".into());
        }
        if self.replications == 0 {
            return bad("replication count must be at least 1".into());
        }
        if self.policies.is_empty() {
            return bad("empty policy roster".into());
        }
        if self.threads == Some(0) {
            return bad("thread count must be at least 1".into());
        }
        if self.bin_edges.is_empty() || self.bin_edges.windows(2).any(|w| !(w[0] < w[1])) {
            return bad("bin edges must be non-empty and strictly increasing".into());
        }
        for p in &self.policies {
            p.validate()?;
            for &n in &self.horizons {
                if n < k * p.warm_start() {
                    return bad(format!("horizon {n} below {k} arms x warm start {} for {p}", p.warm_start()));
                }
            }
        }
        Ok(())
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let config: ScenarioConfig = toml::from_str(text)?;
        let scenario = config.into_scenario()?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }
}

// ----- configuration file schema -----

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioConfig {
    name: String,
    horizons: Vec<usize>,
    #[serde(default = "default_replications")]
    replications: usize,
    #[serde(default = "default_seed")]
    seed: u64,
    #[serde(default = "default_edges")]
    bin_edges: Vec<f64>,
    #[serde(default)]
    threads: Option<usize>,
    arms: ArmsConfig,
    policies: Vec<PolicySpec>,
}

fn default_replications() -> usize {
    DEFAULT_REPLICATIONS
}

fn default_seed() -> u64 {
    DEFAULT_SEED
}

fn default_edges() -> Vec<f64> {
    vec![0.0]
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
enum ArmsConfig {
    Fixed(Vec<ModelConfig>),
    Sampled { count: usize, sampler: SamplerConfig },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case", deny_unknown_fields)]
enum ModelConfig {
    Bernoulli { p: f64 },
    Normal { mean: f64, sd: f64 },
    DoubleExponential { location: f64, scale: f64 },
    TruncatedExponential { rate: f64 },
    TruncatedPoisson { rate: f64 },
    Uniform { low: f64, high: f64 },
    Markov { transition: Vec<Vec<f64>>, emissions: Vec<ModelConfig> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case", deny_unknown_fields)]
enum SamplerConfig {
    NormalMeans {
        #[serde(default = "unit")]
        sd: f64,
    },
    NormalMeansExpPrecision,
    DoubleExponentialMeans { scale: f64 },
}

fn unit() -> f64 {
    1.0
}

impl ModelConfig {
    fn into_reward_model(self) -> Result<RewardModel> {
        let m = match self {
            Self::Bernoulli { p } => RewardModel::Bernoulli { p },
            Self::Normal { mean, sd } => RewardModel::Normal { mean, sd },
            Self::DoubleExponential { location, scale } => RewardModel::DoubleExponential { location, scale },
            Self::TruncatedExponential { rate } => RewardModel::TruncatedExponential { rate },
            Self::TruncatedPoisson { rate } => RewardModel::TruncatedPoisson { rate },
            Self::Uniform { low, high } => RewardModel::Uniform { low, high },
            Self::Markov { .. } => {
                return Err(Error::InvalidScenario("Markov emissions must be i.i.d. models".into()));
            }
        };
        m.validate()?;
        Ok(m)
    }

    fn into_arm_model(self) -> Result<ArmModel> {
        match self {
            Self::Markov { transition, emissions } => {
                let emissions = emissions.into_iter().map(Self::into_reward_model).collect::<Result<_>>()?;
                Ok(ArmModel::Markov(MarkovRewardModel::new(transition, emissions)?))
            }
            other => Ok(ArmModel::Iid(other.into_reward_model()?)),
        }
    }
}

impl ScenarioConfig {
    fn into_scenario(self) -> Result<Scenario> {
        let arms = match self.arms {
            ArmsConfig::Fixed(models) => {
                ArmSpec::Fixed(models.into_iter().map(ModelConfig::into_arm_model).collect::<Result<_>>()?)
            }
            ArmsConfig::Sampled { count, sampler } => ArmSpec::Sampled {
                count,
                sampler: match sampler {
                    SamplerConfig::NormalMeans { sd } => ArmSampler::NormalMeans { sd },
                    SamplerConfig::NormalMeansExpPrecision => ArmSampler::NormalMeansExpPrecision,
                    SamplerConfig::DoubleExponentialMeans { scale } => ArmSampler::DoubleExponentialMeans { scale },
                },
            },
        };
        Ok(Scenario {
            name: self.name,
            arms,
            horizons: self.horizons,
            replications: self.replications,
            policies: self.policies,
            seed: self.seed,
            bin_edges: self.bin_edges,
            threads: self.threads,
        })
    }
}
