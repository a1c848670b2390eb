use super::{ArmModel, RewardModel};
use crate::error::{Error, Result};
use crate::rng::Stream;
use rand_distr::{Distribution, Exp1, StandardNormal};

/// Rules drawing fresh arm parameters for every replication.
#[derive(Debug, Clone, PartialEq)]
pub enum ArmSampler {
    /// `μ_k ~ N(0,1)`, rewards `N(μ_k, sd²)`.
    NormalMeans { sd: f64 },
    /// `μ_k ~ N(0,1)` and `σ_k^{-2} ~ Exp(1)`, rewards `N(μ_k, σ_k²)`.
    NormalMeansExpPrecision,
    /// `μ_k ~ N(0,1)`, double exponential rewards with the given scale.
    DoubleExponentialMeans { scale: f64 },
}

impl ArmSampler {
    /// Draws all means first, then any per-arm scale parameters.
    pub fn draw(&self, count: usize, rng: &mut Stream) -> Vec<ArmModel> {
        let means: Vec<f64> = (0..count).map(|_| StandardNormal.sample(rng)).collect();
        match *self {
            Self::NormalMeans { sd } => means.into_iter().map(|mean| RewardModel::Normal { mean, sd }.into()).collect(),
            Self::NormalMeansExpPrecision => means
                .into_iter()
                .map(|mean| {
                    let precision: f64 = Exp1.sample(rng);
                    RewardModel::Normal { mean, sd: precision.sqrt().recip() }.into()
                })
                .collect(),
            Self::DoubleExponentialMeans { scale } => means
                .into_iter()
                .map(|location| RewardModel::DoubleExponential { location, scale }.into())
                .collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Self::NormalMeans { sd } => sd > 0.0 && sd.is_finite(),
            Self::NormalMeansExpPrecision => true,
            Self::DoubleExponentialMeans { scale } => scale > 0.0 && scale.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{self:?}")))
        }
    }
}

/// The arms of a scenario: fixed, or redrawn every replication.
#[derive(Debug, Clone, PartialEq)]
pub enum ArmSpec {
    Fixed(Vec<ArmModel>),
    Sampled { count: usize, sampler: ArmSampler },
}

impl ArmSpec {
    pub fn arm_count(&self) -> usize {
        match self {
            Self::Fixed(arms) => arms.len(),
            Self::Sampled { count, .. } => *count,
        }
    }

    pub fn is_fixed(&self) -> bool {
        matches!(self, Self::Fixed(_))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Fixed(arms) => arms.iter().try_for_each(ArmModel::validate),
            Self::Sampled { sampler, .. } => sampler.validate(),
        }
    }

    /// Arms for one replication. `rng` must be the replication's
    /// parameter stream; fixed specs leave it untouched.
    pub fn realize(&self, rng: &mut Stream) -> Vec<ArmModel> {
        match self {
            Self::Fixed(arms) => arms.clone(),
            Self::Sampled { count, sampler } => sampler.draw(*count, rng),
        }
    }
}
