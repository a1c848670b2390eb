//! Reward generators and exact arm means.

mod arms;
mod markov;

pub use arms::{ArmSampler, ArmSpec};
pub use markov::{doeblin_margins, markov_sample_path, markov_state_path, stationary_distribution, MarkovRewardModel};

use crate::error::{Error, Result};
use crate::rng::Stream;
use rand::Rng;
use rand_distr::{Distribution, Exp, Normal, Poisson};

/// I.i.d. reward distributions.
#[derive(Debug, Clone, PartialEq)]
pub enum RewardModel {
    Bernoulli { p: f64 },
    Normal { mean: f64, sd: f64 },
    /// Density `exp(−|y − location| / scale) / (2 scale)`.
    DoubleExponential { location: f64, scale: f64 },
    /// `min(X / 10, 1)` with `X ~ Exp(rate)`.
    TruncatedExponential { rate: f64 },
    /// `min(X / 10, 1)` with `X ~ Poisson(rate)`.
    TruncatedPoisson { rate: f64 },
    Uniform { low: f64, high: f64 },
}

impl RewardModel {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Self::Bernoulli { p } => (0.0..=1.0).contains(&p),
            Self::Normal { mean, sd } => mean.is_finite() && sd > 0.0 && sd.is_finite(),
            Self::DoubleExponential { location, scale } => location.is_finite() && scale > 0.0 && scale.is_finite(),
            Self::TruncatedExponential { rate } | Self::TruncatedPoisson { rate } => rate > 0.0 && rate.is_finite(),
            Self::Uniform { low, high } => low.is_finite() && high.is_finite() && low < high,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{self:?}")))
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match *self {
            Self::Bernoulli { p } => {
                if rng.random::<f64>() < p {
                    1.0
                } else {
                    0.0
                }
            }
            Self::Normal { mean, sd } => Normal::new(mean, sd).expect("validated").sample(rng),
            Self::DoubleExponential { location, scale } => {
                // Inverse CDF on u ∈ (−1/2, 1/2).
                let u = rng.random::<f64>() - 0.5;
                location - scale * u.signum() * (1.0 - 2.0 * u.abs()).ln()
            }
            Self::TruncatedExponential { rate } => {
                let x: f64 = Exp::new(rate).expect("validated").sample(rng);
                (x / 10.0).min(1.0)
            }
            Self::TruncatedPoisson { rate } => {
                let x: f64 = Poisson::new(rate).expect("validated").sample(rng);
                (x / 10.0).min(1.0)
            }
            Self::Uniform { low, high } => rng.random_range(low..high),
        }
    }

    pub fn true_mean(&self) -> f64 {
        match *self {
            Self::Bernoulli { p } => p,
            Self::Normal { mean, .. } => mean,
            Self::DoubleExponential { location, .. } => location,
            // E min(X/10, 1) = ∫_0^10 P(X > x) dx / 10
            Self::TruncatedExponential { rate } => (1.0 - (-10.0 * rate).exp()) / (10.0 * rate),
            Self::TruncatedPoisson { rate } => {
                let mut pmf = (-rate).exp();
                let mut mean = 0.0;
                let mut below = 0.0;
                for x in 0..10 {
                    mean += x as f64 / 10.0 * pmf;
                    below += pmf;
                    pmf *= rate / (x + 1) as f64;
                }
                mean + (1.0 - below)
            }
            Self::Uniform { low, high } => 0.5 * (low + high),
        }
    }

    pub fn stddev(&self) -> f64 {
        match *self {
            Self::Bernoulli { p } => (p * (1.0 - p)).sqrt(),
            Self::Normal { sd, .. } => sd,
            Self::DoubleExponential { scale, .. } => scale * 2f64.sqrt(),
            Self::Uniform { low, high } => (high - low) / 12f64.sqrt(),
            Self::TruncatedExponential { .. } | Self::TruncatedPoisson { .. } => {
                let m = self.true_mean();
                (self.second_moment() - m * m).max(0.0).sqrt()
            }
        }
    }

    fn second_moment(&self) -> f64 {
        match *self {
            Self::TruncatedExponential { rate } => {
                // E min(X/10,1)^2 = ∫_0^1 2y P(X > 10y) dy
                let a = 10.0 * rate;
                2.0 * (1.0 - (1.0 + a) * (-a).exp()) / (a * a)
            }
            Self::TruncatedPoisson { rate } => {
                let mut pmf = (-rate).exp();
                let mut acc = 0.0;
                let mut below = 0.0;
                for x in 0..10 {
                    acc += (x as f64 / 10.0).powi(2) * pmf;
                    below += pmf;
                    pmf *= rate / (x + 1) as f64;
                }
                acc + (1.0 - below)
            }
            _ => {
                let (m, s) = (self.true_mean(), self.stddev());
                s * s + m * m
            }
        }
    }
}

/// An arm: i.i.d. rewards or rewards emitted along a Markov chain.
#[derive(Debug, Clone, PartialEq)]
pub enum ArmModel {
    Iid(RewardModel),
    Markov(MarkovRewardModel),
}

impl From<RewardModel> for ArmModel {
    fn from(m: RewardModel) -> Self {
        Self::Iid(m)
    }
}

impl ArmModel {
    pub fn true_mean(&self) -> f64 {
        match self {
            Self::Iid(m) => m.true_mean(),
            Self::Markov(m) => m.true_mean(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Iid(m) => m.validate(),
            Self::Markov(_) => Ok(()),
        }
    }
}

/// A stateful reward stream for one arm within one replication.
#[derive(Debug, Clone)]
pub struct ArmSource {
    model: ArmModel,
    state: Option<usize>,
    rng: Stream,
}

impl ArmSource {
    pub fn new(model: ArmModel, rng: Stream) -> Self {
        Self { model, state: None, rng }
    }

    pub fn next_reward(&mut self) -> f64 {
        match &self.model {
            ArmModel::Iid(m) => m.sample(&mut self.rng),
            ArmModel::Markov(m) => {
                let s = match self.state {
                    None => m.initial_state(&mut self.rng),
                    Some(s) => m.step(s, &mut self.rng),
                };
                self.state = Some(s);
                m.emit(s, &mut self.rng)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn rng(seed: u64) -> Stream {
        Stream::seed_from_u64(seed)
    }

    fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for i in 1..n {
            s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * h / 3.0
    }

    #[test]
    fn degenerate_bernoulli() {
        let mut r = rng(0);
        let m = RewardModel::Bernoulli { p: 1.0 };
        assert!((0..1000).all(|_| m.sample(&mut r) == 1.0));
    }

    #[test]
    fn uniform_support_and_mean() {
        let mut r = rng(1);
        let m = RewardModel::Uniform { low: 0.2, high: 0.4 };
        let ys: Vec<f64> = (0..10_000).map(|_| m.sample(&mut r)).collect();
        assert!(ys.iter().all(|y| (0.2..=0.4).contains(y)));
        let mean = ys.iter().sum::<f64>() / 1e4;
        assert!((mean - 0.3).abs() < 3.0 * (0.2 / 12f64.sqrt()) / 100.0);
    }

    #[test]
    fn double_exponential_tail() {
        let mut r = rng(2);
        let m = RewardModel::DoubleExponential { location: 0.0, scale: 1.0 };
        let n = 100_000;
        let hits = (0..n).filter(|_| m.sample(&mut r).abs() > 2.0).count();
        let p = (-2f64).exp();
        assert!((hits as f64 / n as f64 - p).abs() < 3.0 * (p * (1.0 - p) / n as f64).sqrt());
    }

    #[test]
    fn truncated_exponential_mean_by_quadrature() {
        for rate in [1.0, 0.5, 0.2] {
            let m = RewardModel::TruncatedExponential { rate };
            let oracle = simpson(|x| x / 10.0 * rate * (-rate * x).exp(), 0.0, 10.0, 20_000) + (-10.0 * rate).exp();
            assert!((m.true_mean() - oracle).abs() < 1e-10, "{rate}");
        }
        assert!((RewardModel::TruncatedExponential { rate: 1.0 }.true_mean() - 0.099_995_46).abs() < 1e-8);
    }

    #[test]
    fn truncated_poisson_mean_by_series() {
        let rate: f64 = 0.5 + 1.0 / 3.0;
        let mut oracle = 0.0;
        let mut tail = 0.0;
        let mut fact = 1.0;
        for x in 0..200 {
            if x > 0 {
                fact *= x as f64;
            }
            let p = (-rate).exp() * rate.powi(x) / fact;
            if x < 10 {
                oracle += x as f64 / 10.0 * p;
            } else {
                tail += p;
            }
        }
        oracle += tail;
        let m = RewardModel::TruncatedPoisson { rate };
        assert!((m.true_mean() - oracle).abs() < 1e-12);
    }

    #[test]
    fn empirical_means_within_four_standard_errors() {
        let models = [
            RewardModel::Bernoulli { p: 0.3 },
            RewardModel::Normal { mean: 1.8, sd: 0.5 },
            RewardModel::DoubleExponential { location: -0.4, scale: 2.0 },
            RewardModel::TruncatedExponential { rate: 0.25 },
            RewardModel::TruncatedPoisson { rate: 2.5 },
            RewardModel::Uniform { low: 0.0, high: 1.0 },
        ];
        for (i, m) in models.iter().enumerate() {
            let mut r = rng(10 + i as u64);
            let n = 1_000_000;
            let mean = (0..n).map(|_| m.sample(&mut r)).sum::<f64>() / n as f64;
            let se = m.stddev() / (n as f64).sqrt();
            assert!((mean - m.true_mean()).abs() < 4.0 * se, "{m:?}: {mean}");
        }
    }

    #[test]
    fn truncated_rewards_in_unit_interval() {
        let mut r = rng(3);
        for m in [RewardModel::TruncatedExponential { rate: 0.1 }, RewardModel::TruncatedPoisson { rate: 9.0 }] {
            assert!((0..20_000).map(|_| m.sample(&mut r)).all(|y| (0.0..=1.0).contains(&y)));
        }
    }

    #[test]
    fn parameter_domains() {
        assert!(RewardModel::Bernoulli { p: 1.2 }.validate().is_err());
        assert!(RewardModel::Normal { mean: 0.0, sd: 0.0 }.validate().is_err());
        assert!(RewardModel::Uniform { low: 1.0, high: 1.0 }.validate().is_err());
        assert!(RewardModel::TruncatedPoisson { rate: -1.0 }.validate().is_err());
        assert!(RewardModel::DoubleExponential { location: 0.0, scale: 1.0 }.validate().is_ok());
    }
}
