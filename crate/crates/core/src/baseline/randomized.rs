use crate::error::{Error, Result};
use crate::history::ArmHistory;
use crate::policy::{argmax, Policy, PolicyDecision};
use crate::rng::Stream;
use rand::Rng;
use rand_distr::{Beta, Distribution};

/// Exploration probability at step `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EpsilonSchedule {
    Fixed(f64),
    /// `ε_n = min(1, numerator / n)`.
    Inverse { numerator: f64 },
}

impl EpsilonSchedule {
    /// `min(1, cK / (d² n))` with `0 < d ≤` the smallest gap.
    pub fn gap_scaled(c: f64, arms: usize, d: f64) -> Self {
        Self::Inverse {
            numerator: c * arms as f64 / (d * d),
        }
    }

    /// `min(1, 3c / n)`.
    pub fn three_c(c: f64) -> Self {
        Self::Inverse { numerator: 3.0 * c }
    }

    pub fn epsilon(&self, n: usize) -> f64 {
        match *self {
            Self::Fixed(e) => e.clamp(0.0, 1.0),
            Self::Inverse { numerator } => (numerator / n.max(1) as f64).min(1.0),
        }
    }
}

/// With probability `ε_n` a uniform arm, otherwise the largest mean.
pub fn epsilon_greedy_step<R: Rng + ?Sized>(means: &[f64], n: usize, schedule: &EpsilonSchedule, rng: &mut R) -> usize {
    let u: f64 = rng.random();
    if u < schedule.epsilon(n) {
        rng.random_range(0..means.len())
    } else {
        argmax(means.iter().copied())
    }
}

pub fn boltzmann_probabilities(means: &[f64], tau: f64) -> Vec<f64> {
    let top = means.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = means.iter().map(|m| ((m - top) / tau).exp()).collect();
    let z: f64 = w.iter().sum();
    w.into_iter().map(|x| x / z).collect()
}

/// Samples arm `k` with probability proportional to `exp(Ȳ_k / τ)`.
pub fn boltzmann_step<R: Rng + ?Sized>(means: &[f64], tau: f64, rng: &mut R) -> usize {
    let p = boltzmann_probabilities(means, tau);
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (k, pk) in p.iter().enumerate() {
        acc += pk;
        if u < acc {
            return k;
        }
    }
    p.len() - 1
}

/// Draws `θ_k ~ Beta(1 + s_k, 1 + f_k)` for each arm and returns the argmax.
pub fn thompson_bernoulli_step<R: Rng + ?Sized>(successes: &[f64], failures: &[f64], rng: &mut R) -> usize {
    argmax(successes.iter().zip(failures).map(|(&s, &f)| {
        Beta::new(1.0 + s, 1.0 + f)
            .expect("beta parameters are positive")
            .sample(rng)
    }))
}

#[derive(Debug, Clone)]
pub struct EpsilonGreedy {
    schedule: EpsilonSchedule,
}

impl EpsilonGreedy {
    pub fn new(schedule: EpsilonSchedule) -> Result<Self> {
        let ok = match schedule {
            EpsilonSchedule::Fixed(e) => (0.0..=1.0).contains(&e),
            EpsilonSchedule::Inverse { numerator } => numerator >= 0.0 && numerator.is_finite(),
        };
        if !ok {
            return Err(Error::InvalidParameter(format!("epsilon schedule {schedule:?}")));
        }
        Ok(Self { schedule })
    }
}

impl Policy for EpsilonGreedy {
    fn decide(&mut self, arms: &[ArmHistory], rng: &mut Stream) -> PolicyDecision {
        let means: Vec<f64> = arms.iter().map(ArmHistory::mean).collect();
        let n = arms.iter().map(ArmHistory::count).sum();
        PolicyDecision::single(epsilon_greedy_step(&means, n, &self.schedule, rng))
    }
}

#[derive(Debug, Clone)]
pub struct Boltzmann {
    tau: f64,
}

impl Boltzmann {
    pub fn new(tau: f64) -> Result<Self> {
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::InvalidParameter(format!("Boltzmann temperature must be positive, got {tau}")));
        }
        Ok(Self { tau })
    }
}

impl Policy for Boltzmann {
    fn decide(&mut self, arms: &[ArmHistory], rng: &mut Stream) -> PolicyDecision {
        let means: Vec<f64> = arms.iter().map(ArmHistory::mean).collect();
        PolicyDecision::single(boltzmann_step(&means, self.tau, rng))
    }
}

/// Beta-Bernoulli Thompson sampling with a uniform prior. Rewards in `[0, 1]`
/// contribute fractional success counts; for other rewards the success count
/// is clipped to `[0, n_k]`.
#[derive(Debug, Clone, Default)]
pub struct Thompson;

impl Policy for Thompson {
    fn decide(&mut self, arms: &[ArmHistory], rng: &mut Stream) -> PolicyDecision {
        let s: Vec<f64> = arms
            .iter()
            .map(|a| a.total().clamp(0.0, a.count() as f64))
            .collect();
        let f: Vec<f64> = arms.iter().zip(&s).map(|(a, s)| a.count() as f64 - s).collect();
        PolicyDecision::single(thompson_bernoulli_step(&s, &f, rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn epsilon_values() {
        assert_eq!(EpsilonSchedule::three_c(1.0).epsilon(2), 1.0);
        assert!((EpsilonSchedule::three_c(1.0).epsilon(30) - 0.1).abs() < 1e-15);
        assert!((EpsilonSchedule::gap_scaled(2.0, 5, 0.5).epsilon(100) - 0.4).abs() < 1e-15);
    }

    #[test]
    fn zero_epsilon_is_greedy() {
        let mut r = Stream::seed_from_u64(0);
        for _ in 0..100 {
            assert_eq!(epsilon_greedy_step(&[0.1, 0.9, 0.9], 10, &EpsilonSchedule::Fixed(0.0), &mut r), 1);
        }
    }

    #[test]
    fn full_epsilon_is_uniform() {
        let mut r = Stream::seed_from_u64(1);
        let mut hits = [0usize; 4];
        for _ in 0..8000 {
            hits[epsilon_greedy_step(&[0.0, 0.0, 0.0, 9.0], 2, &EpsilonSchedule::three_c(1.0), &mut r)] += 1;
        }
        for h in hits {
            assert!((h as f64 - 2000.0).abs() < 4.0 * (8000.0f64 * 0.25 * 0.75).sqrt());
        }
    }

    #[test]
    fn softmax_values() {
        let p = boltzmann_probabilities(&[0.0, 1.0], 1.0);
        let e = std::f64::consts::E;
        assert!((p[1] - e / (1.0 + e)).abs() < 1e-12);
        let p = boltzmann_probabilities(&[3.0; 4], 0.1);
        assert!(p.iter().all(|x| (x - 0.25).abs() < 1e-15));
        let p = boltzmann_probabilities(&[0.0, 1.0, -2.0], 1e6);
        assert!(p.iter().all(|x| (x - 1.0 / 3.0).abs() < 1e-6));
        let p = boltzmann_probabilities(&[0.0, 1000.0], 0.01);
        assert!(p[1] == 1.0 && p[0] == 0.0);
    }

    #[test]
    fn boltzmann_frequency() {
        let mut r = Stream::seed_from_u64(2);
        let n = 20_000;
        let hits = (0..n).filter(|_| boltzmann_step(&[0.0, 1.0], 1.0, &mut r) == 1).count();
        let p = 0.731_058_578_6;
        assert!((hits as f64 / n as f64 - p).abs() < 4.0 * (p * (1.0 - p) / n as f64).sqrt());
    }

    #[test]
    fn temperature_validated() {
        assert!(Boltzmann::new(0.0).is_err());
        assert!(Boltzmann::new(-1.0).is_err());
        assert!(Boltzmann::new(0.2).is_ok());
    }

    #[test]
    fn thompson_concentrated_posterior() {
        let mut r = Stream::seed_from_u64(3);
        let picks = (0..10_000)
            .filter(|_| thompson_bernoulli_step(&[1e6, 0.0], &[0.0, 1e6], &mut r) == 0)
            .count();
        assert!(picks >= 9_990);
    }

    #[test]
    fn thompson_symmetric_prior() {
        let mut r = Stream::seed_from_u64(4);
        let mut hits = [0usize; 3];
        for _ in 0..10_000 {
            hits[thompson_bernoulli_step(&[0.0; 3], &[0.0; 3], &mut r)] += 1;
        }
        let sd = (10_000.0f64 / 3.0 * (2.0 / 3.0)).sqrt();
        for h in hits {
            assert!((h as f64 - 10_000.0 / 3.0).abs() < 3.0 * sd);
        }
    }

    #[test]
    fn beta_posterior_mean() {
        let (s, f) = (7.0, 3.0);
        let mut r = Stream::seed_from_u64(5);
        let d = Beta::new(1.0 + s, 1.0 + f).unwrap();
        let m: f64 = (0..100_000).map(|_| d.sample(&mut r)).sum::<f64>() / 100_000.0;
        assert!((m - (1.0 + s) / (2.0 + s + f)).abs() < 3e-3);
    }
}
