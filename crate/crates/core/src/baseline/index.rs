use super::klucb::{klucb_bernoulli_index, KlExploration};
use crate::history::ArmHistory;
use crate::policy::{argmax, Policy, PolicyDecision};
use crate::rng::Stream;

fn ln_or_zero(x: f64) -> f64 {
    if x > 1.0 {
        x.ln()
    } else {
        0.0
    }
}

/// UCB1: `Ȳ_k + sqrt(2 log n / n_k)`.
pub fn ucb1_index(mean: f64, n_k: usize, n: usize) -> f64 {
    mean + (2.0 * ln_or_zero(n as f64) / n_k as f64).sqrt()
}

/// UCB-Agrawal with `b_n = log log log n`:
/// `Ȳ_k + sqrt(2 (log n + log log n + b_n) / n_k)`.
///
/// Each nested logarithm is clamped below at 0, so the bonus is finite for
/// every `n ≥ 1`.
pub fn ucb_agrawal_index(mean: f64, n_k: usize, n: usize) -> f64 {
    let l1 = ln_or_zero(n as f64);
    let l2 = ln_or_zero(l1);
    let l3 = ln_or_zero(l2);
    mean + (2.0 * (l1 + l2 + l3) / n_k as f64).sqrt()
}

/// UCB-Lai for unit-variance normal rewards with known horizon:
/// `Ȳ_k + sqrt(2 log(N / n_k) / n_k)`, the logarithm clamped at 0.
pub fn ucb_lai_index(mean: f64, n_k: usize, horizon: usize) -> f64 {
    mean + (2.0 * ln_or_zero(horizon as f64 / n_k as f64) / n_k as f64).sqrt()
}

/// UCB1-tuned: `Ȳ_k + sqrt((log n / n_k) · min(1/4, σ̂_k² + sqrt(2 log n / n_k)))`.
pub fn ucb1_tuned_index(mean: f64, stddev: f64, n_k: usize, n: usize) -> f64 {
    let l = ln_or_zero(n as f64);
    let nk = n_k as f64;
    let v = stddev * stddev + (2.0 * l / nk).sqrt();
    mean + (l / nk * v.min(0.25)).sqrt()
}

/// One UCB1-Normal step.
///
/// Any arm with `n_k < 8 log n` is forced (smallest `n_k`, then smallest
/// index); otherwise the arm maximizing `Ȳ_k + 4 σ̂_k sqrt(log n / n_k)`.
pub fn ucb1_normal_step(arms: &[ArmHistory], n: usize) -> usize {
    let l = ln_or_zero(n as f64);
    let forced = arms
        .iter()
        .enumerate()
        .filter(|(_, a)| (a.count() as f64) < 8.0 * l)
        .min_by_key(|(k, a)| (a.count(), *k));
    if let Some((k, _)) = forced {
        return k;
    }
    argmax(arms.iter().map(|a| a.mean() + 4.0 * a.stddev() * (l / a.count() as f64).sqrt()))
}

/// Deterministic index rules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexRule {
    Ucb1,
    UcbAgrawal,
    UcbLai { horizon: usize },
    Ucb1Tuned,
    KlUcb(KlExploration),
}

/// Samples the arm with the largest index each step.
#[derive(Debug, Clone)]
pub struct IndexPolicy {
    rule: IndexRule,
}

impl IndexPolicy {
    pub fn new(rule: IndexRule) -> Self {
        Self { rule }
    }

    pub fn index(&self, arm: &ArmHistory, n: usize) -> f64 {
        let (m, nk) = (arm.mean(), arm.count());
        match self.rule {
            IndexRule::Ucb1 => ucb1_index(m, nk, n),
            IndexRule::UcbAgrawal => ucb_agrawal_index(m, nk, n),
            IndexRule::UcbLai { horizon } => ucb_lai_index(m, nk, horizon),
            IndexRule::Ucb1Tuned => ucb1_tuned_index(m, arm.stddev(), nk, n),
            IndexRule::KlUcb(e) => klucb_bernoulli_index(m.clamp(0.0, 1.0), nk, e.budget(n, nk)),
        }
    }
}

impl Policy for IndexPolicy {
    fn initial_pulls(&self) -> usize {
        // σ̂ needs two observations.
        if self.rule == IndexRule::Ucb1Tuned {
            2
        } else {
            1
        }
    }

    fn decide(&mut self, arms: &[ArmHistory], _rng: &mut Stream) -> PolicyDecision {
        let n = arms.iter().map(ArmHistory::count).sum();
        PolicyDecision::single(argmax(arms.iter().map(|a| self.index(a, n))))
    }
}

#[derive(Debug, Clone, Default)]
pub struct Ucb1Normal;

impl Policy for Ucb1Normal {
    fn initial_pulls(&self) -> usize {
        2
    }

    fn decide(&mut self, arms: &[ArmHistory], _rng: &mut Stream) -> PolicyDecision {
        let n = arms.iter().map(ArmHistory::count).sum();
        PolicyDecision::single(ucb1_normal_step(arms, n))
    }
}
