//! Per-arm reward storage with constant-time window statistics.
//!
//! Window positions are 1-based and inclusive, so `window_mean(t, u)` is the
//! mean of rewards `t..=u` in the usual `Y_{t:u}` notation.

/// Full reward sequence of one arm plus prefix sums of rewards and squares.
#[derive(Debug, Clone, PartialEq)]
pub struct ArmHistory {
    rewards: Vec<f64>,
    // Both prefix vectors carry a leading 0 so that prefix[t] is the sum of
    // the first t rewards.
    prefix: Vec<f64>,
    prefix_sq: Vec<f64>,
}

impl Default for ArmHistory {
    fn default() -> Self {
        Self::new()
    }
}

impl ArmHistory {
    pub fn new() -> Self {
        Self {
            rewards: Vec::new(),
            prefix: vec![0.0],
            prefix_sq: vec![0.0],
        }
    }

    pub fn from_rewards(rewards: &[f64]) -> Self {
        let mut h = Self::with_capacity(rewards.len());
        for &y in rewards {
            h.record(y);
        }
        h
    }

    pub fn with_capacity(capacity: usize) -> Self {
        let mut prefix = Vec::with_capacity(capacity + 1);
        let mut prefix_sq = Vec::with_capacity(capacity + 1);
        prefix.push(0.0);
        prefix_sq.push(0.0);
        Self {
            rewards: Vec::with_capacity(capacity),
            prefix,
            prefix_sq,
        }
    }

    /// Appends one reward and extends both prefix aggregates.
    pub fn record(&mut self, y: f64) {
        let s = self.prefix[self.rewards.len()] + y;
        let q = self.prefix_sq[self.rewards.len()] + y * y;
        self.rewards.push(y);
        self.prefix.push(s);
        self.prefix_sq.push(q);
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.rewards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rewards.is_empty()
    }

    pub fn rewards(&self) -> &[f64] {
        &self.rewards
    }

    /// `prefix_sums()[t - 1]` is the sum of the first `t` rewards.
    pub fn prefix_sums(&self) -> &[f64] {
        &self.prefix[1..]
    }

    pub fn prefix_sums_of_squares(&self) -> &[f64] {
        &self.prefix_sq[1..]
    }

    /// Prefix sums including the leading zero, indexable by `0..=count`.
    #[inline]
    pub(crate) fn raw_prefix(&self) -> &[f64] {
        &self.prefix
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.prefix[self.rewards.len()]
    }

    /// Mean of all rewards; NaN when empty.
    #[inline]
    pub fn mean(&self) -> f64 {
        self.total() / self.rewards.len() as f64
    }

    /// Sample standard deviation of the full history (requires two rewards).
    pub fn stddev(&self) -> f64 {
        self.window_stddev(1, self.count())
    }

    /// Sum of rewards `t..=u` (1-based, inclusive).
    #[inline]
    pub fn window_sum(&self, t: usize, u: usize) -> f64 {
        assert!(
            1 <= t && t <= u && u <= self.count(),
            "window {t}:{u} out of range for {} rewards",
            self.count()
        );
        self.prefix[u] - self.prefix[t - 1]
    }

    /// Mean of rewards `t..=u` (1-based, inclusive).
    #[inline]
    pub fn window_mean(&self, t: usize, u: usize) -> f64 {
        self.window_sum(t, u) / (u - t + 1) as f64
    }

    /// Square root of the unbiased variance of rewards `t..=u`; needs `u > t`.
    ///
    /// Negative rounding residue from the prefix-sum formula is clamped to 0.
    pub fn window_stddev(&self, t: usize, u: usize) -> f64 {
        assert!(u > t, "window standard deviation needs two observations");
        let m = (u - t + 1) as f64;
        let s = self.window_sum(t, u);
        let q = self.prefix_sq[u] - self.prefix_sq[t - 1];
        let var = (q - s * s / m) / (m - 1.0);
        var.max(0.0).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, StandardNormal};

    #[test]
    fn record_single() {
        let mut h = ArmHistory::new();
        h.record(3.0);
        assert_eq!(h.count(), 1);
        assert_eq!(h.prefix_sums(), &[3.0]);
    }

    #[test]
    fn record_running_sum() {
        let mut h = ArmHistory::from_rewards(&[1.0, 2.0]);
        h.record(3.0);
        assert_eq!(h.prefix_sums(), &[1.0, 3.0, 6.0]);
        assert_eq!(h.prefix_sums_of_squares(), &[1.0, 5.0, 14.0]);
        assert_eq!(h.rewards().len(), h.prefix_sums().len());
    }

    #[test]
    fn prefix_matches_direct_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut h = ArmHistory::new();
        let mut direct = Vec::new();
        for _ in 0..1000 {
            let y: f64 = StandardNormal.sample(&mut rng);
            h.record(y);
            direct.push(y);
        }
        let s: f64 = direct.iter().sum();
        let p = h.prefix_sums()[999];
        assert!((p - s).abs() <= 1e-9 * s.abs().max(1.0));
    }

    #[test]
    fn window_means() {
        let h = ArmHistory::from_rewards(&[1.0, 2.0, 3.0]);
        assert_eq!(h.window_mean(1, 3), 2.0);
        let h = ArmHistory::from_rewards(&[5.0, 1.0, 1.0, 5.0]);
        assert_eq!(h.window_mean(2, 3), 1.0);
        for t in 1..=4 {
            assert_eq!(h.window_mean(t, t), h.rewards()[t - 1]);
        }
    }

    #[test]
    fn window_stddev_cases() {
        let h = ArmHistory::from_rewards(&[1.0, 3.0]);
        assert!((h.window_stddev(1, 2) - 2f64.sqrt()).abs() < 1e-12);
        let h = ArmHistory::from_rewards(&[4.0, 4.0, 4.0]);
        assert_eq!(h.window_stddev(1, 3), 0.0);
    }

    #[test]
    fn window_stddev_matches_two_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let ys: Vec<f64> = (0..80)
            .map(|_| 3.0 + 2.0 * Distribution::<f64>::sample(&StandardNormal, &mut rng))
            .collect();
        let h = ArmHistory::from_rewards(&ys);
        let (t, u) = (20, 69);
        let w = &ys[t - 1..u];
        let m = w.iter().sum::<f64>() / w.len() as f64;
        let v = w.iter().map(|y| (y - m).powi(2)).sum::<f64>() / (w.len() - 1) as f64;
        let got = h.window_stddev(t, u);
        assert!((got - v.sqrt()).abs() <= 1e-9 * v.sqrt());
    }

    #[test]
    #[should_panic]
    fn singleton_stddev_is_contract_violation() {
        ArmHistory::from_rewards(&[1.0, 2.0]).window_stddev(2, 2);
    }

    #[test]
    #[should_panic]
    fn window_out_of_range() {
        ArmHistory::from_rewards(&[1.0, 2.0]).window_mean(2, 3);
    }
}
