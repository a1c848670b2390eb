//! The regret functional.

/// Outcome of one replication: true arm means, pull counts and realized regret.
#[derive(Debug, Clone, PartialEq)]
pub struct RegretRecord {
    pub realized_means: Vec<f64>,
    pub pull_counts: Vec<usize>,
    pub empirical_regret: f64,
    pub replication: u64,
}

impl RegretRecord {
    pub fn new(realized_means: Vec<f64>, pull_counts: Vec<usize>, replication: u64) -> Self {
        let empirical_regret = empirical_regret(&realized_means, &pull_counts);
        Self {
            realized_means,
            pull_counts,
            empirical_regret,
            replication,
        }
    }

    pub fn horizon(&self) -> usize {
        self.pull_counts.iter().sum()
    }
}

/// `Σ_k (max_j μ_j − μ_k) · N_k`.
pub fn empirical_regret(means: &[f64], counts: &[usize]) -> f64 {
    assert_eq!(means.len(), counts.len(), "means and counts differ in length");
    let best = means.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    means
        .iter()
        .zip(counts)
        .map(|(&m, &n)| (best - m) * n as f64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(empirical_regret(&[0.5, 0.5], &[7, 3]), 0.0);
        let r = empirical_regret(&[0.9, 0.8], &[19900, 100]);
        assert!((r - 10.0).abs() < 1e-9);
        assert_eq!(empirical_regret(&[1.0, 0.0, -1.0], &[0, 0, 10]), 20.0);
    }

    proptest! {
        #[test]
        fn nonnegative_and_zero_iff_only_best_pulled(
            pairs in prop::collection::vec((-5i32..5, 0usize..50), 1..8)
        ) {
            let means: Vec<f64> = pairs.iter().map(|p| p.0 as f64 * 0.25).collect();
            let counts: Vec<usize> = pairs.iter().map(|p| p.1).collect();
            let r = empirical_regret(&means, &counts);
            prop_assert!(r >= 0.0);
            let best = means.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let only_best = means.iter().zip(&counts).all(|(&m, &n)| n == 0 || m == best);
            prop_assert_eq!(r == 0.0, only_best);
        }

        #[test]
        fn permutation_invariant(
            pairs in prop::collection::vec((-5i32..5, 0usize..50), 1..8),
            rot in 0usize..8,
        ) {
            let means: Vec<f64> = pairs.iter().map(|p| p.0 as f64 * 0.25).collect();
            let counts: Vec<usize> = pairs.iter().map(|p| p.1).collect();
            let mut m2 = means.clone();
            let mut c2 = counts.clone();
            let r = rot % means.len();
            m2.rotate_left(r);
            c2.rotate_left(r);
            m2.reverse();
            c2.reverse();
            prop_assert_eq!(empirical_regret(&means, &counts), empirical_regret(&m2, &c2));
        }
    }
}
