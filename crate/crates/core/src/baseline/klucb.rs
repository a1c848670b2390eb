/// Exploration budget `f` in the KL-UCB index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KlExploration {
    /// `log n + 3 log(max(log n, 1))`.
    #[default]
    Standard,
    /// KL-UCB+: `log(n / n_k)`.
    Plus,
}

impl KlExploration {
    pub fn budget(self, n: usize, n_k: usize) -> f64 {
        match self {
            Self::Standard => {
                let l = (n as f64).ln().max(0.0);
                l + 3.0 * l.max(1.0).ln()
            }
            Self::Plus => (n as f64 / n_k as f64).ln().max(0.0),
        }
    }
}

/// Bernoulli KL information `p log(p/q) + (1−p) log((1−p)/(1−q))`.
pub fn bernoulli_kl(p: f64, q: f64) -> f64 {
    fn term(a: f64, b: f64) -> f64 {
        if a == 0.0 {
            0.0
        } else if b == 0.0 {
            f64::INFINITY
        } else {
            a * (a / b).ln()
        }
    }
    term(p, q) + term(1.0 - p, 1.0 - q)
}

/// `sup { q ∈ [mean, 1] : n_k · KL(mean, q) ≤ budget }`, by bisection to 1e-10.
pub fn klucb_bernoulli_index(mean: f64, n_k: usize, budget: f64) -> f64 {
    if mean >= 1.0 {
        return 1.0;
    }
    if budget <= 0.0 {
        return mean;
    }
    let level = budget / n_k as f64;
    let (mut lo, mut hi) = (mean, 1.0);
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if bernoulli_kl(mean, mid) <= level {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}
