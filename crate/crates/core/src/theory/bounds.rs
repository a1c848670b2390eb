use super::family::{kl_divergence_of_means, ExponentialFamily};
use crate::error::{Error, Result};

/// `M(g) = ½ log(1 + g²)`.
pub fn m_of_g(g: f64) -> f64 {
    0.5 * (g * g).ln_1p()
}

/// Contribution of one inferior arm to an asymptotic lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct ArmCoefficient {
    pub arm: usize,
    pub gap: f64,
    /// The information number dividing the gap (a KL divergence or `M`).
    pub information: f64,
    /// `gap / information`.
    pub coefficient: f64,
}

impl ArmCoefficient {
    /// Limit of `E n_k / log N` for an efficient policy.
    pub fn pulls_per_log_horizon(&self) -> f64 {
        1.0 / self.information
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundReport {
    pub horizon: u64,
    pub arms: Vec<ArmCoefficient>,
}

impl LowerBoundReport {
    pub fn coefficient_sum(&self) -> f64 {
        self.arms.iter().map(|a| a.coefficient).sum()
    }

    /// `(Σ coefficients) · log N`.
    pub fn bound(&self) -> f64 {
        self.coefficient_sum() * (self.horizon as f64).ln()
    }
}

fn best(means: &[f64]) -> f64 {
    means.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// Lai–Robbins bound for arms from a common exponential family.
pub fn lai_robbins_bound(family: ExponentialFamily, means: &[f64], horizon: u64) -> Result<LowerBoundReport> {
    let star = best(means);
    let mut arms = Vec::new();
    for (arm, &m) in means.iter().enumerate() {
        if m < star {
            let information = kl_divergence_of_means(family, m, star)?;
            arms.push(ArmCoefficient { arm, gap: star - m, information, coefficient: (star - m) / information });
        }
    }
    Ok(LowerBoundReport { horizon, arms })
}

/// Burnetas–Katehakis bound for normal arms with unknown variances.
pub fn burnetas_katehakis_bound(means: &[f64], stddevs: &[f64], horizon: u64) -> Result<LowerBoundReport> {
    if means.len() != stddevs.len() {
        return Err(Error::InvalidParameter("means and standard deviations differ in length".into()));
    }
    if let Some(s) = stddevs.iter().find(|s| !(**s > 0.0)) {
        return Err(Error::InvalidParameter(format!("standard deviation {s}")));
    }
    let star = best(means);
    let arms = means
        .iter()
        .zip(stddevs)
        .enumerate()
        .filter(|(_, (m, _))| **m < star)
        .map(|(arm, (m, s))| {
            let gap = star - m;
            let information = m_of_g(gap / s);
            ArmCoefficient { arm, gap, information, coefficient: gap / information }
        })
        .collect();
    Ok(LowerBoundReport { horizon, arms })
}
