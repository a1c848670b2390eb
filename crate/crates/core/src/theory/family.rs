use crate::error::{Error, Result};

/// One-parameter exponential families `f(x; θ) = exp(θx − ψ(θ)) f(x; 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExponentialFamily {
    Bernoulli,
    /// Normal with known standard deviation; `θ = μ / σ²`.
    Normal { sd: f64 },
    Poisson,
    /// Exponential with rate `−θ`, `θ < 0`.
    Exponential,
}

impl ExponentialFamily {
    /// Open natural-parameter domain.
    pub fn domain(&self) -> (f64, f64) {
        match self {
            Self::Exponential => (f64::NEG_INFINITY, 0.0),
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    /// Open interval of attainable means.
    pub fn mean_range(&self) -> (f64, f64) {
        match self {
            Self::Bernoulli => (0.0, 1.0),
            Self::Normal { .. } => (f64::NEG_INFINITY, f64::INFINITY),
            Self::Poisson | Self::Exponential => (0.0, f64::INFINITY),
        }
    }

    pub fn contains(&self, theta: f64) -> bool {
        let (lo, hi) = self.domain();
        theta.is_finite() && theta > lo && theta < hi
    }

    /// Log moment generating function `ψ(θ)`.
    pub fn psi(&self, theta: f64) -> f64 {
        match *self {
            Self::Bernoulli => {
                // log(1 + e^θ) without overflow
                theta.max(0.0) + (-theta.abs()).exp().ln_1p()
            }
            Self::Normal { sd } => 0.5 * sd * sd * theta * theta,
            Self::Poisson => theta.exp(),
            Self::Exponential => -(-theta).ln(),
        }
    }

    /// Mean map `ψ′(θ)`.
    pub fn mean(&self, theta: f64) -> f64 {
        match *self {
            Self::Bernoulli => 1.0 / (1.0 + (-theta).exp()),
            Self::Normal { sd } => sd * sd * theta,
            Self::Poisson => theta.exp(),
            Self::Exponential => -1.0 / theta,
        }
    }

    pub fn theta_of_mean(&self, mean: f64) -> Result<f64> {
        let (lo, hi) = self.mean_range();
        if !(mean > lo && mean < hi) {
            return Err(Error::OutsideDomain(format!("mean {mean} for {self:?}")));
        }
        Ok(match *self {
            Self::Bernoulli => (mean / (1.0 - mean)).ln(),
            Self::Normal { sd } => mean / (sd * sd),
            Self::Poisson => mean.ln(),
            Self::Exponential => -1.0 / mean,
        })
    }
}

/// `D(f_θk | f_θ*) = (θk − θ*) ψ′(θk) − ψ(θk) + ψ(θ*)`.
pub fn kl_divergence(family: ExponentialFamily, theta_k: f64, theta_star: f64) -> Result<f64> {
    for th in [theta_k, theta_star] {
        if !family.contains(th) {
            return Err(Error::OutsideDomain(format!("θ = {th} for {family:?}")));
        }
    }
    let d = (theta_k - theta_star) * family.mean(theta_k) - family.psi(theta_k) + family.psi(theta_star);
    Ok(d.max(0.0))
}

pub fn kl_divergence_of_means(family: ExponentialFamily, mean_k: f64, mean_star: f64) -> Result<f64> {
    kl_divergence(family, family.theta_of_mean(mean_k)?, family.theta_of_mean(mean_star)?)
}

/// Large-deviation rate function of `f_θ*` at `x`; `+∞` outside the
/// closure of the mean range.
pub fn rate_function(family: ExponentialFamily, theta_star: f64, x: f64) -> Result<f64> {
    if !family.contains(theta_star) {
        return Err(Error::OutsideDomain(format!("θ = {theta_star} for {family:?}")));
    }
    let m = family.mean(theta_star);
    let xlogx = |a: f64, b: f64| if a == 0.0 { 0.0 } else { a * (a / b).ln() };
    Ok(match family {
        ExponentialFamily::Bernoulli => {
            if !(0.0..=1.0).contains(&x) {
                f64::INFINITY
            } else {
                xlogx(x, m) + xlogx(1.0 - x, 1.0 - m)
            }
        }
        ExponentialFamily::Normal { sd } => (x - m).powi(2) / (2.0 * sd * sd),
        ExponentialFamily::Poisson => {
            if x < 0.0 {
                f64::INFINITY
            } else {
                xlogx(x, m) - x + m
            }
        }
        ExponentialFamily::Exponential => {
            if x <= 0.0 {
                f64::INFINITY
            } else {
                x / m - 1.0 - (x / m).ln()
            }
        }
    })
}
