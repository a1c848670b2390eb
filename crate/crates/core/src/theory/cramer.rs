use super::family::ExponentialFamily;

/// A cumulant generating function `Λ(θ) = log E e^{θY}` on an open interval.
pub trait CumulantGenerating {
    fn cgf(&self, theta: f64) -> f64;
    fn cgf_derivative(&self, theta: f64) -> f64;
    fn domain(&self) -> (f64, f64);
}

/// Centred cumulants of an exponential family member,
/// `Λ(θ) = ψ(θ* + θ) − ψ(θ*)`.
impl CumulantGenerating for (ExponentialFamily, f64) {
    fn cgf(&self, theta: f64) -> f64 {
        let (fam, star) = *self;
        fam.psi(star + theta) - fam.psi(star)
    }

    fn cgf_derivative(&self, theta: f64) -> f64 {
        let (fam, star) = *self;
        fam.mean(star + theta)
    }

    fn domain(&self) -> (f64, f64) {
        let (fam, star) = *self;
        let (lo, hi) = fam.domain();
        (lo - star, hi - star)
    }
}

/// Double exponential with density `e^{−|y−μ|/s} / (2s)`:
/// `Λ(θ) = θμ − log(1 − s²θ²)` for `|θ| < 1/s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceCgf {
    pub location: f64,
    pub scale: f64,
}

impl CumulantGenerating for LaplaceCgf {
    fn cgf(&self, theta: f64) -> f64 {
        let st = self.scale * theta;
        theta * self.location - (1.0 - st * st).ln()
    }

    fn cgf_derivative(&self, theta: f64) -> f64 {
        let st = self.scale * theta;
        self.location + 2.0 * self.scale * st / (1.0 - st * st)
    }

    fn domain(&self) -> (f64, f64) {
        (-1.0 / self.scale, 1.0 / self.scale)
    }
}

/// Legendre transform `sup_θ [θx − Λ(θ)]`, located by bisection on `Λ′`.
/// Returns `+∞` when `x` lies outside the open range of `Λ′`.
pub fn cramer_transform<C: CumulantGenerating + ?Sized>(cgf: &C, x: f64) -> f64 {
    let (lo_edge, hi_edge) = cgf.domain();
    let centre = cgf.cgf_derivative(0.0);
    if x == centre {
        return 0.0;
    }
    let upward = x > centre;
    let edge = if upward { hi_edge } else { lo_edge };
    let beyond = |th: f64| if upward { cgf.cgf_derivative(th) >= x } else { cgf.cgf_derivative(th) <= x };

    let mut inner = 0.0;
    let mut step = if upward { 1.0 } else { -1.0 };
    let mut outer = None;
    for _ in 0..4000 {
        let mut cand = inner + step;
        if (upward && cand >= edge) || (!upward && cand <= edge) {
            cand = 0.5 * (inner + edge);
        } else {
            step *= 2.0;
        }
        if !cand.is_finite() || cand == inner {
            break;
        }
        if beyond(cand) {
            outer = Some(cand);
            break;
        }
        inner = cand;
    }
    let Some(mut outer) = outer else {
        return f64::INFINITY;
    };
    for _ in 0..200 {
        let mid = 0.5 * (inner + outer);
        if mid == inner || mid == outer {
            break;
        }
        if beyond(mid) {
            outer = mid;
        } else {
            inner = mid;
        }
    }
    let theta = 0.5 * (inner + outer);
    theta * x - cgf.cgf(theta)
}
