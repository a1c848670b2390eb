use super::density::{ctj_coefficient, DoubleExponentialSum};
use super::quadrature::integrate_to_infinity;
use crate::rng::Stream;
use num_rational::BigRational;
use num_traits::Zero;
use rand_distr::{Distribution, StandardNormal};
use std::collections::VecDeque;

/// Outcome of the exact check `(j+1) c_{t,j+1} + (j / 2t) c_tj ≤ c_tj`.
#[derive(Debug, Clone, PartialEq)]
pub struct CtjReport {
    pub t_max: usize,
    pub checked: usize,
    pub equalities: usize,
    pub first_violation: Option<(usize, usize)>,
}

impl CtjReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

pub fn verify_ctj_inequality(t_max: usize) -> CtjReport {
    let mut report = CtjReport { t_max, checked: 0, equalities: 0, first_violation: None };
    for t in 1..=t_max {
        let c: Vec<BigRational> = (0..=t).map(|j| ctj_coefficient(t, j)).collect();
        for j in 0..t {
            let lhs = BigRational::from_integer((j + 1).into()) * &c[j + 1]
                + BigRational::new(j.into(), (2 * t).into()) * &c[j];
            report.checked += 1;
            if lhs == c[j] {
                report.equalities += 1;
            } else if lhs > c[j] && report.first_violation.is_none() {
                report.first_violation = Some((t, j));
            }
        }
        debug_assert!(c[t].is_zero());
    }
    report
}

#[derive(Debug, Clone, PartialEq)]
pub struct B2Point {
    pub z: f64,
    /// `P(S_t > z + Δt)` by quadrature.
    pub lhs: f64,
    /// `e^{−t b₁} P(S_t > z)` by quadrature.
    pub rhs: f64,
    /// Largest gap between quadrature and closed-form tails.
    pub quadrature_error: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct B2Report {
    pub t: usize,
    pub delta: f64,
    pub b1: f64,
    pub points: Vec<B2Point>,
    /// `g_t′(x)(1 + x/2t) ≤ g_t(x)` on a grid of `x ≥ 0`.
    pub f2_holds: bool,
}

impl B2Report {
    pub fn passed(&self) -> bool {
        self.f2_holds && self.points.iter().all(|p| p.holds)
    }
}

const B2_SLACK: f64 = 1e-6;

/// Checks `P(S_t > z + Δt) ≤ e^{−t b₁} P(S_t > z)`, `b₁ = Δ − 2 log(1 + Δ/2)`.
pub fn verify_b2_bound(t: usize, delta: f64, z_grid: &[f64]) -> B2Report {
    let s = DoubleExponentialSum::new(t);
    let b1 = delta - 2.0 * (delta / 2.0).ln_1p();
    let tail = |z: f64| integrate_to_infinity(|x| s.density(x), z, 1e-13);
    let points = z_grid
        .iter()
        .map(|&z| {
            let lhs = tail(z + delta * t as f64);
            let base = tail(z);
            let rhs = (-(t as f64) * b1).exp() * base;
            let quadrature_error = (lhs - s.tail(z + delta * t as f64)).abs().max((base - s.tail(z)).abs());
            B2Point { z, lhs, rhs, quadrature_error, holds: lhs <= rhs + B2_SLACK }
        })
        .collect();
    let two_t = 2.0 * t as f64;
    let f2_holds = (0..=400).map(|i| i as f64 * 0.25).all(|x| {
        let g = s.g(x);
        s.g_derivative(x) * (1.0 + x / two_t) <= g * (1.0 + 1e-12)
    });
    B2Report { t, delta, b1, points, f2_holds }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Min1Report {
    pub n: usize,
    pub n2: usize,
    /// `(μ₁ − min window mean) / sqrt(2 log n / n₂)` per replication, sorted.
    pub ratios: Vec<f64>,
    /// `sqrt(log(n / (log n)²) / log n)`.
    pub lower_reference: f64,
}

pub const MIN1_BAND: (f64, f64) = (0.8, 1.05);

impl Min1Report {
    fn quantile(&self, q: f64) -> f64 {
        let i = ((self.ratios.len() - 1) as f64 * q).round() as usize;
        self.ratios[i]
    }

    pub fn median(&self) -> f64 {
        let r = &self.ratios;
        let m = r.len();
        if m % 2 == 1 {
            r[m / 2]
        } else {
            0.5 * (r[m / 2 - 1] + r[m / 2])
        }
    }

    pub fn lower_decile(&self) -> f64 {
        self.quantile(0.1)
    }

    pub fn upper_decile(&self) -> f64 {
        self.quantile(0.9)
    }

    pub fn passed(&self) -> bool {
        let m = self.median();
        m >= MIN1_BAND.0 && m <= MIN1_BAND.1
    }
}

/// Simulates `n₁ = n − n₂` standard normal rewards of the leading arm and
/// records how far the smallest length-`n₂` window mean falls below zero.
pub fn verify_min1_asymptotic(n: usize, n2: usize, replications: usize, rng: &mut Stream) -> Min1Report {
    assert!(n2 >= 1 && n2 < n && replications >= 1);
    let n1 = n - n2;
    let scale = (2.0 * (n as f64).ln() / n2 as f64).sqrt();
    let mut ratios: Vec<f64> = (0..replications)
        .map(|_| {
            let mut window: VecDeque<f64> = VecDeque::with_capacity(n2 + 1);
            let mut sum = 0.0;
            let mut min = f64::INFINITY;
            for _ in 0..n1 {
                let y: f64 = StandardNormal.sample(rng);
                window.push_back(y);
                sum += y;
                if window.len() > n2 {
                    sum -= window.pop_front().expect("non-empty window");
                }
                if window.len() == n2 {
                    min = min.min(sum);
                }
            }
            -(min / n2 as f64) / scale
        })
        .collect();
    ratios.sort_by(f64::total_cmp);
    let ln = (n as f64).ln();
    let lower_reference = ((n as f64 / (ln * ln)).ln() / ln).sqrt();
    Min1Report { n, n2, ratios, lower_reference }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChernoffPoint {
    pub x: f64,
    pub bound: f64,
    pub empirical: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChernoffReport {
    pub t: usize,
    pub replications: usize,
    pub points: Vec<ChernoffPoint>,
}

impl ChernoffReport {
    pub fn passed(&self) -> bool {
        self.points.iter().all(|p| p.holds)
    }
}

/// `exp[(t−1)/2 (log x − x + 1)]`.
pub fn chisq_chernoff_bound(t: usize, x: f64) -> f64 {
    (0.5 * (t - 1) as f64 * (x.ln() - x + 1.0)).exp()
}

/// Compares tail frequencies of `σ̂²/σ²` from `t` normal draws against the
/// Chernoff bound: upper tails for `x > 1`, lower tails for `x < 1`.
pub fn verify_chisq_chernoff(t: usize, x_grid: &[f64], replications: usize, rng: &mut Stream) -> ChernoffReport {
    assert!(t >= 2 && replications >= 1);
    let ratios: Vec<f64> = (0..replications)
        .map(|_| {
            let ys: Vec<f64> = (0..t).map(|_| StandardNormal.sample(rng)).collect();
            let m = ys.iter().sum::<f64>() / t as f64;
            ys.iter().map(|y| (y - m).powi(2)).sum::<f64>() / (t - 1) as f64
        })
        .collect();
    let reps = replications as f64;
    let points = x_grid
        .iter()
        .map(|&x| {
            let bound = chisq_chernoff_bound(t, x);
            let hits = if x > 1.0 {
                ratios.iter().filter(|r| **r >= x).count()
            } else if x < 1.0 {
                ratios.iter().filter(|r| **r <= x).count()
            } else {
                replications
            };
            let empirical = hits as f64 / reps;
            let slack = 3.0 * (bound * (1.0 - bound) / reps).sqrt();
            ChernoffPoint { x, bound, empirical, holds: empirical <= bound + slack }
        })
        .collect();
    ChernoffReport { t, replications, points }
}
