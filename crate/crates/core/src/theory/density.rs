use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `c_tj = (2t−2−j)! 2^j / (j! (t−1−j)!)`, and zero for `j ≥ t`.
pub fn ctj_coefficient(t: usize, j: usize) -> BigRational {
    assert!(t >= 1);
    if j >= t {
        return BigRational::zero();
    }
    let num = factorial(2 * t - 2 - j) * (BigInt::one() << j);
    let den = factorial(j) * factorial(t - 1 - j);
    BigRational::new(num, den)
}

/// Density of `S_t`, the sum of `t` independent standard double
/// exponential variables: `f_t(x) = e^{−|x|} g_t(|x|)` with `g_t` a
/// polynomial of degree `t − 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubleExponentialSum {
    t: usize,
    coefficients: Vec<f64>,
}

impl DoubleExponentialSum {
    pub fn new(t: usize) -> Self {
        assert!(t >= 1, "need at least one summand");
        let scale = BigRational::from_integer(factorial(t - 1) * (BigInt::one() << (2 * t - 1)));
        let coefficients = (0..t)
            .map(|j| (ctj_coefficient(t, j) / &scale).to_f64().expect("finite coefficient"))
            .collect();
        Self { t, coefficients }
    }

    pub fn summands(&self) -> usize {
        self.t
    }

    /// Coefficients of `g_t`, lowest degree first.
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn g(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn g_derivative(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (j, c)| acc * x + j as f64 * c)
    }

    pub fn density(&self, x: f64) -> f64 {
        let a = x.abs();
        (-a).exp() * self.g(a)
    }

    /// `P(S_t > z)` from the incomplete gamma identity
    /// `∫_z^∞ x^j e^{−x} dx = j! e^{−z} Σ_{i≤j} z^i / i!`.
    pub fn tail(&self, z: f64) -> f64 {
        if z < 0.0 {
            return 1.0 - self.tail(-z);
        }
        let mut total = 0.0;
        let mut partial = 0.0;
        let mut term = 1.0;
        let mut fact = 1.0;
        for (j, c) in self.coefficients.iter().enumerate() {
            if j > 0 {
                term *= z / j as f64;
                fact *= j as f64;
            }
            partial += term;
            total += c * fact * partial;
        }
        total * (-z).exp()
    }
}

pub fn de_density(t: usize, x: f64) -> f64 {
    DoubleExponentialSum::new(t).density(x)
}

pub fn de_tail(t: usize, z: f64) -> f64 {
    DoubleExponentialSum::new(t).tail(z)
}
