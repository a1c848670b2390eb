use super::RewardModel;
use crate::error::{Error, Result};
use crate::rng::Stream;
use nalgebra::{DMatrix, DVector};
use rand::Rng;

const ROW_TOLERANCE: f64 = 1e-12;
const RESIDUAL_TOLERANCE: f64 = 1e-10;

/// Rewards emitted along a finite stationary Markov chain whose kernel
/// satisfies a uniform minorization `P(x, ·) ≥ λ(·)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkovRewardModel {
    transition: Vec<Vec<f64>>,
    emissions: Vec<RewardModel>,
    stationary: Vec<f64>,
    margins: Vec<f64>,
}

impl MarkovRewardModel {
    pub fn new(transition: Vec<Vec<f64>>, emissions: Vec<RewardModel>) -> Result<Self> {
        if emissions.len() != transition.len() {
            return Err(Error::InvalidTransitionMatrix(format!(
                "{} states but {} emissions",
                transition.len(),
                emissions.len()
            )));
        }
        for e in &emissions {
            e.validate()?;
        }
        let stationary = stationary_distribution(&transition)?;
        let margins = doeblin_margins(&transition);
        Ok(Self { transition, emissions, stationary, margins })
    }

    pub fn state_count(&self) -> usize {
        self.transition.len()
    }

    pub fn transition_matrix(&self) -> &[Vec<f64>] {
        &self.transition
    }

    pub fn emissions(&self) -> &[RewardModel] {
        &self.emissions
    }

    pub fn stationary(&self) -> &[f64] {
        &self.stationary
    }

    /// Column minima of the transition matrix.
    pub fn doeblin_margins(&self) -> &[f64] {
        &self.margins
    }

    pub fn doeblin_mass(&self) -> f64 {
        self.margins.iter().sum()
    }

    /// Stationary mean reward `Σ_x π(x) E[Y | x]`.
    pub fn true_mean(&self) -> f64 {
        self.stationary.iter().zip(&self.emissions).map(|(p, e)| p * e.true_mean()).sum()
    }

    pub fn initial_state<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        draw_index(&self.stationary, rng)
    }

    pub fn step<R: Rng + ?Sized>(&self, state: usize, rng: &mut R) -> usize {
        draw_index(&self.transition[state], rng)
    }

    pub fn emit<R: Rng + ?Sized>(&self, state: usize, rng: &mut R) -> f64 {
        self.emissions[state].sample(rng)
    }
}

fn draw_index<R: Rng + ?Sized>(probs: &[f64], rng: &mut R) -> usize {
    if probs.len() == 1 {
        return 0;
    }
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (i, p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return i;
        }
    }
    probs.len() - 1
}

pub fn doeblin_margins(transition: &[Vec<f64>]) -> Vec<f64> {
    let k = transition.len();
    (0..k)
        .map(|j| transition.iter().map(|row| row[j]).fold(f64::INFINITY, f64::min))
        .collect()
}

fn check_stochastic(transition: &[Vec<f64>]) -> Result<()> {
    let k = transition.len();
    if k == 0 {
        return Err(Error::InvalidTransitionMatrix("empty matrix".into()));
    }
    for (i, row) in transition.iter().enumerate() {
        if row.len() != k {
            return Err(Error::InvalidTransitionMatrix(format!("row {i} has {} entries, expected {k}", row.len())));
        }
        if row.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidTransitionMatrix(format!("row {i} has a negative or non-finite entry")));
        }
        let s: f64 = row.iter().sum();
        if (s - 1.0).abs() > ROW_TOLERANCE {
            return Err(Error::InvalidTransitionMatrix(format!("row {i} sums to {s}")));
        }
    }
    Ok(())
}

/// Solves `π P = π`, `Σ π = 1` for a row-stochastic matrix with positive
/// Doeblin mass.
pub fn stationary_distribution(transition: &[Vec<f64>]) -> Result<Vec<f64>> {
    check_stochastic(transition)?;
    let mass: f64 = doeblin_margins(transition).iter().sum();
    if mass <= 0.0 {
        return Err(Error::InvalidTransitionMatrix("column minima sum to zero (no Doeblin minorization)".into()));
    }
    let k = transition.len();
    // Rows of (Pᵀ − I), with the last equation replaced by normalization.
    let mut a = DMatrix::from_fn(k, k, |i, j| transition[j][i] - if i == j { 1.0 } else { 0.0 });
    for j in 0..k {
        a[(k - 1, j)] = 1.0;
    }
    let mut b = DVector::zeros(k);
    b[k - 1] = 1.0;
    let pi = a
        .lu()
        .solve(&b)
        .ok_or_else(|| Error::InvalidTransitionMatrix("singular stationary system".into()))?;
    let mut pi: Vec<f64> = pi.iter().map(|p| p.max(0.0)).collect();
    let total: f64 = pi.iter().sum();
    pi.iter_mut().for_each(|p| *p /= total);
    let residual = (0..k)
        .map(|j| ((0..k).map(|i| pi[i] * transition[i][j]).sum::<f64>() - pi[j]).abs())
        .fold(0.0, f64::max);
    if residual > RESIDUAL_TOLERANCE {
        return Err(Error::InvalidTransitionMatrix(format!("stationary residual {residual:e}")));
    }
    Ok(pi)
}

pub fn markov_state_path(model: &MarkovRewardModel, length: usize, rng: &mut Stream) -> Vec<usize> {
    let mut path = Vec::with_capacity(length);
    if length == 0 {
        return path;
    }
    let mut s = model.initial_state(rng);
    path.push(s);
    for _ in 1..length {
        s = model.step(s, rng);
        path.push(s);
    }
    path
}

/// Rewards along a stationary-start path, one emission per visited state.
pub fn markov_sample_path(model: &MarkovRewardModel, length: usize, rng: &mut Stream) -> Vec<f64> {
    let mut out = Vec::with_capacity(length);
    let mut state = None;
    for _ in 0..length {
        let s = match state {
            None => model.initial_state(rng),
            Some(s) => model.step(s, rng),
        };
        state = Some(s);
        out.push(model.emit(s, rng));
    }
    out
}
