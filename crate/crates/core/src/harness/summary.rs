use crate::regret::RegretRecord;

/// Regret counts per bin. Bin `i` is `[edges[i], edges[i+1])`; the last bin
/// is `[edges[B], ∞)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
    /// Values below the first edge, counted in the first bin.
    pub below_first_edge: usize,
    pub worst: f64,
}

pub fn histogram(values: &[f64], edges: &[f64]) -> Histogram {
    assert!(!edges.is_empty(), "need at least one bin edge");
    let mut counts = vec![0; edges.len()];
    let mut below = 0;
    for &v in values {
        let bin = edges.partition_point(|e| *e <= v);
        if bin == 0 {
            below += 1;
            counts[0] += 1;
        } else {
            counts[bin - 1] += 1;
        }
    }
    let worst = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Histogram { edges: edges.to_vec(), counts, below_first_edge: below, worst }
}

/// Aggregate over the replications of one (policy, horizon) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSummary {
    pub scenario: String,
    pub policy: String,
    pub horizon: usize,
    pub replications: usize,
    pub seed: u64,
    pub mean_regret: f64,
    /// Sample standard deviation over `sqrt(J)`; `None` when `J = 1`.
    pub se_regret: Option<f64>,
    pub worst_regret: f64,
    pub histogram: Histogram,
    /// Mean pull count of each arm.
    pub mean_pulls: Vec<f64>,
}

impl ExperimentSummary {
    pub fn from_records(
        scenario: &str,
        policy: &str,
        horizon: usize,
        seed: u64,
        records: &[RegretRecord],
        edges: &[f64],
    ) -> Self {
        let j = records.len();
        assert!(j > 0, "no replications");
        let regrets: Vec<f64> = records.iter().map(|r| r.empirical_regret).collect();
        let mean = regrets.iter().sum::<f64>() / j as f64;
        let se = (j > 1).then(|| {
            let var = regrets.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / (j - 1) as f64;
            (var / j as f64).sqrt()
        });
        let k = records[0].pull_counts.len();
        let mean_pulls = (0..k)
            .map(|a| records.iter().map(|r| r.pull_counts[a] as f64).sum::<f64>() / j as f64)
            .collect();
        let histogram = histogram(&regrets, edges);
        Self {
            scenario: scenario.to_string(),
            policy: policy.to_string(),
            horizon,
            replications: j,
            seed,
            mean_regret: mean,
            se_regret: se,
            worst_regret: histogram.worst,
            histogram,
            mean_pulls,
        }
    }

    /// Fraction of replications falling in histogram bin `i`.
    pub fn bin_fraction(&self, i: usize) -> f64 {
        self.histogram.counts[i] as f64 / self.replications as f64
    }
}
