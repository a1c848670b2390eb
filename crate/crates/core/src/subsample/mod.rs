//! Subsample-comparison allocation: SSMC, SSTC, SSMC* and BESA.
//!
//! In every round after the seeding round a leader (the arm with the most
//! observations) is challenged by each other arm. SSMC compares a challenger's
//! full-sample mean against every same-length window mean of the leader;
//! SSTC replaces the mean comparison by a studentized one; SSMC* only looks
//! at disjoint blocks of the leader's history. Every challenger that wins is
//! sampled; if none wins, the leader is sampled.
//!
//! The per-challenger caches make a round cost O(1) per challenger while the
//! leader and all sample sizes persist, and O(n) only when they change.

mod besa;
mod challenge;

pub use besa::{besa_duel, besa_round, BesaPolicy, DuelWinner};
pub use challenge::{
    ssmc_challenge, ssmc_star_challenge, sstc_challenge, sstc_challenge_cached,
    ChallengeOutcome, StudentCache, WindowLayout, WindowMinCache,
};

use crate::history::ArmHistory;
use crate::policy::{Policy, PolicyDecision};
use crate::rng::Stream;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Forced-exploration threshold `c_n`: a challenger with fewer than `c_n`
/// observations wins its challenge automatically.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case", tag = "rule")]
pub enum ExplorationSchedule {
    /// `c_n = (log n)^{1/2}`, with `c_1 = 0`.
    #[default]
    SqrtLog,
    /// `c_n = (log n)^p` for `0 < p < 1`.
    LogPower { exponent: f64 },
    /// No forced exploration beyond the seeding round.
    Zero,
}

impl ExplorationSchedule {
    /// Threshold at `n` total observations (the count at the start of the round).
    pub fn threshold(&self, n: usize) -> f64 {
        if n < 2 {
            return 0.0;
        }
        let l = (n as f64).ln();
        match *self {
            Self::SqrtLog => l.sqrt(),
            Self::LogPower { exponent } => l.powf(exponent),
            Self::Zero => 0.0,
        }
    }
}

/// Picks the round leader.
///
/// Among arms with the most observations, prefer the larger full-sample mean;
/// among those, keep the previous leader if eligible; otherwise draw uniformly.
pub fn select_leader<R: Rng + ?Sized>(
    counts: &[usize],
    means: &[f64],
    previous_leader: Option<usize>,
    rng: &mut R,
) -> usize {
    let top = *counts.iter().max().expect("no arms");
    let by_count: Vec<usize> = (0..counts.len()).filter(|&k| counts[k] == top).collect();
    if by_count.len() == 1 {
        return by_count[0];
    }
    let best_mean = by_count
        .iter()
        .map(|&k| means[k])
        .fold(f64::NEG_INFINITY, f64::max);
    let tied: Vec<usize> = by_count
        .into_iter()
        .filter(|&k| means[k] == best_mean)
        .collect();
    match previous_leader {
        _ if tied.len() == 1 => tied[0],
        Some(p) if tied.contains(&p) => p,
        _ => tied[rng.random_range(0..tied.len())],
    }
}

/// Which comparison a [`SubsamplePolicy`] uses against the leader.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChallengeRule {
    /// SSMC: all sliding windows, mean comparison.
    Mean,
    /// SSTC: all sliding windows, studentized comparison.
    Studentized,
    /// SSMC*: disjoint blocks, mean comparison.
    Blocks,
}

/// Leader/challenger procedure shared by SSMC, SSTC and SSMC*.
#[derive(Debug, Clone)]
pub struct SubsamplePolicy {
    rule: ChallengeRule,
    schedule: ExplorationSchedule,
    previous_leader: Option<usize>,
    round: usize,
    min_caches: Vec<WindowMinCache>,
    student_caches: Vec<StudentCache>,
}

impl SubsamplePolicy {
    pub fn new(rule: ChallengeRule, schedule: ExplorationSchedule) -> Self {
        Self {
            rule,
            schedule,
            previous_leader: None,
            round: 1,
            min_caches: Vec::new(),
            student_caches: Vec::new(),
        }
    }

    pub fn ssmc() -> Self {
        Self::new(ChallengeRule::Mean, ExplorationSchedule::default())
    }

    pub fn sstc() -> Self {
        Self::new(ChallengeRule::Studentized, ExplorationSchedule::default())
    }

    pub fn ssmc_star() -> Self {
        Self::new(ChallengeRule::Blocks, ExplorationSchedule::default())
    }

    pub fn rule(&self) -> ChallengeRule {
        self.rule
    }

    /// Leader chosen in the most recent round.
    pub fn leader(&self) -> Option<usize> {
        self.previous_leader
    }

    /// Number of the round the next `decide` call will play (the seeding
    /// round is round 1).
    pub fn round(&self) -> usize {
        self.round + 1
    }

    /// Total number of leader windows evaluated by all caches so far.
    pub fn window_evaluations(&self) -> u64 {
        self.min_caches.iter().map(|c| c.evaluations()).sum::<u64>()
            + self.student_caches.iter().map(|c| c.evaluations()).sum::<u64>()
    }

    fn challenge(&mut self, leader: &ArmHistory, k: usize, arm: &ArmHistory, c_n: f64) -> ChallengeOutcome {
        match self.rule {
            ChallengeRule::Mean => {
                challenge::window_min_challenge(leader, arm, c_n, WindowLayout::Sliding, &mut self.min_caches[k])
            }
            ChallengeRule::Blocks => {
                challenge::window_min_challenge(leader, arm, c_n, WindowLayout::Blocks, &mut self.min_caches[k])
            }
            ChallengeRule::Studentized => sstc_challenge_cached(leader, arm, c_n, &mut self.student_caches[k]),
        }
    }
}

impl Policy for SubsamplePolicy {
    fn decide(&mut self, arms: &[ArmHistory], rng: &mut Stream) -> PolicyDecision {
        let k_arms = arms.len();
        if self.min_caches.len() != k_arms {
            self.min_caches = vec![WindowMinCache::default(); k_arms];
            self.student_caches = vec![StudentCache::default(); k_arms];
        }
        let counts: Vec<usize> = arms.iter().map(ArmHistory::count).collect();
        let means: Vec<f64> = arms.iter().map(ArmHistory::mean).collect();
        let n: usize = counts.iter().sum();
        let c_n = self.schedule.threshold(n);

        let leader = select_leader(&counts, &means, self.previous_leader, rng);
        if self.previous_leader != Some(leader) {
            self.min_caches.iter_mut().for_each(WindowMinCache::invalidate);
            self.student_caches.iter_mut().for_each(StudentCache::invalidate);
        }
        self.previous_leader = Some(leader);
        self.round += 1;

        let mut winners = Vec::new();
        for (k, arm) in arms.iter().enumerate() {
            if k != leader && self.challenge(&arms[leader], k, arm, c_n).challenger_wins() {
                winners.push(k);
            }
        }
        if winners.is_empty() {
            PolicyDecision::single(leader)
        } else {
            PolicyDecision::new(winners)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn rng() -> Stream {
        Stream::seed_from_u64(5)
    }

    #[test]
    fn schedule_default() {
        let s = ExplorationSchedule::default();
        assert_eq!(s.threshold(1), 0.0);
        assert!((s.threshold(100) - 100f64.ln().sqrt()).abs() < 1e-15);
        let mut last = 0.0;
        for n in 1..5000 {
            let c = s.threshold(n);
            assert!(c >= last);
            last = c;
        }
    }

    #[test]
    fn leader_unique_max_count() {
        assert_eq!(select_leader(&[3, 5, 4], &[9.0, -1.0, 9.0], None, &mut rng()), 1);
    }

    #[test]
    fn leader_tie_on_count_prefers_mean() {
        assert_eq!(select_leader(&[4, 4], &[0.5, 0.7], Some(0), &mut rng()), 1);
    }

    #[test]
    fn leader_tie_on_mean_keeps_previous() {
        assert_eq!(select_leader(&[4, 4], &[0.6, 0.6], Some(0), &mut rng()), 0);
        assert_eq!(select_leader(&[4, 4], &[0.6, 0.6], Some(1), &mut rng()), 1);
    }

    #[test]
    fn leader_full_tie_is_uniform() {
        let mut r = rng();
        let mut hits = [0usize; 3];
        for _ in 0..3000 {
            hits[select_leader(&[2, 2, 2], &[1.0, 1.0, 1.0], None, &mut r)] += 1;
        }
        for h in hits {
            assert!((h as f64 - 1000.0).abs() < 4.0 * (3000.0f64 * (1.0 / 3.0) * (2.0 / 3.0)).sqrt());
        }
    }

    #[test]
    fn equal_sizes_sample_leader() {
        let h = ArmHistory::from_rewards(&[1.0, 0.0, 1.0]);
        let arms = vec![h.clone(), h];
        let d = SubsamplePolicy::ssmc().decide(&arms, &mut rng());
        assert_eq!(d.len(), 1);
        assert!(d.contains(0) || d.contains(1));
    }

    #[test]
    fn small_challengers_all_sampled() {
        let arms = vec![
            ArmHistory::from_rewards(&[5.0; 10]),
            ArmHistory::from_rewards(&[0.0]),
            ArmHistory::from_rewards(&[0.0]),
        ];
        // n = 12, c_n = sqrt(log 12) ≈ 1.58 > 1
        let d = SubsamplePolicy::ssmc().decide(&arms, &mut rng());
        assert_eq!(d.arms(), &[1, 2]);
    }

    #[test]
    fn leader_sampled_when_all_challengers_lose() {
        let arms = vec![
            ArmHistory::from_rewards(&[5.0; 10]),
            ArmHistory::from_rewards(&[0.0; 4]),
        ];
        let d = SubsamplePolicy::ssmc().decide(&arms, &mut rng());
        assert_eq!(d.arms(), &[0]);
    }
}
