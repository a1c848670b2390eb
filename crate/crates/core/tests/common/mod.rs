#![allow(dead_code)]

use banditlab::harness::{preset, run_cell, run_experiment, PolicySpec, Scenario, PRESET_NAMES};
use banditlab::subsample::{
    besa_round, ssmc_challenge, ssmc_star_challenge, sstc_challenge, sstc_challenge_cached, ChallengeRule,
    ExplorationSchedule, StudentCache, SubsamplePolicy, WindowMinCache,
};
use banditlab::{ArmHistory, Policy, Stream};
use rand::{Rng, SeedableRng};
use rand_distr::{Distribution, StandardNormal};

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation with divisor `len − 1`, computed in two passes.
pub fn sd(xs: &[f64]) -> f64 {
    let m = mean(xs);
    (xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (xs.len() - 1) as f64).sqrt()
}

/// Challenge outcome computed straight from the reward vectors.
pub fn brute_mean_challenge(leader: &[f64], challenger: &[f64], c_n: f64, blocks: bool) -> bool {
    let (nz, nk) = (leader.len(), challenger.len());
    if nk == nz {
        return false;
    }
    if (nk as f64) < c_n {
        return true;
    }
    let target: f64 = challenger.iter().sum();
    let starts: Vec<usize> = if blocks { (0..nz / nk).map(|u| u * nk).collect() } else { (0..=nz - nk).collect() };
    starts.into_iter().any(|s| target >= leader[s..s + nk].iter().sum::<f64>())
}

fn student(d: f64, s: f64) -> f64 {
    if s > 0.0 {
        d / s
    } else if d > 0.0 {
        f64::INFINITY
    } else if d < 0.0 {
        f64::NEG_INFINITY
    } else {
        0.0
    }
}

pub fn brute_student_challenge(leader: &[f64], challenger: &[f64], c_n: f64) -> bool {
    let (nz, nk) = (leader.len(), challenger.len());
    if nk == nz {
        return false;
    }
    if (nk as f64) < c_n.max(2.0) {
        return true;
    }
    let x = mean(leader);
    let mk = mean(challenger);
    if mk >= x {
        return true;
    }
    let lhs = student(mk - x, sd(challenger));
    (0..=nz - nk).any(|s| {
        let w = &leader[s..s + nk];
        lhs >= student(mean(w) - x, sd(w))
    })
}

/// Grows a leader and a challenger history at random and compares the cached
/// SSMC / SSMC* / SSTC challenges with brute force after every step.
/// Returns the number of states checked.
pub fn check_cache_equivalence(seed: u64, states: usize) -> Result<usize, String> {
    let mut rng = Stream::seed_from_u64(seed);
    let mut checked = 0;
    while checked < states {
        let integer = rng.random_bool(0.5);
        let draw = |rng: &mut Stream| -> f64 {
            if integer {
                rng.random_range(0..4) as f64
            } else {
                StandardNormal.sample(rng)
            }
        };
        let mut leader = ArmHistory::new();
        let mut challenger = ArmHistory::new();
        for _ in 0..rng.random_range(2..6) {
            leader.record(draw(&mut rng));
        }
        challenger.record(draw(&mut rng));
        let mut min_cache = WindowMinCache::default();
        let mut student_cache = StudentCache::default();
        for _ in 0..60 {
            if rng.random_bool(0.7) || challenger.count() + 1 >= leader.count() {
                leader.record(draw(&mut rng));
            } else {
                challenger.record(draw(&mut rng));
            }
            let c_n = rng.random_range(0.0..3.0);
            let l = leader.rewards();
            let c = challenger.rewards();
            let cached = ssmc_challenge(&leader, &challenger, c_n, &mut min_cache).challenger_wins();
            if cached != brute_mean_challenge(l, c, c_n, false) {
                return Err(format!("SSMC cache disagrees: leader {l:?} challenger {c:?} c_n {c_n}"));
            }
            if ssmc_star_challenge(&leader, &challenger, c_n).challenger_wins() != brute_mean_challenge(l, c, c_n, true) {
                return Err(format!("SSMC* disagrees: leader {l:?} challenger {c:?} c_n {c_n}"));
            }
            if !integer {
                let direct = sstc_challenge(&leader, &challenger, c_n).challenger_wins();
                let cached = sstc_challenge_cached(&leader, &challenger, c_n, &mut student_cache).challenger_wins();
                let brute = brute_student_challenge(l, c, c_n);
                if direct != brute || cached != brute {
                    return Err(format!("SSTC disagrees: leader {l:?} challenger {c:?} c_n {c_n}"));
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn random_histories(rng: &mut Stream, integer: bool) -> Vec<Vec<f64>> {
    let k = rng.random_range(2..6);
    (0..k)
        .map(|_| {
            let n = rng.random_range(1..40);
            (0..n)
                .map(|_| if integer { rng.random_range(-3..4) as f64 } else { StandardNormal.sample(rng) })
                .collect()
        })
        .collect()
}

fn decide(policy: &mut dyn Policy, arms: &[Vec<f64>], seed: u64) -> Vec<usize> {
    let hist: Vec<ArmHistory> = arms.iter().map(|a| ArmHistory::from_rewards(a)).collect();
    policy.decide(&hist, &mut Stream::seed_from_u64(seed)).arms().to_vec()
}

/// Decisions of every subsample policy are unchanged by `y ↦ a·y + b`, `a > 0`.
/// Mean-based rules use integer rewards with `a` a power of two and integer
/// `b` so the transformed sums stay exact.
pub fn check_affine_invariance(seed: u64, states: usize) -> Result<usize, String> {
    let mut rng = Stream::seed_from_u64(seed);
    for i in 0..states {
        let integer = i % 2 == 0;
        let arms = random_histories(&mut rng, integer);
        let (a, b) = if integer {
            (2f64.powi(rng.random_range(-3..4)), rng.random_range(-20..20) as f64)
        } else {
            (rng.random_range(0.25..8.0), rng.random_range(-10.0..10.0))
        };
        let moved: Vec<Vec<f64>> = arms.iter().map(|v| v.iter().map(|y| a * y + b).collect()).collect();
        let decision_seed = rng.random();
        let rules: &[ChallengeRule] = if integer {
            &[ChallengeRule::Mean, ChallengeRule::Blocks]
        } else {
            &[ChallengeRule::Studentized]
        };
        for &rule in rules {
            let make = || SubsamplePolicy::new(rule, ExplorationSchedule::default());
            let before = decide(&mut make(), &arms, decision_seed);
            let after = decide(&mut make(), &moved, decision_seed);
            if before != after {
                return Err(format!("{rule:?} not affine invariant (a={a}, b={b}) on {arms:?}"));
            }
        }
        if integer {
            let hist = |v: &[Vec<f64>]| v.iter().map(|a| ArmHistory::from_rewards(a)).collect::<Vec<_>>();
            let before = besa_round(&hist(&arms), &mut Stream::seed_from_u64(decision_seed));
            let after = besa_round(&hist(&moved), &mut Stream::seed_from_u64(decision_seed));
            if before != after {
                return Err(format!("BESA not affine invariant (a={a}, b={b}) on {arms:?}"));
            }
        }
    }
    Ok(states)
}

/// Runs each preset with `replications` replications at `horizon_cap`-capped
/// horizons and checks that every record has exactly N pulls.
pub fn check_exact_n(replications: usize, horizon_cap: usize) -> Result<usize, String> {
    let mut records = 0;
    for name in PRESET_NAMES {
        let mut s = preset(name).map_err(|e| e.to_string())?;
        s.replications = replications;
        s.horizons = s.horizons.iter().map(|&n| n.min(horizon_cap)).collect();
        s.horizons.dedup();
        for spec in &s.policies {
            for &n in &s.horizons {
                for r in run_cell(&s, spec, n).map_err(|e| e.to_string())? {
                    if r.horizon() != n {
                        return Err(format!("{name}/{spec}: {} pulls for N={n}", r.horizon()));
                    }
                    records += 1;
                }
            }
        }
    }
    Ok(records)
}

/// The same scenario at one and eight worker threads gives identical summaries.
pub fn check_replay(scenario: &Scenario) -> Result<(), String> {
    let mut one = scenario.clone();
    one.threads = Some(1);
    let mut eight = scenario.clone();
    eight.threads = Some(8);
    let a = run_experiment(&one).map_err(|e| e.to_string())?;
    let b = run_experiment(&eight).map_err(|e| e.to_string())?;
    if a == b {
        Ok(())
    } else {
        Err("summaries differ between 1 and 8 threads".into())
    }
}

pub fn replay_scenario() -> Scenario {
    let mut s = preset("table1").unwrap();
    s.horizons = vec![300];
    s.replications = 40;
    s.policies = vec![PolicySpec::ssmc(), PolicySpec::besa(), PolicySpec::Thompson, PolicySpec::EpsGreedy { c: 1.0 }];
    s
}
