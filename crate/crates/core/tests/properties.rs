mod common;

use banditlab::harness::{preset, run_cell, run_replication, PolicySpec, Scenario};
use banditlab::env::{ArmModel, ArmSpec, RewardModel};
use banditlab::subsample::{ssmc_challenge, sstc_challenge, sstc_challenge_cached, StudentCache, WindowMinCache};
use banditlab::{ArmHistory, RandomnessContract};
use proptest::prelude::*;

#[test]
fn cache_matches_brute_force_on_ten_thousand_states() {
    let n = common::check_cache_equivalence(1, 10_000).unwrap();
    assert!(n >= 10_000);
}

#[test]
fn subsample_policies_are_affine_invariant() {
    common::check_affine_invariance(2, 1000).unwrap();
}

#[test]
fn every_preset_pulls_exactly_n() {
    common::check_exact_n(2, 2000).unwrap();
}

#[test]
fn one_and_eight_threads_agree() {
    common::check_replay(&common::replay_scenario()).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ssmc_cache_equals_oracle(
        leader in prop::collection::vec(0u8..5, 2..60),
        challenger in prop::collection::vec(0u8..5, 1..30),
        c_n in 0.0f64..4.0,
    ) {
        prop_assume!(challenger.len() <= leader.len());
        let l: Vec<f64> = leader.iter().map(|&v| v as f64).collect();
        let c: Vec<f64> = challenger.iter().map(|&v| v as f64).collect();
        let mut cache = WindowMinCache::default();
        let got = ssmc_challenge(&ArmHistory::from_rewards(&l), &ArmHistory::from_rewards(&c), c_n, &mut cache);
        prop_assert_eq!(got.challenger_wins(), common::brute_mean_challenge(&l, &c, c_n, false));
    }

    #[test]
    fn sstc_cached_equals_direct(
        leader in prop::collection::vec(-5.0f64..5.0, 3..60),
        challenger in prop::collection::vec(-5.0f64..5.0, 2..30),
        c_n in 0.0f64..4.0,
    ) {
        prop_assume!(challenger.len() <= leader.len());
        let lh = ArmHistory::from_rewards(&leader);
        let ch = ArmHistory::from_rewards(&challenger);
        let direct = sstc_challenge(&lh, &ch, c_n).challenger_wins();
        let mut cache = StudentCache::default();
        prop_assert_eq!(sstc_challenge_cached(&lh, &ch, c_n, &mut cache).challenger_wins(), direct);
        prop_assert_eq!(common::brute_student_challenge(&leader, &challenger, c_n), direct);
    }

    #[test]
    fn replications_replay(seed in any::<u64>(), rep in 0u64..1000) {
        let arms = ArmSpec::Fixed(vec![
            ArmModel::Iid(RewardModel::Bernoulli { p: 0.6 }),
            ArmModel::Iid(RewardModel::Normal { mean: 0.4, sd: 0.3 }),
            ArmModel::Iid(RewardModel::Uniform { low: 0.0, high: 1.0 }),
        ]);
        let c = RandomnessContract::new(seed);
        for spec in [PolicySpec::ssmc(), PolicySpec::besa(), PolicySpec::Thompson] {
            let a = run_replication(&arms, &spec, 60, rep, c).unwrap();
            let b = run_replication(&arms, &spec, 60, rep, c).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.horizon(), 60);
        }
    }
}

#[test]
fn seeding_round_only() {
    let s = Scenario {
        name: "two".into(),
        arms: ArmSpec::Fixed(vec![
            ArmModel::Iid(RewardModel::Bernoulli { p: 0.7 }),
            ArmModel::Iid(RewardModel::Bernoulli { p: 0.2 }),
        ]),
        horizons: vec![2],
        replications: 5,
        policies: vec![PolicySpec::ssmc(), PolicySpec::Ucb1, PolicySpec::besa()],
        seed: 3,
        bin_edges: vec![0.0],
        threads: None,
    };
    for spec in &s.policies {
        for r in run_cell(&s, spec, 2).unwrap() {
            assert_eq!(r.pull_counts, vec![1, 1]);
            assert!((r.empirical_regret - 0.5).abs() < 1e-12);
        }
    }
}

#[test]
fn truncation_picks_one_of_two_challengers_uniformly() {
    // Round 2 samples the leader (equal sizes), round 3 recommends both
    // one-observation challengers with a single pull left.
    let s = Scenario {
        name: "truncate".into(),
        arms: ArmSpec::Fixed(vec![
            ArmModel::Iid(RewardModel::Bernoulli { p: 1.0 }),
            ArmModel::Iid(RewardModel::Bernoulli { p: 0.0 }),
            ArmModel::Iid(RewardModel::Bernoulli { p: 0.0 }),
        ]),
        horizons: vec![5],
        replications: 4000,
        policies: vec![PolicySpec::ssmc()],
        seed: 11,
        bin_edges: vec![0.0],
        threads: None,
    };
    let records = run_cell(&s, &s.policies[0], 5).unwrap();
    let first = records.iter().filter(|r| r.pull_counts == vec![2, 2, 1]).count();
    let second = records.iter().filter(|r| r.pull_counts == vec![2, 1, 2]).count();
    assert_eq!(first + second, 4000);
    assert!((first as f64 - 2000.0).abs() < 4.0 * 1000f64.sqrt(), "{first}");
}

#[test]
fn arm_parameters_are_shared_across_the_roster() {
    let s = preset("table2").unwrap();
    let c = RandomnessContract::new(s.seed);
    for rep in 0..20 {
        let a = run_replication(&s.arms, &PolicySpec::sstc(), 50, rep, c).unwrap();
        let b = run_replication(&s.arms, &PolicySpec::Ucb1Tuned, 50, rep, c).unwrap();
        assert_eq!(a.realized_means, b.realized_means);
    }
}

#[test]
fn identical_arms_have_zero_regret() {
    let mut s = preset("table6-scenario1").unwrap();
    s.arms = ArmSpec::Fixed(vec![ArmModel::Iid(RewardModel::Bernoulli { p: 0.5 }); 2]);
    s.horizons = vec![500];
    s.replications = 20;
    let out = banditlab::harness::run_experiment(&s).unwrap();
    for summary in out {
        assert_eq!(summary.mean_regret, 0.0);
        assert_eq!(summary.se_regret, Some(0.0));
    }
}
