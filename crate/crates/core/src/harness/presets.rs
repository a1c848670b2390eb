use super::roster::PolicySpec;
use super::scenario::{Scenario, DEFAULT_REPLICATIONS, DEFAULT_SEED};
use crate::env::{ArmModel, ArmSampler, ArmSpec, MarkovRewardModel, RewardModel};
use crate::error::{Error, Result};

/// Names accepted by [`preset`], in listing order.
pub const PRESET_NAMES: &[&str] = &[
    "table1",
    "table2",
    "example3",
    "table3-lambda1",
    "table3-lambda2",
    "table3-lambda5",
    "table4",
    "table5",
    "table6-scenario1",
    "table6-scenario2",
    "table6-scenario3",
    "table6-scenario4",
    "table7-trunc-exp",
    "table7-trunc-poisson",
    "example7",
    "markov-doeblin",
];

pub fn preset_names() -> &'static [&'static str] {
    PRESET_NAMES
}

/// One-line description for listings.
pub fn preset_description(name: &str) -> Option<&'static str> {
    Some(match name {
        "table1" => "10 N(mu_k,1) arms, mu_k ~ N(0,1) per replication; SSMC vs UCB1, UCB-Agrawal",
        "table2" => "10 N(mu_k,sigma_k^2) arms, mu_k ~ N(0,1), sigma_k^-2 ~ Exp(1); SSTC vs UCB1-tuned, UCB1-Normal",
        "example3" => "normal arms (1.8,0.5),(2,0.7),(1.5,0.5),(2.2,0.3); SSTC",
        "table3-lambda1" | "table3-lambda2" | "table3-lambda5" => {
            "10 double exponential arms, mu_k ~ N(0,1); SSMC, BESA, UCB1-tuned, Boltzmann, eps-greedy"
        }
        "table4" => "double exponential, lambda=1, N=1000; regret histogram for SSMC, BESA, UCB1-tuned",
        "table5" => "double exponential, lambda=1, N=10000; regret histogram for SSMC, BESA, UCB1-tuned",
        "table6-scenario1" => "Bernoulli 0.9 / 0.8, N=20000",
        "table6-scenario2" => "Bernoulli 0.81 / 0.8, N=20000",
        "table6-scenario3" => "Bernoulli 0.1, 0.05 x3, 0.02 x3, 0.01 x3, N=20000",
        "table6-scenario4" => "Bernoulli 0.51, 0.5 x9, N=20000",
        "table7-trunc-exp" => "min(X/10,1), X ~ Exp(1/k), k=1..5, N=20000",
        "table7-trunc-poisson" => "min(X/10,1), X ~ Poisson(0.5+k/3), k=1..6, N=20000",
        "example7" => "Uniform(0.2,0.4) vs Uniform(0,1), N=20000; SSTC vs SSMC",
        "markov-doeblin" => "two 2-state Doeblin chains with normal emissions, stationary means 4/7 and 1/14",
        _ => return None,
    })
}

fn scenario(name: &str, arms: ArmSpec, horizons: &[usize], policies: Vec<PolicySpec>) -> Scenario {
    Scenario {
        name: name.to_string(),
        arms,
        horizons: horizons.to_vec(),
        replications: DEFAULT_REPLICATIONS,
        policies,
        seed: DEFAULT_SEED,
        bin_edges: vec![0.0],
        threads: None,
    }
}

fn fixed(models: impl IntoIterator<Item = RewardModel>) -> ArmSpec {
    ArmSpec::Fixed(models.into_iter().map(ArmModel::Iid).collect())
}

fn bernoulli(ps: &[f64]) -> ArmSpec {
    fixed(ps.iter().map(|&p| RewardModel::Bernoulli { p }))
}

fn double_exponential_roster() -> Vec<PolicySpec> {
    let mut roster = vec![PolicySpec::ssmc(), PolicySpec::besa(), PolicySpec::Ucb1Tuned];
    roster.extend([0.1, 0.2, 0.5, 1.0].map(|tau| PolicySpec::Boltzmann { tau }));
    roster.extend([0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0].map(|c| PolicySpec::EpsGreedy { c }));
    roster
}

fn double_exponential_arms(scale: f64) -> ArmSpec {
    ArmSpec::Sampled { count: 10, sampler: ArmSampler::DoubleExponentialMeans { scale } }
}

fn bernoulli_roster() -> Vec<PolicySpec> {
    vec![
        PolicySpec::ssmc(),
        PolicySpec::ssmc_star(),
        PolicySpec::besa(),
        PolicySpec::KlUcb,
        PolicySpec::KlUcbPlus,
        PolicySpec::Thompson,
    ]
}

fn truncated_roster() -> Vec<PolicySpec> {
    vec![PolicySpec::ssmc(), PolicySpec::ssmc_star(), PolicySpec::besa(), PolicySpec::besat()]
}

/// The Doeblin-chain arms used for the Markov reward experiments.
pub fn markov_doeblin_arms() -> ArmSpec {
    let transition = vec![vec![0.7, 0.3], vec![0.4, 0.6]];
    let normal = |mean| RewardModel::Normal { mean, sd: 1.0 };
    let chain = |hi, lo| {
        ArmModel::Markov(MarkovRewardModel::new(transition.clone(), vec![normal(hi), normal(lo)]).expect("valid chain"))
    };
    ArmSpec::Fixed(vec![chain(1.0, 0.0), chain(0.5, -0.5)])
}

pub fn preset(name: &str) -> Result<Scenario> {
    let mut s = match name {
        "table1" => scenario(
            name,
            ArmSpec::Sampled { count: 10, sampler: ArmSampler::NormalMeans { sd: 1.0 } },
            &[1000, 10_000],
            vec![PolicySpec::ssmc(), PolicySpec::Ucb1, PolicySpec::UcbAgrawal],
        ),
        "table2" => scenario(
            name,
            ArmSpec::Sampled { count: 10, sampler: ArmSampler::NormalMeansExpPrecision },
            &[1000, 10_000],
            vec![PolicySpec::sstc(), PolicySpec::Ucb1Tuned, PolicySpec::Ucb1Normal],
        ),
        "example3" => scenario(
            name,
            fixed([(1.8, 0.5), (2.0, 0.7), (1.5, 0.5), (2.2, 0.3)].map(|(mean, sd)| RewardModel::Normal { mean, sd })),
            &[1000, 10_000],
            vec![PolicySpec::sstc()],
        ),
        "table3-lambda1" => scenario(name, double_exponential_arms(1.0), &[1000, 10_000], double_exponential_roster()),
        "table3-lambda2" => scenario(name, double_exponential_arms(2.0), &[1000, 10_000], double_exponential_roster()),
        "table3-lambda5" => scenario(name, double_exponential_arms(5.0), &[1000, 10_000], double_exponential_roster()),
        "table4" => {
            let mut s = scenario(
                name,
                double_exponential_arms(1.0),
                &[1000],
                vec![PolicySpec::ssmc(), PolicySpec::besa(), PolicySpec::Ucb1Tuned],
            );
            s.bin_edges = vec![0.0, 200.0, 400.0, 600.0, 800.0, 1000.0, 1200.0];
            s
        }
        "table5" => {
            let mut s = scenario(
                name,
                double_exponential_arms(1.0),
                &[10_000],
                vec![PolicySpec::ssmc(), PolicySpec::besa(), PolicySpec::Ucb1Tuned],
            );
            s.bin_edges = vec![0.0, 1000.0, 2000.0, 3000.0, 4000.0, 5000.0, 10_000.0];
            s
        }
        "table6-scenario1" => scenario(name, bernoulli(&[0.9, 0.8]), &[20_000], bernoulli_roster()),
        "table6-scenario2" => scenario(name, bernoulli(&[0.81, 0.8]), &[20_000], bernoulli_roster()),
        "table6-scenario3" => scenario(
            name,
            bernoulli(&[0.1, 0.05, 0.05, 0.05, 0.02, 0.02, 0.02, 0.01, 0.01, 0.01]),
            &[20_000],
            bernoulli_roster(),
        ),
        "table6-scenario4" => {
            let mut ps = vec![0.51];
            ps.extend([0.5; 9]);
            scenario(name, bernoulli(&ps), &[20_000], bernoulli_roster())
        }
        "table7-trunc-exp" => scenario(
            name,
            fixed((1..=5).map(|k| RewardModel::TruncatedExponential { rate: 1.0 / k as f64 })),
            &[20_000],
            truncated_roster(),
        ),
        "table7-trunc-poisson" => scenario(
            name,
            fixed((1..=6).map(|k| RewardModel::TruncatedPoisson { rate: 0.5 + k as f64 / 3.0 })),
            &[20_000],
            truncated_roster(),
        ),
        "example7" => scenario(
            name,
            fixed([RewardModel::Uniform { low: 0.2, high: 0.4 }, RewardModel::Uniform { low: 0.0, high: 1.0 }]),
            &[20_000],
            vec![PolicySpec::sstc(), PolicySpec::ssmc(), PolicySpec::Thompson],
        ),
        "markov-doeblin" => scenario(
            name,
            markov_doeblin_arms(),
            &[1000, 10_000, 100_000],
            vec![PolicySpec::ssmc(), PolicySpec::ssmc_star()],
        ),
        _ => return Err(Error::UnknownScenario(name.to_string())),
    };
    s.validate()?;
    s.name = name.to_string();
    Ok(s)
}
