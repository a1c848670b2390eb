use crate::baseline::{
    Boltzmann, EpsilonGreedy, EpsilonSchedule, IndexPolicy, IndexRule, KlExploration, Thompson, Ucb1Normal,
};
use crate::error::{Error, Result};
use crate::policy::Policy;
use crate::subsample::{BesaPolicy, ChallengeRule, ExplorationSchedule, SubsamplePolicy};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

fn one() -> usize {
    1
}

/// A policy together with its parameters, as named in a scenario roster.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum PolicySpec {
    Ssmc {
        #[serde(default)]
        schedule: ExplorationSchedule,
    },
    Sstc {
        #[serde(default)]
        schedule: ExplorationSchedule,
    },
    SsmcStar {
        #[serde(default)]
        schedule: ExplorationSchedule,
    },
    Besa {
        #[serde(default = "one")]
        warm_start: usize,
    },
    Ucb1,
    UcbAgrawal,
    /// Uses the scenario horizon.
    UcbLai,
    Ucb1Normal,
    Ucb1Tuned,
    KlUcb,
    KlUcbPlus,
    Thompson,
    Boltzmann {
        tau: f64,
    },
    /// `ε_n = min(1, 3c / n)`.
    EpsGreedy {
        c: f64,
    },
}

impl PolicySpec {
    pub fn ssmc() -> Self {
        Self::Ssmc { schedule: ExplorationSchedule::default() }
    }

    pub fn sstc() -> Self {
        Self::Sstc { schedule: ExplorationSchedule::default() }
    }

    pub fn ssmc_star() -> Self {
        Self::SsmcStar { schedule: ExplorationSchedule::default() }
    }

    pub fn besa() -> Self {
        Self::Besa { warm_start: 1 }
    }

    pub fn besat() -> Self {
        Self::Besa { warm_start: 10 }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: String| Err(Error::InvalidParameter(what));
        match *self {
            Self::Ssmc { schedule } | Self::Sstc { schedule } | Self::SsmcStar { schedule } => match schedule {
                ExplorationSchedule::LogPower { exponent } if !(exponent > 0.0 && exponent < 1.0) => {
                    bad(format!("exploration exponent {exponent} outside (0, 1)"))
                }
                _ => Ok(()),
            },
            Self::Besa { warm_start } if warm_start == 0 => bad("BESA warm start must be at least 1".into()),
            Self::Boltzmann { tau } if !(tau > 0.0 && tau.is_finite()) => bad(format!("Boltzmann tau {tau}")),
            Self::EpsGreedy { c } if !(c > 0.0 && c.is_finite()) => bad(format!("epsilon-greedy c {c}")),
            _ => Ok(()),
        }
    }

    /// Observations per arm taken before the policy is first consulted.
    pub fn warm_start(&self) -> usize {
        match *self {
            Self::Besa { warm_start } => warm_start,
            Self::Ucb1Normal | Self::Ucb1Tuned => 2,
            _ => 1,
        }
    }

    pub fn build(&self, horizon: usize) -> Result<Box<dyn Policy>> {
        self.validate()?;
        Ok(match *self {
            Self::Ssmc { schedule } => Box::new(SubsamplePolicy::new(ChallengeRule::Mean, schedule)),
            Self::Sstc { schedule } => Box::new(SubsamplePolicy::new(ChallengeRule::Studentized, schedule)),
            Self::SsmcStar { schedule } => Box::new(SubsamplePolicy::new(ChallengeRule::Blocks, schedule)),
            Self::Besa { warm_start } => Box::new(BesaPolicy::new(warm_start)),
            Self::Ucb1 => Box::new(IndexPolicy::new(IndexRule::Ucb1)),
            Self::UcbAgrawal => Box::new(IndexPolicy::new(IndexRule::UcbAgrawal)),
            Self::UcbLai => Box::new(IndexPolicy::new(IndexRule::UcbLai { horizon })),
            Self::Ucb1Normal => Box::new(Ucb1Normal),
            Self::Ucb1Tuned => Box::new(IndexPolicy::new(IndexRule::Ucb1Tuned)),
            Self::KlUcb => Box::new(IndexPolicy::new(IndexRule::KlUcb(KlExploration::Standard))),
            Self::KlUcbPlus => Box::new(IndexPolicy::new(IndexRule::KlUcb(KlExploration::Plus))),
            Self::Thompson => Box::new(Thompson),
            Self::Boltzmann { tau } => Box::new(Boltzmann::new(tau)?),
            Self::EpsGreedy { c } => Box::new(EpsilonGreedy::new(EpsilonSchedule::three_c(c))?),
        })
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

fn schedule_suffix(schedule: &ExplorationSchedule) -> String {
    match schedule {
        ExplorationSchedule::SqrtLog => String::new(),
        ExplorationSchedule::LogPower { exponent } => format!("(p={exponent})"),
        ExplorationSchedule::Zero => "(c=0)".into(),
    }
}

impl fmt::Display for PolicySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Ssmc { schedule } => write!(f, "SSMC{}", schedule_suffix(schedule)),
            Self::Sstc { schedule } => write!(f, "SSTC{}", schedule_suffix(schedule)),
            Self::SsmcStar { schedule } => write!(f, "SSMC*{}", schedule_suffix(schedule)),
            Self::Besa { warm_start: 1 } => f.write_str("BESA"),
            Self::Besa { warm_start: 10 } => f.write_str("BESAT"),
            Self::Besa { warm_start } => write!(f, "BESA(w={warm_start})"),
            Self::Ucb1 => f.write_str("UCB1"),
            Self::UcbAgrawal => f.write_str("UCB-Agrawal"),
            Self::UcbLai => f.write_str("UCB-Lai"),
            Self::Ucb1Normal => f.write_str("UCB1-Normal"),
            Self::Ucb1Tuned => f.write_str("UCB1-tuned"),
            Self::KlUcb => f.write_str("KL-UCB"),
            Self::KlUcbPlus => f.write_str("KL-UCB+"),
            Self::Thompson => f.write_str("Thompson"),
            Self::Boltzmann { tau } => write!(f, "Boltzmann(tau={tau})"),
            Self::EpsGreedy { c } => write!(f, "eps-greedy(c={c})"),
        }
    }
}

fn parameter(s: &str, prefix: &str, key: &str) -> Option<Result<f64>> {
    let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    let value = inner.strip_prefix(key).and_then(|v| v.strip_prefix('=')).unwrap_or(inner);
    Some(value.trim().parse().map_err(|_| Error::InvalidParameter(format!("cannot parse {key} in {s:?}"))))
}

/// Parses `SSMC(p=0.4)`, `SSTC(c=0)` and the like.
fn with_schedule(s: &str) -> Result<Option<PolicySpec>> {
    let Some(open) = s.find('(') else {
        return Ok(None);
    };
    let (name, suffix) = s.split_at(open);
    let build: fn(ExplorationSchedule) -> PolicySpec = match name.to_ascii_lowercase().as_str() {
        "ssmc" => |schedule| PolicySpec::Ssmc { schedule },
        "sstc" => |schedule| PolicySpec::Sstc { schedule },
        "ssmc*" => |schedule| PolicySpec::SsmcStar { schedule },
        _ => return Ok(None),
    };
    if suffix.eq_ignore_ascii_case("(c=0)") {
        return Ok(Some(build(ExplorationSchedule::Zero)));
    }
    match parameter(suffix, "", "p") {
        Some(p) => Ok(Some(build(ExplorationSchedule::LogPower { exponent: p? }))),
        None => Ok(None),
    }
}

impl FromStr for PolicySpec {
    type Err = Error;

    /// Parses the labels produced by `Display`, case-insensitively for the
    /// fixed names.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let fixed = match s.to_ascii_lowercase().as_str() {
            "ssmc" => Some(Self::ssmc()),
            "sstc" => Some(Self::sstc()),
            "ssmc*" => Some(Self::ssmc_star()),
            "besa" => Some(Self::besa()),
            "besat" => Some(Self::besat()),
            "ucb1" => Some(Self::Ucb1),
            "ucb-agrawal" => Some(Self::UcbAgrawal),
            "ucb-lai" => Some(Self::UcbLai),
            "ucb1-normal" => Some(Self::Ucb1Normal),
            "ucb1-tuned" => Some(Self::Ucb1Tuned),
            "kl-ucb" => Some(Self::KlUcb),
            "kl-ucb+" => Some(Self::KlUcbPlus),
            "thompson" => Some(Self::Thompson),
            _ => None,
        };
        if let Some(spec) = fixed {
            return Ok(spec);
        }
        if let Some(spec) = with_schedule(s)? {
            spec.validate()?;
            return Ok(spec);
        }
        let spec = if let Some(tau) = parameter(s, "Boltzmann", "tau") {
            Self::Boltzmann { tau: tau? }
        } else if let Some(c) = parameter(s, "eps-greedy", "c") {
            Self::EpsGreedy { c: c? }
        } else if let Some(w) = parameter(s, "BESA", "w") {
            let w = w?;
            if w.fract() != 0.0 || w < 1.0 {
                return Err(Error::InvalidParameter(format!("BESA warm start {w}")));
            }
            Self::Besa { warm_start: w as usize }
        } else {
            return Err(Error::InvalidParameter(format!("unknown policy {s:?}")));
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        let roster = [
            PolicySpec::ssmc(),
            PolicySpec::sstc(),
            PolicySpec::ssmc_star(),
            PolicySpec::besa(),
            PolicySpec::besat(),
            PolicySpec::Besa { warm_start: 3 },
            PolicySpec::Ucb1,
            PolicySpec::UcbAgrawal,
            PolicySpec::UcbLai,
            PolicySpec::Ucb1Normal,
            PolicySpec::Ucb1Tuned,
            PolicySpec::KlUcb,
            PolicySpec::KlUcbPlus,
            PolicySpec::Thompson,
            PolicySpec::Boltzmann { tau: 0.2 },
            PolicySpec::EpsGreedy { c: 0.5 },
            PolicySpec::Ssmc { schedule: ExplorationSchedule::LogPower { exponent: 0.4 } },
            PolicySpec::Sstc { schedule: ExplorationSchedule::Zero },
            PolicySpec::SsmcStar { schedule: ExplorationSchedule::LogPower { exponent: 0.3 } },
        ];
        for spec in roster {
            assert_eq!(spec.label().parse::<PolicySpec>().unwrap(), spec);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!("Boltzmann(tau=0)".parse::<PolicySpec>().is_err());
        assert!("eps-greedy(c=-1)".parse::<PolicySpec>().is_err());
        assert!("UCB9".parse::<PolicySpec>().is_err());
        assert!("SSMC(p=1.5)".parse::<PolicySpec>().is_err());
        assert!("UCB1(p=0.5)".parse::<PolicySpec>().is_err());
        assert!(PolicySpec::Besa { warm_start: 0 }.build(10).is_err());
    }

    #[test]
    fn warm_starts() {
        assert_eq!(PolicySpec::besat().warm_start(), 10);
        assert_eq!(PolicySpec::Ucb1Tuned.warm_start(), 2);
        for spec in [PolicySpec::besat(), PolicySpec::Ucb1Tuned, PolicySpec::Ucb1Normal, PolicySpec::ssmc()] {
            assert_eq!(spec.build(100).unwrap().initial_pulls(), spec.warm_start());
        }
    }
}
