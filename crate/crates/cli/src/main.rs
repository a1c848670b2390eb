use banditlab::harness::{
    efficiency_diagnostic, histogram_table, preset, preset_description, preset_names, run_experiment, scenario_bound,
    text_table, write_csv, PolicySpec, Scenario, ScenarioBound,
};
use banditlab::rng::derive_stream;
use banditlab::theory::{
    verify_b2_bound, verify_chisq_chernoff, verify_ctj_inequality, verify_min1_asymptotic, LowerBoundReport,
};
use banditlab::Result;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "banditlab", version, about = "Subsample-comparison bandit experiments and theory checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a preset or a TOML scenario file and report regret.
    Run {
        /// Preset name or path to a scenario file.
        scenario: String,
        /// Comma-separated policy labels replacing the roster, e.g. SSMC,UCB1,Boltzmann(tau=0.2).
        #[arg(long, value_delimiter = ',')]
        policies: Vec<String>,
        /// Comma-separated horizons.
        #[arg(long = "N", value_delimiter = ',')]
        horizons: Vec<usize>,
        /// Replications per horizon.
        #[arg(long = "J")]
        replications: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
        /// Comma-separated histogram bin edges.
        #[arg(long, value_delimiter = ',')]
        bins: Vec<f64>,
        /// Write the CSV summary here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an inequality from the analysis numerically.
    Verify {
        check: Check,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Emit CSV rows instead of prose.
        #[arg(long)]
        csv: bool,
    },
    /// Asymptotic regret lower bound of a fixed-arm scenario.
    Bounds {
        scenario: String,
        #[arg(long = "N")]
        horizon: Option<u64>,
    },
    /// Mean inferior-arm pulls per log N against the efficient limit.
    Efficiency {
        scenario: String,
        #[arg(long, default_value = "SSMC")]
        policy: String,
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        grid: Vec<usize>,
        #[arg(long = "J", default_value_t = 500)]
        replications: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// List the built-in scenario presets.
    ListScenarios,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Ctj,
    B2,
    Min1,
    Chernoff,
    All,
}

fn load(name: &str) -> Result<Scenario> {
    if Path::new(name).is_file() {
        Scenario::load(name)
    } else {
        preset(name)
    }
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Run { scenario, policies, horizons, replications, seed, threads, bins, out } => {
            let mut s = load(&scenario)?;
            if !policies.is_empty() {
                s.policies = policies.iter().map(|p| p.parse()).collect::<Result<_>>()?;
            }
            if !horizons.is_empty() {
                s.horizons = horizons;
            }
            if !bins.is_empty() {
                s.bin_edges = bins;
            }
            s.replications = replications.unwrap_or(s.replications);
            s.seed = seed.unwrap_or(s.seed);
            s.threads = threads.or(s.threads);
            let summaries = run_experiment(&s)?;
            print!("{}", text_table(&summaries));
            if s.bin_edges.len() > 1 {
                println!();
                for n in &s.horizons {
                    let cell: Vec<_> = summaries.iter().filter(|x| x.horizon == *n).cloned().collect();
                    println!("N={n}");
                    print!("{}", histogram_table(&cell));
                }
            }
            if let Some(path) = out {
                write_csv(&summaries, std::fs::File::create(&path)?)?;
                eprintln!("wrote {}", path.display());
            }
            Ok(true)
        }
        Command::Verify { check, seed, csv } => Ok(verify(check, seed, csv)),
        Command::Bounds { scenario, horizon } => {
            let s = load(&scenario)?;
            for n in horizon.map_or_else(|| s.horizons.iter().map(|&n| n as u64).collect(), |n| vec![n]) {
                match scenario_bound(&s, n)? {
                    ScenarioBound::LaiRobbins { family, report } => {
                        println!("{} N={n}: Lai-Robbins bound, {family:?}", s.name);
                        print_bound(&report, "D(f_k|f_*)");
                    }
                    ScenarioBound::BurnetasKatehakis { report } => {
                        println!("{} N={n}: Burnetas-Katehakis bound (normal, unknown variances)", s.name);
                        print_bound(&report, "M(gap/sd_k)");
                    }
                    ScenarioBound::Unavailable { reason } => println!("{} N={n}: no bound ({reason})", s.name),
                }
            }
            Ok(true)
        }
        Command::Efficiency { scenario, policy, grid, replications, seed } => {
            let mut s = load(&scenario)?;
            s.seed = seed.unwrap_or(s.seed);
            let spec: PolicySpec = policy.parse()?;
            println!("{:>4} {:>8} {:>12} {:>10} {:>10}", "arm", "N", "E n_k", "n_k/logN", "1/D");
            for r in efficiency_diagnostic(&s, &spec, &grid, replications)? {
                println!("{:>4} {:>8} {:>12.2} {:>10.3} {:>10.3}", r.arm, r.horizon, r.mean_pulls, r.ratio, r.limit);
            }
            Ok(true)
        }
        Command::ListScenarios => {
            for name in preset_names() {
                println!("{name:<22} {}", preset_description(name).unwrap_or(""));
            }
            Ok(true)
        }
    }
}

fn print_bound(report: &LowerBoundReport, info: &str) {
    println!("{:>4} {:>10} {:>12} {:>12}", "arm", "gap", info, "coefficient");
    for a in &report.arms {
        println!("{:>4} {:>10.4} {:>12.6} {:>12.4}", a.arm, a.gap, a.information, a.coefficient);
    }
    println!("sum of coefficients {:.4}; bound {:.3}", report.coefficient_sum(), report.bound());
}

fn verify(check: Check, seed: u64, csv: bool) -> bool {
    let all = matches!(check, Check::All);
    let mut ok = true;
    if csv {
        println!("check,parameters,value,bound,pass");
    }
    if all || matches!(check, Check::Ctj) {
        let r = verify_ctj_inequality(50);
        if csv {
            println!("ctj,t_max=50,{},{},{}", r.checked, r.equalities, r.passed());
        } else {
            println!(
                "ctj: {} coefficient pairs for t <= {}, {} with equality, {}",
                r.checked,
                r.t_max,
                r.equalities,
                match r.first_violation {
                    None => "all hold".to_string(),
                    Some((t, j)) => format!("violated at t={t}, j={j}"),
                }
            );
        }
        ok &= r.passed();
    }
    if all || matches!(check, Check::B2) {
        for t in 1..=10 {
            for delta in [0.5, 1.0] {
                let r = verify_b2_bound(t, delta, &[0.0, 1.0, 5.0]);
                for p in &r.points {
                    if csv {
                        println!("b2,t={t};delta={delta};z={},{:e},{:e},{}", p.z, p.lhs, p.rhs, p.holds);
                    } else if !p.holds {
                        println!("b2: t={t} delta={delta} z={}: {:e} > {:e}", p.z, p.lhs, p.rhs);
                    }
                }
                ok &= r.passed();
            }
        }
        if !csv {
            println!("b2: t <= 10, delta in {{0.5, 1}}, z in {{0, 1, 5}}: {}", if ok { "all hold" } else { "FAILED" });
        }
    }
    if all || matches!(check, Check::Chernoff) {
        let mut rng = derive_stream(seed, 0, "verify/chernoff");
        for t in [5, 11, 31] {
            let r = verify_chisq_chernoff(t, &[0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0], 100_000, &mut rng);
            for p in &r.points {
                if csv {
                    println!("chernoff,t={t};x={},{},{},{}", p.x, p.empirical, p.bound, p.holds);
                } else {
                    println!("chernoff: t={t} x={:<5} empirical {:.5} bound {:.5} {}", p.x, p.empirical, p.bound, if p.holds { "ok" } else { "FAIL" });
                }
            }
            ok &= r.passed();
        }
    }
    if all || matches!(check, Check::Min1) {
        let mut rng = derive_stream(seed, 0, "verify/min1");
        let n = 1_000_000;
        let n2 = (2.0 * (n as f64).ln()).ceil() as usize;
        let r = verify_min1_asymptotic(n, n2, 200, &mut rng);
        if csv {
            println!("min1,n={n};n2={n2},{},{},{}", r.median(), r.lower_reference, r.passed());
        } else {
            println!(
                "min1: n={n} n2={n2}: median ratio {:.4} (deciles {:.4}, {:.4}); lower reference {:.4}; {}",
                r.median(),
                r.lower_decile(),
                r.upper_decile(),
                r.lower_reference,
                if r.passed() { "in band" } else { "OUT OF BAND" }
            );
        }
        ok &= r.passed();
    }
    ok
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
