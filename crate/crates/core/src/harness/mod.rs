//! Scenarios, the round driver, replication scheduling and reporting.

mod diagnostics;
mod driver;
mod presets;
mod report;
mod roster;
mod scenario;
mod summary;

pub use diagnostics::{efficiency_diagnostic, infer_family, scenario_bound, EfficiencyRow, ScenarioBound};
pub use driver::{policy_label, reward_label, run_cell, run_replication, truncation_label};
pub use presets::{markov_doeblin_arms, preset, preset_description, preset_names, PRESET_NAMES};
pub use report::{csv_header, histogram_table, text_table, write_csv, NOT_AVAILABLE};
pub use roster::PolicySpec;
pub use scenario::{Scenario, DEFAULT_REPLICATIONS, DEFAULT_SEED};
pub use summary::{histogram, ExperimentSummary, Histogram};

use crate::error::Result;

/// Runs every (policy, horizon) cell of the scenario, policy-major.
pub fn run_experiment(scenario: &Scenario) -> Result<Vec<ExperimentSummary>> {
    scenario.validate()?;
    let mut out = Vec::new();
    for spec in &scenario.policies {
        for &n in &scenario.horizons {
            let records = run_cell(scenario, spec, n)?;
            out.push(ExperimentSummary::from_records(
                &scenario.name,
                &spec.label(),
                n,
                scenario.seed,
                &records,
                &scenario.bin_edges,
            ));
        }
    }
    Ok(out)
}
