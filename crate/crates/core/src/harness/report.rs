use super::summary::ExperimentSummary;
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::io::Write;

pub const NOT_AVAILABLE: &str = "NA";

/// CSV header for `bins` histogram cells.
pub fn csv_header(bins: usize) -> Vec<String> {
    let mut cols: Vec<String> = ["scenario", "policy", "N", "J", "seed", "mean_regret", "se_regret", "worst_regret"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    cols.extend((0..bins).map(|i| format!("bin_{i}")));
    cols
}

/// Writes one row per summary. All summaries must share the bin layout.
pub fn write_csv<W: Write>(summaries: &[ExperimentSummary], out: W) -> Result<()> {
    let bins = summaries.first().map_or(0, |s| s.histogram.counts.len());
    if summaries.iter().any(|s| s.histogram.counts.len() != bins) {
        return Err(Error::InvalidParameter("summaries have different histogram layouts".into()));
    }
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.into());
    w.write_record(csv_header(bins)).map_err(io)?;
    for s in summaries {
        let mut row = vec![
            s.scenario.clone(),
            s.policy.clone(),
            s.horizon.to_string(),
            s.replications.to_string(),
            s.seed.to_string(),
            s.mean_regret.to_string(),
            s.se_regret.map_or_else(|| NOT_AVAILABLE.to_string(), |v| v.to_string()),
            s.worst_regret.to_string(),
        ];
        row.extend(s.histogram.counts.iter().map(usize::to_string));
        w.write_record(&row).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

fn cell(s: &ExperimentSummary) -> String {
    match s.se_regret {
        Some(se) => format!("{:.1}±{:.1}", s.mean_regret, se),
        None => format!("{:.1}", s.mean_regret),
    }
}

/// Policies down, horizons across, `mean±se` in each cell.
pub fn text_table(summaries: &[ExperimentSummary]) -> String {
    let horizons: BTreeSet<usize> = summaries.iter().map(|s| s.horizon).collect();
    let mut policies: Vec<&str> = Vec::new();
    for s in summaries {
        if !policies.contains(&s.policy.as_str()) {
            policies.push(&s.policy);
        }
    }
    let mut rows = vec![std::iter::once(String::new()).chain(horizons.iter().map(|n| format!("N={n}"))).collect::<Vec<_>>()];
    for p in &policies {
        let mut row = vec![p.to_string()];
        for n in &horizons {
            row.push(
                summaries
                    .iter()
                    .find(|s| s.policy == *p && s.horizon == *n)
                    .map_or_else(|| "-".to_string(), cell),
            );
        }
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    if let Some(first) = summaries.first() {
        out.push_str(&format!("{} (J={}, seed={})\n", first.scenario, first.replications, first.seed));
    }
    for (i, r) in rows.iter().enumerate() {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(c, (v, w))| if c == 0 { format!("{v:<w$}") } else { format!("{v:>w$}") })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
        if i == 0 {
            out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1)));
            out.push('\n');
        }
    }
    out
}

/// Histogram counts and worst regret, one policy per row.
pub fn histogram_table(summaries: &[ExperimentSummary]) -> String {
    let mut out = String::new();
    let width = summaries.iter().map(|s| s.policy.len()).max().unwrap_or(0).max(12) + 2;
    for s in summaries {
        let edges = &s.histogram.edges;
        if out.is_empty() {
            let mut head = format!("{:<width$}", "");
            for (i, e) in edges.iter().enumerate() {
                let label = match edges.get(i + 1) {
                    Some(next) => format!("[{e},{next})"),
                    None => format!("[{e},inf)"),
                };
                head.push_str(&format!("{label:>14}"));
            }
            head.push_str(&format!("{:>14}\n", "worst"));
            out.push_str(&head);
        }
        out.push_str(&format!("{:<width$}", s.policy));
        for c in &s.histogram.counts {
            out.push_str(&format!("{c:>14}"));
        }
        out.push_str(&format!("{:>14.1}\n", s.worst_regret));
    }
    out
}
