//! Plain-text and CSV renderings of sweep and suite results.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::Path;

use anyhow::{Context, Result};
use dimforce_core::checks::Check;
use dimforce_core::sweep::{SweepResult, Tally};

pub fn tally_table(checks: &BTreeMap<Check, Tally>) -> String {
    let mut s = format!(
        "{:<22} {:<10} {:>8} {:>8} {:>8}\n",
        "check", "kind", "passed", "failed", "n/a"
    );
    for (check, t) in checks {
        let kind = match t.kind {
            Some(k) => format!("{k:?}").to_lowercase(),
            None => "-".into(),
        };
        let _ = writeln!(
            s,
            "{:<22} {:<10} {:>8} {:>8} {:>8}",
            check.name(),
            kind,
            t.passed,
            t.failed,
            t.not_applicable
        );
    }
    s
}

pub fn sweep_summary(r: &SweepResult) -> String {
    let mut s = format!(
        "corpus {}: {} graphs checked, {} skipped\n",
        r.corpus, r.graphs_checked, r.skipped
    );
    s.push_str(&tally_table(&r.checks));
    for (name, list) in &r.extremal {
        let _ = writeln!(s, "witnesses {name}: {}", list.count);
    }
    if let Some(d) = &r.divergence {
        let _ = writeln!(
            s,
            "max Z - dim: {}; max dim - Z: {}; even-cycle-free graphs with dim > Z: {}",
            d.max_z_minus_dim.value, d.max_dim_minus_z.value, d.even_cycle_free_dim_gt_z.count
        );
    }
    for k in &r.known_values {
        let _ = writeln!(
            s,
            "{}: dim {} (expected {}), Z {} (expected {})",
            k.family, k.dim, k.expected_dim, k.z, k.expected_z
        );
    }
    let theorem = r.theorem_failures().count();
    let conjecture = r.conjecture_violations().count();
    let _ = writeln!(s, "theorem violations: {theorem}");
    if conjecture > 0 {
        let _ = writeln!(
            s,
            "conjecture violations: {conjecture} (reported, not an error)"
        );
    }
    s
}

pub fn write_tally_csv(path: &Path, checks: &BTreeMap<Check, Tally>) -> Result<()> {
    let mut w = csv::Writer::from_path(path)
        .with_context(|| format!("cannot create {}", path.display()))?;
    w.write_record(["check", "kind", "passed", "failed", "not_applicable"])?;
    for (check, t) in checks {
        let kind = t
            .kind
            .map(|k| format!("{k:?}").to_lowercase())
            .unwrap_or_default();
        w.write_record([
            check.name().to_string(),
            kind,
            t.passed.to_string(),
            t.failed.to_string(),
            t.not_applicable.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
