//! Corpus benchmark: generate, colour and time many instances.

use std::fmt::Write;
use std::time::Instant;

use rainbow_core::gen::{generate, suggested_edge_probability, Family, GeneratorSpec};
use rainbow_core::{color_rc2, ColorError};
use rayon::prelude::*;

use crate::CliError;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: Family,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    /// Fixed edge probability; `None` picks one per instance.
    pub p: Option<f64>,
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub colors_used: Option<usize>,
    /// Completion case on success, `error:<kind>` otherwise.
    pub completion_case: String,
    pub repair_iterations: usize,
    pub wall_time: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchSummary {
    pub instances: usize,
    pub failed: usize,
    pub max_colors_used: usize,
    pub repaired: usize,
}

impl BenchSummary {
    pub fn repair_rate(&self) -> f64 {
        if self.instances == 0 {
            0.0
        } else {
            self.repaired as f64 / self.instances as f64
        }
    }
}

impl BenchConfig {
    fn validate(&self) -> Result<(), CliError> {
        if self.family == Family::Named {
            return Err(CliError::Usage("bench needs a random family".into()));
        }
        if self.n_min > self.n_max {
            return Err(CliError::Usage(format!("empty n range {}..={}", self.n_min, self.n_max)));
        }
        if self.p.is_some_and(|p| !(0.0..=1.0).contains(&p)) {
            return Err(CliError::Usage("p must lie in [0, 1]".into()));
        }
        Ok(())
    }

    /// The spec of instance `i`: seed `seed + i`, `n` spread over the range
    /// by a fixed stride, `p` jittered across the feasible band.
    pub fn instance(&self, i: usize) -> GeneratorSpec {
        let span = self.n_max - self.n_min + 1;
        let n = self.n_min + (i * 7919) % span;
        let p = self.p.unwrap_or_else(|| suggested_edge_probability(n, (i % 10) as f64 / 10.0));
        let seed = self.seed.wrapping_add(i as u64);
        GeneratorSpec { family: self.family, n, p, seed, name: None }
    }
}

fn error_kind(e: &ColorError) -> &'static str {
    match e {
        ColorError::Disconnected => "disconnected",
        ColorError::NotDiameter2(_) => "not_diameter2",
        ColorError::HasBridge(_) => "has_bridge",
        ColorError::NotPendantStructure(_) => "not_pendant_structure",
        ColorError::NotRc2Structure(_) => "not_rc2_structure",
        ColorError::CompletionFailed { .. } => "completion_failed",
        ColorError::BadCyclePattern(_) => "bad_cycle_pattern",
        ColorError::NoCycle(_) => "no_cycle",
        ColorError::InvalidInput(_) => "invalid_input",
        ColorError::Verify(_) => "verify",
    }
}

fn run_instance(cfg: &BenchConfig, i: usize) -> BenchRow {
    let spec = cfg.instance(i);
    let mut row = BenchRow {
        seed: spec.seed,
        n: spec.n,
        m: 0,
        colors_used: None,
        completion_case: String::new(),
        repair_iterations: 0,
        wall_time: 0.0,
    };
    let g = match generate(&spec) {
        Ok(g) => g,
        Err(_) => {
            row.completion_case = "error:generation_exhausted".into();
            return row;
        }
    };
    row.m = g.edge_count();
    let start = Instant::now();
    let result = color_rc2(&g);
    if cfg.timing {
        row.wall_time = start.elapsed().as_secs_f64();
    }
    match result {
        Ok(r) => {
            row.colors_used = Some(r.colors_used);
            row.completion_case = r.trace.completion_case.map_or("none", |c| c.as_str()).into();
            row.repair_iterations = r.trace.repair_iterations;
        }
        Err(e) => {
            row.completion_case = format!("error:{}", error_kind(&e));
            if let ColorError::CompletionFailed { trace, .. } = &e {
                row.repair_iterations = trace.repair_iterations;
            }
        }
    }
    row
}

/// Rows sorted by `(n, seed)` regardless of scheduling.
pub fn run_bench(cfg: &BenchConfig) -> Result<(Vec<BenchRow>, BenchSummary), CliError> {
    cfg.validate()?;
    let mut rows: Vec<BenchRow> = (0..cfg.count).into_par_iter().map(|i| run_instance(cfg, i)).collect();
    rows.sort_by_key(|r| (r.n, r.seed));
    let summary = BenchSummary {
        instances: rows.len(),
        failed: rows.iter().filter(|r| r.colors_used.is_none()).count(),
        max_colors_used: rows.iter().filter_map(|r| r.colors_used).max().unwrap_or(0),
        repaired: rows.iter().filter(|r| r.repair_iterations > 0).count(),
    };
    Ok((rows, summary))
}

pub fn write_csv(rows: &[BenchRow], summary: &BenchSummary) -> String {
    let mut out = String::from("seed,n,m,colors_used,completion_case,repair_iterations,wall_time\n");
    for r in rows {
        let colors = r.colors_used.map(|c| c.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{:.6}",
            r.seed, r.n, r.m, colors, r.completion_case, r.repair_iterations, r.wall_time
        )
        .unwrap();
    }
    writeln!(
        out,
        "# instances={} failed={} max_colors_used={} repaired={} repair_rate={:.4}",
        summary.instances,
        summary.failed,
        summary.max_colors_used,
        summary.repaired,
        summary.repair_rate()
    )
    .unwrap();
    out
}
