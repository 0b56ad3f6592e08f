//! Multi-run experiments and their summary statistics.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::benchmarks;
use crate::error::{PsaError, Result};
use crate::psa::{run, RunConfig, RunResult};

/// A batch of independent runs over one or more registered functions.
///
/// Run `k` of every function uses seed `base_config.seed + k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub function_ids: Vec<String>,
    pub runs: usize,
    pub base_config: RunConfig,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

impl ExperimentSpec {
    pub fn new(function_ids: Vec<String>, base_config: RunConfig) -> Self {
        Self {
            function_ids,
            runs: 30,
            base_config,
            jobs: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(PsaError::Config(
                "an experiment needs at least one run".into(),
            ));
        }
        if self.function_ids.is_empty() {
            return Err(PsaError::Config("no functions selected".into()));
        }
        for id in &self.function_ids {
            benchmarks::get(id, self.base_config.dimension)?;
        }
        self.base_config.validate()
    }

    pub fn seed_for(&self, run: usize) -> u64 {
        self.base_config.seed.wrapping_add(run as u64)
    }
}

/// Outcome of a single run, flattened for output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub function: String,
    pub run: usize,
    pub seed: u64,
    pub best: f64,
    pub nfe: u64,
    pub success: bool,
    pub iterations: usize,
}

impl RunRecord {
    fn from_result(function: &str, run: usize, seed: u64, r: &RunResult) -> Self {
        Self {
            function: function.to_string(),
            run,
            seed,
            best: r.best_value,
            nfe: r.nfe,
            success: r.success,
            iterations: r.iterations_used,
        }
    }
}

/// Cross-run aggregates for one function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionStatistics {
    pub function: String,
    pub runs: usize,
    pub best: f64,
    pub avg: f64,
    pub median: f64,
    /// Population standard deviation (divides by the run count).
    pub sd: f64,
    pub mean_nfe: f64,
    /// Percentage of successful runs, 0 to 100.
    pub psr: f64,
}

impl FunctionStatistics {
    pub fn from_records(function: &str, records: &[RunRecord]) -> Result<Self> {
        if records.is_empty() {
            return Err(PsaError::EmptyInput("function statistics"));
        }
        let bests: Vec<f64> = records.iter().map(|r| r.best).collect();
        let nfes: Vec<f64> = records.iter().map(|r| r.nfe as f64).collect();
        let successes: Vec<bool> = records.iter().map(|r| r.success).collect();
        let avg = mean(&bests);
        Ok(Self {
            function: function.to_string(),
            runs: records.len(),
            best: bests.iter().copied().fold(f64::INFINITY, f64::min),
            avg,
            median: median(&bests)?,
            sd: population_sd(&bests),
            mean_nfe: mean(&nfes),
            psr: psr(&successes)?,
        })
    }

    /// The `NFE [PSR%]` cell, e.g. `825.8 [100%]`.
    pub fn nfe_psr_cell(&self) -> String {
        format!(
            "{} [{}%]",
            trim_number(self.mean_nfe, 1),
            trim_number(self.psr, 1)
        )
    }
}

fn trim_number(v: f64, decimals: usize) -> String {
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteStatistics {
    pub functions: Vec<FunctionStatistics>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentOutcome {
    /// One record per (function, run), ordered by function then run index.
    pub records: Vec<RunRecord>,
    pub statistics: SuiteStatistics,
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

fn population_sd(values: &[f64]) -> f64 {
    let m = mean(values);
    (values.iter().map(|v| (v - m).powi(2)).sum::<f64>() / values.len() as f64).sqrt()
}

/// Middle of the sorted values; the mean of the middle pair for even counts.
pub fn median(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(PsaError::EmptyInput("median"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    Ok(if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    })
}

/// Percentage of `true` entries.
pub fn psr(successes: &[bool]) -> Result<f64> {
    if successes.is_empty() {
        return Err(PsaError::EmptyInput("psr"));
    }
    let hits = successes.iter().filter(|&&s| s).count();
    Ok(100.0 * hits as f64 / successes.len() as f64)
}

/// Runs every (function, run) pair and aggregates per function.
///
/// Runs may execute in parallel; records and statistics are always in
/// function order, then run order.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentOutcome> {
    spec.validate()?;
    let jobs: Vec<(usize, &str, usize)> = spec
        .function_ids
        .iter()
        .enumerate()
        .flat_map(|(fi, id)| (0..spec.runs).map(move |r| (fi, id.as_str(), r)))
        .collect();

    let execute = || -> Result<Vec<RunRecord>> {
        jobs.par_iter()
            .map(|&(_, id, r)| {
                let seed = spec.seed_for(r);
                let f = benchmarks::get(id, spec.base_config.dimension)?;
                let cfg = RunConfig {
                    seed,
                    ..spec.base_config.clone()
                };
                let result = run(&cfg, &f)?;
                Ok(RunRecord::from_result(id, r, seed, &result))
            })
            .collect()
    };
    let records = if spec.jobs == 0 {
        execute()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .map_err(|e| PsaError::Config(format!("thread pool: {e}")))?
            .install(execute)?
    };

    let functions = spec
        .function_ids
        .iter()
        .enumerate()
        .map(|(fi, id)| {
            let slice = &records[fi * spec.runs..(fi + 1) * spec.runs];
            FunctionStatistics::from_records(id, slice)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ExperimentOutcome {
        records,
        statistics: SuiteStatistics { functions },
    })
}
