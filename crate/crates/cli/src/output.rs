//! Record, summary and listing writers.
//!
//! Floats are written in their shortest round-trip form in both CSV and JSON.

use std::io::{self, Write};

use serde::Serialize;

use psa_core::benchmarks::FunctionInfo;
use psa_core::harness::{ExperimentOutcome, FunctionStatistics, RunRecord};

/// One line of per-run output: `function,run,seed,best,nfe,success,iterations`.
pub type OutputRecord = RunRecord;

pub const RECORD_HEADER: &str = "function,run,seed,best,nfe,success,iterations";

#[derive(Debug, Serialize)]
struct SummaryRow<'a> {
    function: &'a str,
    runs: usize,
    best: f64,
    avg: f64,
    median: f64,
    sd: f64,
    mean_nfe: f64,
    psr: f64,
    nfe_psr: String,
}

impl<'a> From<&'a FunctionStatistics> for SummaryRow<'a> {
    fn from(s: &'a FunctionStatistics) -> Self {
        Self {
            function: &s.function,
            runs: s.runs,
            best: s.best,
            avg: s.avg,
            median: s.median,
            sd: s.sd,
            mean_nfe: s.mean_nfe,
            psr: s.psr,
            nfe_psr: s.nfe_psr_cell(),
        }
    }
}

pub fn write_records_csv<W: Write>(records: &[OutputRecord], w: W) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    if records.is_empty() {
        out.write_record(RECORD_HEADER.split(','))?;
    }
    for r in records {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_summary_csv<W: Write>(stats: &[FunctionStatistics], w: W) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for s in stats {
        out.serialize(SummaryRow::from(s))?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    records: &'a [OutputRecord],
    summary: Vec<SummaryRow<'a>>,
}

pub fn write_json<W: Write>(outcome: &ExperimentOutcome, mut w: W) -> io::Result<()> {
    let doc = JsonDocument {
        records: &outcome.records,
        summary: outcome
            .statistics
            .functions
            .iter()
            .map(SummaryRow::from)
            .collect(),
    };
    serde_json::to_writer_pretty(&mut w, &doc)?;
    writeln!(w)
}

/// Fixed-width summary with the `NFE [PSR%]` column.
pub fn summary_table(stats: &[FunctionStatistics]) -> String {
    let mut s = format!(
        "{:<6} {:>4} {:>13} {:>13} {:>13} {:>13}  {}\n",
        "id", "runs", "best", "avg", "median", "sd", "NFE [PSR%]"
    );
    for f in stats {
        s.push_str(&format!(
            "{:<6} {:>4} {:>13.4e} {:>13.4e} {:>13.4e} {:>13.4e}  {}\n",
            f.function,
            f.runs,
            f.best,
            f.avg,
            f.median,
            f.sd,
            f.nfe_psr_cell()
        ));
    }
    s
}

pub fn listing_table(list: &[FunctionInfo]) -> String {
    let mut s = format!(
        "{:<5} {:<24} {:<10} {:<22} {}\n",
        "id", "name", "modality", "interval", "optimum"
    );
    for f in list {
        let interval = format!("[{}, {}]", trim(f.interval.0), trim(f.interval.1));
        s.push_str(&format!(
            "{:<5} {:<24} {:<10} {:<22} {}\n",
            f.id, f.display_name, f.modality, interval, f.optimum_value
        ));
    }
    s
}

fn trim(v: f64) -> String {
    let s = format!("{v:.4}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn write_listing_csv<W: Write>(list: &[FunctionInfo], w: W) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["id", "name", "modality", "lower", "upper", "optimum"])?;
    for f in list {
        out.write_record([
            f.id.clone(),
            f.display_name.clone(),
            f.modality.to_string(),
            f.interval.0.to_string(),
            f.interval.1.to_string(),
            f.optimum_value.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}
