use std::path::Path;
use std::process::{Command, Output};

use psa_core::benchmarks;
use psa_core::operators::ProbabilityMode;
use psa_core::psa::{run, RunConfig};

fn psa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn psa_line(line: &str) -> Output {
    psa(&line.split_whitespace().collect::<Vec<_>>())
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn read_csv(path: &Path) -> Vec<csv::StringRecord> {
    csv::Reader::from_path(path)
        .unwrap()
        .records()
        .map(Result::unwrap)
        .collect()
}

#[test]
fn list_prints_the_whole_registry() {
    let out = psa_line("list --format csv");
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 36);
    assert!(text.lines().any(|l| l.starts_with("g13,")));

    let out = psa_line("list --format json");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 35);
}

#[test]
fn single_short_run_record() {
    let out = psa_line("run --function f9 --runs 1 --seed 7 --iters 10");
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("function,run,seed,best,nfe,success,iterations")
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "f9");
    assert_eq!(row[2], "7");
    assert_eq!(row[4], "550");
    assert_eq!(row[6], "10");
    assert!(lines.next().is_none());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(psa_line("run --function f9 --bogus").status.code(), Some(2));
    assert_eq!(psa_line("run").status.code(), Some(2));
    assert_eq!(psa_line("run --function nope").status.code(), Some(2));
    assert_eq!(psa_line("run --function f9 --pop 3").status.code(), Some(2));
    assert_eq!(
        psa_line("run --function f9 --mode sometimes").status.code(),
        Some(2)
    );
}

#[test]
fn unwritable_output_is_a_runtime_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let out = psa_line(&format!(
        "run --function f9 --runs 1 --iters 1 --out {}",
        path.display()
    ));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn csv_and_json_carry_identical_values() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("r.csv");
    let json_path = dir.path().join("r.json");
    let common = "run --function g1 --function h3s --runs 3 --iters 15 --dim 6";
    assert!(psa_line(&format!("{common} --out {}", csv_path.display()))
        .status
        .success());
    let json = format!("{common} --format json --out {}", json_path.display());
    assert!(psa_line(&json).status.success());

    let rows = read_csv(&csv_path);
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let records = doc["records"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(records.len(), 6);
    for (row, rec) in rows.iter().zip(records) {
        assert_eq!(row[0], *rec["function"].as_str().unwrap());
        let best: f64 = row[3].parse().unwrap();
        assert_eq!(best.to_bits(), rec["best"].as_f64().unwrap().to_bits());
        assert_eq!(row[4].parse::<u64>().unwrap(), rec["nfe"].as_u64().unwrap());
    }

    let summary = read_csv(&csv_path.with_extension("summary.csv"));
    assert_eq!(summary.len(), 2);
    assert_eq!(
        summary[0][0],
        *doc["summary"][0]["function"].as_str().unwrap()
    );
}

#[test]
fn accuracy_suite_reports_nfe_and_psr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("acc.csv");
    let out = psa_line(&format!(
        "run --suite all --runs 2 --iters 20 --dim 5 --stop accuracy --eps1 1e-4 --eps2 1e-4 --out {}",
        path.display()
    ));
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let table = stdout(&out);
    assert!(table.lines().next().unwrap().contains("NFE [PSR%]"));
    assert_eq!(table.lines().count(), 36);

    let summary = read_csv(&path.with_extension("summary.csv"));
    assert_eq!(summary.len(), 35);
    for row in &summary {
        let nfe: f64 = row[6].parse().unwrap();
        let psr: f64 = row[7].parse().unwrap();
        assert!(nfe > 0.0 && nfe <= 50.0 * 21.0);
        assert!((0.0..=100.0).contains(&psr));
        assert!(row[8].ends_with("%]"));
    }
}

#[test]
fn same_seed_same_output() {
    let line = "run --function g5 --runs 2 --iters 30 --dim 8 --seed 3";
    assert_eq!(psa_line(line).stdout, psa_line(line).stdout);
    let single_thread = format!("{line} --jobs 1");
    assert_eq!(psa_line(line).stdout, psa_line(&single_thread).stdout);
}

#[test]
fn adaptive_and_fixed_modes_diverge() {
    let f = benchmarks::get("g4", 10).unwrap();
    let base = RunConfig {
        dimension: 10,
        max_iterations: 40,
        seed: 12,
        ..RunConfig::default()
    };
    let fixed = run(&base, &f).unwrap();
    let adaptive = run(
        &RunConfig {
            probability_mode: ProbabilityMode::Adaptive,
            ..base
        },
        &f,
    )
    .unwrap();
    assert_ne!(fixed.best_trace, adaptive.best_trace);

    let cli = |mode| {
        stdout(&psa_line(&format!(
            "run --function g4 --runs 1 --iters 40 --dim 10 --seed 12 --mode {mode}"
        )))
    };
    assert_ne!(cli("fixed"), cli("adaptive"));
}
