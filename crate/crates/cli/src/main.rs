use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{error::ErrorKind, CommandFactory, Parser};

use psa_cli::args::{Cli, Command, Format, ListFormat, RunArgs};
use psa_cli::output;
use psa_core::benchmarks::list_functions;
use psa_core::harness::{run_experiment, ExperimentOutcome};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List { format } => list(format),
        Command::Run(args) => run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

type BoxError = Box<dyn std::error::Error>;

fn list(format: ListFormat) -> Result<(), BoxError> {
    let list = list_functions();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        ListFormat::Table => out.write_all(output::listing_table(&list).as_bytes())?,
        ListFormat::Csv => output::write_listing_csv(&list, &mut out)?,
        ListFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &list)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn run(args: &RunArgs) -> Result<(), BoxError> {
    let spec = match args.experiment() {
        Ok(spec) => spec,
        Err(msg) => Cli::command().error(ErrorKind::ValueValidation, msg).exit(),
    };
    let outcome = run_experiment(&spec)?;
    let table = output::summary_table(&outcome.statistics.functions);
    match &args.out {
        Some(path) => {
            write_outcome(&outcome, args.format, path)?;
            print!("{table}");
        }
        None => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            match args.format {
                Format::Csv => output::write_records_csv(&outcome.records, &mut out)?,
                Format::Json => output::write_json(&outcome, &mut out)?,
            }
            eprint!("{table}");
        }
    }
    Ok(())
}

fn write_outcome(outcome: &ExperimentOutcome, format: Format, path: &Path) -> Result<(), BoxError> {
    let file = BufWriter::new(File::create(path)?);
    match format {
        Format::Csv => {
            output::write_records_csv(&outcome.records, file)?;
            let summary = path.with_extension("summary.csv");
            output::write_summary_csv(
                &outcome.statistics.functions,
                BufWriter::new(File::create(summary)?),
            )?;
        }
        Format::Json => output::write_json(outcome, file)?,
    }
    Ok(())
}
