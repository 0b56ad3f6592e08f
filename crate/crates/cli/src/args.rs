use clap::{Args, Parser, Subcommand, ValueEnum};

use psa_core::benchmarks::{self, Modality};
use psa_core::harness::ExperimentSpec;
use psa_core::operators::{ProbabilityMode, SigmaDenominator};
use psa_core::psa::{RunConfig, StopRule};

#[derive(Debug, Parser)]
#[command(
    name = "psa",
    version,
    about = "Perfectionism Search Algorithm experiment runner"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the benchmark registry.
    List {
        #[arg(long, value_enum, default_value_t = ListFormat::Table)]
        format: ListFormat,
    },
    /// Run independent PSA runs and summarize them.
    Run(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Unimodal,
    Multimodal,
    Shifted,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Fixed,
    Adaptive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Stop {
    Maxiter,
    Accuracy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sigma {
    /// Divide the OOP distance sum by N - 1.
    PopMinusOne,
    /// Divide by K_best - 1, a mean over the ranks used.
    KbestMinusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["function", "suite"])))]
pub struct RunArgs {
    /// Benchmark id, e.g. f9, g13, h7s. May be repeated.
    #[arg(long, num_args = 1..)]
    pub function: Vec<String>,
    /// Run a whole group of the suite.
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// Problem dimension n.
    #[arg(long, default_value_t = 30)]
    pub dim: usize,
    /// Population size N (at least 10).
    #[arg(long, default_value_t = 50)]
    pub pop: usize,
    /// Iteration limit.
    #[arg(long, default_value_t = 1000)]
    pub iters: usize,
    /// Independent runs per function.
    #[arg(long, default_value_t = 30)]
    pub runs: usize,
    /// Seed of run 0; run k uses seed + k.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Mode::Fixed)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = Stop::Maxiter)]
    pub stop: Stop,
    /// Relative tolerance of the accuracy rule.
    #[arg(long, default_value_t = 1e-4)]
    pub eps1: f64,
    /// Absolute tolerance of the accuracy rule.
    #[arg(long, default_value_t = 1e-4)]
    pub eps2: f64,
    /// Clamp generated candidates to the initialization interval.
    #[arg(long)]
    pub clamp: bool,
    /// Denominator of the OOP spread.
    #[arg(long, value_enum, default_value_t = Sigma::PopMinusOne)]
    pub sigma: Sigma,
    /// Write per-run records here (CSV also gets a `.summary.csv` sibling).
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

impl RunArgs {
    pub fn function_ids(&self) -> Vec<String> {
        let modality = match self.suite {
            None => return self.function.clone(),
            Some(Suite::All) => {
                return benchmarks::suite_ids()
                    .iter()
                    .map(|s| s.to_string())
                    .collect()
            }
            Some(Suite::Unimodal) => Modality::Unimodal,
            Some(Suite::Multimodal) => Modality::Multimodal,
            Some(Suite::Shifted) => Modality::Shifted,
        };
        benchmarks::ids_with_modality(modality)
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    pub fn run_config(&self) -> RunConfig {
        RunConfig {
            population_size: self.pop,
            dimension: self.dim,
            max_iterations: self.iters,
            probability_mode: match self.mode {
                Mode::Fixed => ProbabilityMode::Fixed,
                Mode::Adaptive => ProbabilityMode::Adaptive,
            },
            seed: self.seed,
            stop_rule: match self.stop {
                Stop::Maxiter => StopRule::MaxIterations,
                Stop::Accuracy => StopRule::accuracy(self.eps1, self.eps2),
            },
            clamp_to_bounds: self.clamp,
            sigma_denominator: match self.sigma {
                Sigma::PopMinusOne => SigmaDenominator::PopulationMinusOne,
                Sigma::KbestMinusOne => SigmaDenominator::KBestMinusOne,
            },
        }
    }

    /// Builds and validates the experiment; errors are usage errors.
    pub fn experiment(&self) -> Result<ExperimentSpec, String> {
        let spec = ExperimentSpec {
            function_ids: self.function_ids(),
            runs: self.runs,
            base_config: self.run_config(),
            jobs: self.jobs,
        };
        spec.validate().map_err(|e| e.to_string())?;
        Ok(spec)
    }
}
