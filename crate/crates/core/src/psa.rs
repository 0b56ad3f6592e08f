//! The main PSA loop.

use serde::{Deserialize, Serialize};

use crate::error::{PsaError, Result};
use crate::objective::Objective;
use crate::operators::{
    generate, select_operator, OperatorKind, OperatorProbabilities, ProbabilityMode,
    SigmaDenominator,
};
use crate::population::{evaluate, merge_and_truncate, Candidate, EvaluationCounter, Population};
use crate::rng::RandomStream;

/// Relative and absolute tolerances used when no accuracy rule is configured.
pub const DEFAULT_EPSILON: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StopRule {
    /// Run exactly `max_iterations` iterations.
    MaxIterations,
    /// Stop as soon as the best value is within tolerance of the known optimum,
    /// or when `nfe_cap` evaluations are spent. The cap defaults to
    /// `N * (max_iterations + 1)`.
    Accuracy {
        eps_rel: f64,
        eps_abs: f64,
        nfe_cap: Option<u64>,
    },
}

impl StopRule {
    pub fn accuracy(eps_rel: f64, eps_abs: f64) -> Self {
        StopRule::Accuracy {
            eps_rel,
            eps_abs,
            nfe_cap: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub population_size: usize,
    pub dimension: usize,
    pub max_iterations: usize,
    pub probability_mode: ProbabilityMode,
    pub seed: u64,
    pub stop_rule: StopRule,
    /// Clamp generated candidates to the initialization box.
    pub clamp_to_bounds: bool,
    pub sigma_denominator: SigmaDenominator,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            population_size: 50,
            dimension: 30,
            max_iterations: 1000,
            probability_mode: ProbabilityMode::Fixed,
            seed: 0,
            stop_rule: StopRule::MaxIterations,
            clamp_to_bounds: false,
            sigma_denominator: SigmaDenominator::PopulationMinusOne,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 10 {
            return Err(PsaError::Config(format!(
                "population size must be at least 10, got {}",
                self.population_size
            )));
        }
        if self.dimension < 1 {
            return Err(PsaError::Config("dimension must be positive".into()));
        }
        if let StopRule::Accuracy {
            eps_rel,
            eps_abs,
            nfe_cap,
        } = self.stop_rule
        {
            if !(eps_rel > 0.0 && eps_abs > 0.0) {
                return Err(PsaError::Config(format!(
                    "accuracy tolerances must be positive, got {eps_rel} and {eps_abs}"
                )));
            }
            if nfe_cap == Some(0) {
                return Err(PsaError::Config("NFE cap must be positive".into()));
            }
        }
        Ok(())
    }

    /// Evaluation budget of an accuracy run.
    pub fn nfe_cap(&self) -> Option<u64> {
        match self.stop_rule {
            StopRule::MaxIterations => None,
            StopRule::Accuracy { nfe_cap, .. } => Some(
                nfe_cap.unwrap_or(self.population_size as u64 * (self.max_iterations as u64 + 1)),
            ),
        }
    }

    fn tolerances(&self) -> (f64, f64) {
        match self.stop_rule {
            StopRule::MaxIterations => (DEFAULT_EPSILON, DEFAULT_EPSILON),
            StopRule::Accuracy {
                eps_rel, eps_abs, ..
            } => (eps_rel, eps_abs),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub best_value: f64,
    pub best_position: Vec<f64>,
    /// Best-so-far value after initialization and after every iteration.
    pub best_trace: Vec<f64>,
    pub nfe: u64,
    /// Whether the final best meets the accuracy rule (default tolerances
    /// `1e-4` when the run used the iteration limit).
    pub success: bool,
    pub iterations_used: usize,
    /// How many candidates each operator produced, indexed SOP, OOP, SPP.
    pub operator_counts: [u64; 3],
}

/// `|f_best - f*| < eps_rel |f_best| + eps_abs`.
pub fn accuracy_reached(f_best: f64, f_star: f64, eps_rel: f64, eps_abs: f64) -> bool {
    (f_best - f_star).abs() < eps_rel * f_best.abs() + eps_abs
}

struct Tracker<'a, O: ?Sized> {
    objective: &'a O,
    rng: RandomStream,
    counter: EvaluationCounter,
    best: Candidate,
    accuracy: Option<(f64, f64, f64)>,
    cap: Option<u64>,
    reached: bool,
}

impl<O: Objective + ?Sized> Tracker<'_, O> {
    fn evaluate(&mut self, position: Vec<f64>) -> Result<Candidate> {
        let c = evaluate(
            Candidate::new(position),
            self.objective,
            &mut self.counter,
            &mut self.rng,
        )?;
        if self.best.value.is_none() || c.value_or_nan() < self.best.value_or_nan() {
            self.best = c.clone();
        }
        if let Some((f_star, rel, abs)) = self.accuracy {
            if accuracy_reached(self.best.value_or_nan(), f_star, rel, abs) {
                self.reached = true;
            }
        }
        Ok(c)
    }

    fn should_stop(&self) -> bool {
        self.reached || self.cap.is_some_and(|cap| self.counter.count() >= cap)
    }
}

/// Runs PSA on `objective` and returns the best solution with its trace.
pub fn run<O: Objective + ?Sized>(config: &RunConfig, objective: &O) -> Result<RunResult> {
    config.validate()?;
    if objective.dimension() != config.dimension {
        return Err(PsaError::Config(format!(
            "{} has dimension {}, configuration asks for {}",
            objective.id(),
            objective.dimension(),
            config.dimension
        )));
    }
    let accuracy = match config.stop_rule {
        StopRule::MaxIterations => None,
        StopRule::Accuracy {
            eps_rel, eps_abs, ..
        } => {
            let f_star = objective.optimum_value().ok_or_else(|| {
                PsaError::Config(format!(
                    "accuracy stopping needs a known optimum for {}",
                    objective.id()
                ))
            })?;
            Some((f_star, eps_rel, eps_abs))
        }
    };
    let space = objective.search_space();
    let mut iteration = 0;
    let wrap = |iteration: usize, e: PsaError| PsaError::Run {
        function: objective.id().to_string(),
        seed: config.seed,
        iteration,
        source: Box::new(e),
    };

    let mut t = Tracker {
        objective,
        rng: RandomStream::new(config.seed),
        counter: EvaluationCounter::new(),
        best: Candidate::new(Vec::new()),
        accuracy,
        cap: config.nfe_cap(),
        reached: false,
    };
    let n = config.population_size;
    let mut op_counts = [0u64; 3];

    let mut members = Vec::with_capacity(n);
    for _ in 0..n {
        if t.should_stop() {
            break;
        }
        let x = space.sample(&mut t.rng);
        members.push(t.evaluate(x).map_err(|e| wrap(0, e))?);
    }
    let mut trace = vec![t.best.value_or_nan()];

    if members.len() == n {
        let mut population = Population::from_members(members).map_err(|e| wrap(0, e))?;
        let mut probs = OperatorProbabilities::for_mode(config.probability_mode, n)?;
        let adaptive = config.probability_mode == ProbabilityMode::Adaptive;

        while iteration < config.max_iterations && !t.should_stop() {
            iteration += 1;
            if adaptive {
                probs.reset()?;
            }
            let worst = population.worst_value();
            let mut newcomers = Vec::with_capacity(n);
            for _ in 0..n {
                if t.should_stop() {
                    break;
                }
                let op = select_operator(&probs, &mut t.rng);
                let mut x = generate(op, &population, config.sigma_denominator, &mut t.rng);
                if config.clamp_to_bounds {
                    space.clamp(&mut x);
                }
                let c = t.evaluate(x).map_err(|e| wrap(iteration, e))?;
                op_counts[op.index()] += 1;
                if adaptive {
                    probs.depression_update(op, c.value_or_nan() > worst)?;
                }
                newcomers.push(c);
            }
            if newcomers.len() < n {
                // Stopped mid-iteration; the tracker already holds the best.
                trace.push(t.best.value_or_nan());
                break;
            }
            population =
                merge_and_truncate(population, newcomers).map_err(|e| wrap(iteration, e))?;
            let head = population.best();
            if head.value_or_nan() <= t.best.value_or_nan() {
                t.best = head.clone();
            }
            trace.push(t.best.value_or_nan());
        }
    }

    let (rel, abs) = config.tolerances();
    let best_value = t.best.value_or_nan();
    let success = objective
        .optimum_value()
        .is_some_and(|f_star| accuracy_reached(best_value, f_star, rel, abs));
    Ok(RunResult {
        best_value,
        best_position: t.best.position,
        best_trace: trace,
        nfe: t.counter.count(),
        success,
        iterations_used: iteration,
        operator_counts: op_counts,
    })
}

/// Counts per operator as a map-friendly list.
pub fn operator_shares(counts: &[u64; 3]) -> Vec<(OperatorKind, f64)> {
    let total: u64 = counts.iter().sum();
    OperatorKind::ALL
        .iter()
        .map(|&op| {
            let share = if total == 0 {
                0.0
            } else {
                counts[op.index()] as f64 / total as f64
            };
            (op, share)
        })
        .collect()
}
