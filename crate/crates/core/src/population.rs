//! Candidates, the sorted population and objective evaluation with NFE accounting.

use serde::{Deserialize, Serialize};

use crate::error::{PsaError, Result};
use crate::objective::Objective;
use crate::rng::Draw;

/// Box the initial population is sampled from.
///
/// The bounds only govern initialization; generated candidates may leave the
/// box unless a run enables clamping.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(PsaError::Config(
                "search space needs at least one dimension".into(),
            ));
        }
        if lower.len() != upper.len() {
            return Err(PsaError::Config(format!(
                "bound lengths differ: {} lower vs {} upper",
                lower.len(),
                upper.len()
            )));
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(PsaError::Config(format!(
                    "dimension {j}: interval [{lo}, {hi}] is empty or not finite"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval `[lower, upper]` in every one of `dimension` coordinates.
    pub fn uniform(dimension: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dimension], vec![upper; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn sample<R: Draw + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(&lo, &hi)| rng.uniform(lo, hi))
            .collect()
    }

    pub fn clamp(&self, position: &mut [f64]) {
        for ((x, &lo), &hi) in position.iter_mut().zip(&self.lower).zip(&self.upper) {
            *x = x.clamp(lo, hi);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub position: Vec<f64>,
    pub value: Option<f64>,
}

impl Candidate {
    pub fn new(position: Vec<f64>) -> Self {
        Self {
            position,
            value: None,
        }
    }

    pub fn evaluated(position: Vec<f64>, value: f64) -> Self {
        Self {
            position,
            value: Some(value),
        }
    }

    /// Objective value; `f64::NAN` for an unevaluated candidate.
    pub fn value_or_nan(&self) -> f64 {
        self.value.unwrap_or(f64::NAN)
    }
}

/// Number of objective evaluations spent so far.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvaluationCounter {
    count: u64,
}

impl EvaluationCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    fn increment(&mut self) {
        self.count += 1;
    }
}

/// Evaluates `candidate` and charges one evaluation to `counter`.
///
/// `+inf` is accepted as an overflowed (worst possible) value. NaN and
/// `-inf` are reported as [`PsaError::Evaluation`]; the counter is charged
/// either way.
pub fn evaluate<O, R>(
    mut candidate: Candidate,
    objective: &O,
    counter: &mut EvaluationCounter,
    rng: &mut R,
) -> Result<Candidate>
where
    O: Objective + ?Sized,
    R: Draw,
{
    if candidate.position.len() != objective.dimension() {
        return Err(PsaError::Contract(format!(
            "candidate has {} coordinates, {} expects {}",
            candidate.position.len(),
            objective.id(),
            objective.dimension()
        )));
    }
    let value = objective.value_with(&candidate.position, rng);
    counter.increment();
    if !admissible(value) {
        return Err(PsaError::Evaluation {
            function: objective.id().to_string(),
            value,
            position: candidate.position,
        });
    }
    candidate.value = Some(value);
    Ok(candidate)
}

fn admissible(value: f64) -> bool {
    value.is_finite() || value == f64::INFINITY
}

/// Stable ascending sort by objective value.
pub fn sort_population(mut members: Vec<Candidate>) -> Result<Vec<Candidate>> {
    if let Some(i) = members.iter().position(|c| c.value.is_none()) {
        return Err(PsaError::Contract(format!(
            "member {i} has not been evaluated"
        )));
    }
    members.sort_by(|a, b| a.value_or_nan().total_cmp(&b.value_or_nan()));
    Ok(members)
}

/// Fixed-size population kept in ascending order of objective value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Population {
    members: Vec<Candidate>,
}

impl Population {
    /// Builds a sorted population from evaluated candidates.
    pub fn from_members(members: Vec<Candidate>) -> Result<Self> {
        if members.is_empty() {
            return Err(PsaError::EmptyInput("population"));
        }
        let dim = members[0].position.len();
        for (i, c) in members.iter().enumerate() {
            if c.position.len() != dim {
                return Err(PsaError::Contract(format!(
                    "member {i} has {} coordinates, expected {dim}",
                    c.position.len()
                )));
            }
            if let Some(v) = c.value {
                if !admissible(v) {
                    return Err(PsaError::Contract(format!("member {i} has value {v}")));
                }
            }
        }
        Ok(Self {
            members: sort_population(members)?,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.members[0].position.len()
    }

    pub fn members(&self) -> &[Candidate] {
        &self.members
    }

    pub fn member(&self, rank: usize) -> &Candidate {
        &self.members[rank]
    }

    pub fn best(&self) -> &Candidate {
        &self.members[0]
    }

    pub fn worst(&self) -> &Candidate {
        &self.members[self.members.len() - 1]
    }

    pub fn best_value(&self) -> f64 {
        self.best().value_or_nan()
    }

    pub fn worst_value(&self) -> f64 {
        self.worst().value_or_nan()
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.members.iter().map(Candidate::value_or_nan)
    }

    pub fn into_members(self) -> Vec<Candidate> {
        self.members
    }
}

/// Keeps the `N` best of `current ∪ newcomers`.
///
/// Incumbents precede newcomers before the stable sort, so exact ties at the
/// cut are resolved in favour of the current population.
pub fn merge_and_truncate(current: Population, newcomers: Vec<Candidate>) -> Result<Population> {
    let n = current.len();
    if newcomers.len() != n {
        return Err(PsaError::Contract(format!(
            "expected {n} newcomers, got {}",
            newcomers.len()
        )));
    }
    let dim = current.dimension();
    if let Some(i) = newcomers.iter().position(|c| c.position.len() != dim) {
        return Err(PsaError::Contract(format!(
            "newcomer {i} has wrong dimension"
        )));
    }
    let mut union = current.into_members();
    union.extend(newcomers);
    let mut merged = sort_population(union)?;
    merged.truncate(n);
    Ok(Population { members: merged })
}

/// Samples `size` uniform candidates in `space`, evaluates each right after
/// it is drawn and returns them sorted.
pub fn initialize_population<O, R>(
    space: &SearchSpace,
    size: usize,
    rng: &mut R,
    objective: &O,
    counter: &mut EvaluationCounter,
) -> Result<Population>
where
    O: Objective + ?Sized,
    R: Draw,
{
    if size < 1 {
        return Err(PsaError::Config(
            "population size must be at least 1".into(),
        ));
    }
    let mut members = Vec::with_capacity(size);
    for _ in 0..size {
        let position = space.sample(rng);
        members.push(evaluate(Candidate::new(position), objective, counter, rng)?);
    }
    Population::from_members(members)
}
