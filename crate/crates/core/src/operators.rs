//! The three candidate generators and the operator-probability state.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PsaError, Result};
use crate::population::Population;
use crate::rng::Draw;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OperatorKind {
    /// Self-oriented: reshape a top pattern's coordinate profile.
    Sop,
    /// Other-oriented: normal perturbation of the best member.
    Oop,
    /// Socially prescribed: coordinate-wise copy from random members.
    Spp,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 3] = [OperatorKind::Sop, OperatorKind::Oop, OperatorKind::Spp];

    pub fn index(self) -> usize {
        match self {
            OperatorKind::Sop => 0,
            OperatorKind::Oop => 1,
            OperatorKind::Spp => 2,
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperatorKind::Sop => "SOP",
            OperatorKind::Oop => "OOP",
            OperatorKind::Spp => "SPP",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProbabilityMode {
    /// Constant (1/4, 1/2, 1/4).
    #[default]
    Fixed,
    /// Reset to (1/3, 1/3, 1/3) each iteration and lowered on failures.
    Adaptive,
}

/// Selection probabilities of (SOP, OOP, SPP).
///
/// Stored as integer weights over a common denominator so the simplex
/// constraint holds exactly. In adaptive mode the unit is `Δ/2` where
/// `Δ = 1/(3N)`: the total is `6N` and each operator starts at `2N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorProbabilities {
    mode: ProbabilityMode,
    weights: [u64; 3],
    total: u64,
}

impl OperatorProbabilities {
    /// The fixed (1/4, 1/2, 1/4) setting.
    pub fn fixed() -> Self {
        Self {
            mode: ProbabilityMode::Fixed,
            weights: [1, 2, 1],
            total: 4,
        }
    }

    /// Adaptive probabilities for a population of `population_size`, starting uniform.
    pub fn adaptive(population_size: usize) -> Result<Self> {
        if population_size == 0 {
            return Err(PsaError::Config("population size must be positive".into()));
        }
        let n = population_size as u64;
        Ok(Self {
            mode: ProbabilityMode::Adaptive,
            weights: [2 * n, 2 * n, 2 * n],
            total: 6 * n,
        })
    }

    pub fn for_mode(mode: ProbabilityMode, population_size: usize) -> Result<Self> {
        match mode {
            ProbabilityMode::Fixed => Ok(Self::fixed()),
            ProbabilityMode::Adaptive => Self::adaptive(population_size),
        }
    }

    /// Arbitrary probabilities given as integer weights; mainly for tests.
    pub fn from_weights(mode: ProbabilityMode, weights: [u64; 3]) -> Result<Self> {
        let total: u64 = weights.iter().sum();
        if total == 0 {
            return Err(PsaError::Config("operator weights sum to zero".into()));
        }
        Ok(Self {
            mode,
            weights,
            total,
        })
    }

    pub fn mode(&self) -> ProbabilityMode {
        self.mode
    }

    pub fn get(&self, op: OperatorKind) -> f64 {
        self.weights[op.index()] as f64 / self.total as f64
    }

    pub fn p_sop(&self) -> f64 {
        self.get(OperatorKind::Sop)
    }

    pub fn p_oop(&self) -> f64 {
        self.get(OperatorKind::Oop)
    }

    pub fn p_spp(&self) -> f64 {
        self.get(OperatorKind::Spp)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.p_sop(), self.p_oop(), self.p_spp()]
    }

    /// The depression step `Δ`; `1/(3N)` in adaptive mode.
    pub fn delta(&self) -> f64 {
        2.0 / self.total as f64
    }

    /// Applies one depression step after a candidate from `op` was generated.
    ///
    /// A failed SOP (SPP) candidate moves `Δ` from its own probability to the
    /// other two in equal halves. OOP is never penalized. If less than `Δ`
    /// remains, only the remainder moves, and an odd half-unit goes to OOP.
    pub fn depression_update(&mut self, op: OperatorKind, failed: bool) -> Result<()> {
        if self.mode != ProbabilityMode::Adaptive {
            return Err(PsaError::Contract(
                "depression update requires adaptive probabilities".into(),
            ));
        }
        if !failed || op == OperatorKind::Oop {
            return Ok(());
        }
        let (own, other) = match op {
            OperatorKind::Sop => (0, 2),
            OperatorKind::Spp => (2, 0),
            OperatorKind::Oop => unreachable!(),
        };
        let moved = self.weights[own].min(2);
        self.weights[own] -= moved;
        self.weights[other] += moved / 2;
        self.weights[1] += moved - moved / 2;
        Ok(())
    }

    /// Restores the uniform (1/3, 1/3, 1/3) point at the start of an iteration.
    pub fn reset(&mut self) -> Result<()> {
        if self.mode != ProbabilityMode::Adaptive {
            return Err(PsaError::Contract(
                "probability reset requires adaptive probabilities".into(),
            ));
        }
        let third = self.total / 3;
        self.weights = [third; 3];
        Ok(())
    }
}

/// Inverse-CDF selection over the order SOP, OOP, SPP.
pub fn select_operator<R: Draw + ?Sized>(
    probs: &OperatorProbabilities,
    rng: &mut R,
) -> OperatorKind {
    let u = rng.uniform(0.0, 1.0);
    let total = probs.total as f64;
    let sop = probs.weights[0] as f64 / total;
    let sop_oop = (probs.weights[0] + probs.weights[1]) as f64 / total;
    if u < sop {
        OperatorKind::Sop
    } else if u < sop_oop {
        OperatorKind::Oop
    } else {
        OperatorKind::Spp
    }
}

/// Size of the SOP pattern set: `⌈N/10⌉`, at least 1.
pub fn pattern_set_size(population_size: usize) -> usize {
    population_size.div_ceil(10).max(1)
}

/// Output of [`sop_generate`] with the draws that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SopSample {
    pub position: Vec<f64>,
    /// Rank of the pattern in the sorted population.
    pub pattern: usize,
    /// Anchor coordinate copied verbatim.
    pub anchor: usize,
}

/// SOP: stretch or reflect the pattern's coordinates about one anchor coordinate.
///
/// With pattern `p` and anchor `a`, each other coordinate becomes
/// `p[a] + r_k (p[k] - p[a])` for an independent `r_k ~ U(-2, 2)`.
pub fn sop_generate<R: Draw + ?Sized>(population: &Population, rng: &mut R) -> Vec<f64> {
    sop_sample(population, rng).position
}

pub fn sop_sample<R: Draw + ?Sized>(population: &Population, rng: &mut R) -> SopSample {
    let top = pattern_set_size(population.len()).min(population.len());
    let pattern = rng.integer(0, top - 1);
    let x = &population.member(pattern).position;
    let anchor = rng.integer(0, x.len() - 1);
    let pivot = x[anchor];
    let position = x
        .iter()
        .enumerate()
        .map(|(k, &xk)| {
            if k == anchor {
                pivot
            } else {
                let r = rng.uniform(-2.0, 2.0);
                // Equal to pivot + r (xk - pivot); returns xk exactly when r = 1.
                xk + (r - 1.0) * (xk - pivot)
            }
        })
        .collect();
    SopSample {
        position,
        pattern,
        anchor,
    }
}

/// Denominator used when averaging component distances for OOP.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaDenominator {
    /// `N - 1` regardless of `K_best`.
    #[default]
    PopulationMinusOne,
    /// `K_best - 1`, a true mean over the ranks used.
    KBestMinusOne,
}

/// Mean absolute distance in coordinate `j` from the best member to ranks `2..=k_best`.
pub fn compute_sigma(population: &Population, k_best: usize, j: usize) -> Result<f64> {
    compute_sigma_with(population, k_best, j, SigmaDenominator::PopulationMinusOne)
}

pub fn compute_sigma_with(
    population: &Population,
    k_best: usize,
    j: usize,
    denominator: SigmaDenominator,
) -> Result<f64> {
    let n = population.len();
    if k_best < 2 || k_best > n {
        return Err(PsaError::Contract(format!(
            "K_best = {k_best} outside 2..={n}"
        )));
    }
    if j >= population.dimension() {
        return Err(PsaError::Contract(format!(
            "dimension index {j} out of range"
        )));
    }
    Ok(sigma_unchecked(population, k_best, j, denominator))
}

fn sigma_unchecked(
    population: &Population,
    k_best: usize,
    j: usize,
    denominator: SigmaDenominator,
) -> f64 {
    let best = population.best().position[j];
    let sum: f64 = population.members()[1..k_best]
        .iter()
        .map(|c| (best - c.position[j]).abs())
        .sum();
    let d = match denominator {
        SigmaDenominator::PopulationMinusOne => population.len() - 1,
        SigmaDenominator::KBestMinusOne => k_best - 1,
    };
    sum / d as f64
}

/// OOP: `x'_j = x_{1,j} + N(0, 2σ_j)` with one `K_best ~ U{2..N}` per call.
///
/// Requires at least two members.
pub fn oop_generate<R: Draw + ?Sized>(population: &Population, rng: &mut R) -> Vec<f64> {
    oop_generate_with(population, rng, SigmaDenominator::default())
}

pub fn oop_generate_with<R: Draw + ?Sized>(
    population: &Population,
    rng: &mut R,
    denominator: SigmaDenominator,
) -> Vec<f64> {
    let k_best = rng.integer(2, population.len());
    oop_sample(population, k_best, denominator, rng)
}

/// OOP with a given `K_best`.
pub fn oop_sample<R: Draw + ?Sized>(
    population: &Population,
    k_best: usize,
    denominator: SigmaDenominator,
    rng: &mut R,
) -> Vec<f64> {
    let best = &population.best().position;
    (0..best.len())
        .map(|j| {
            let sd = 2.0 * sigma_unchecked(population, k_best, j, denominator);
            best[j] + sd * rng.normal()
        })
        .collect()
}

/// SPP: every coordinate copied from an independently drawn member.
pub fn spp_generate<R: Draw + ?Sized>(population: &Population, rng: &mut R) -> Vec<f64> {
    let last = population.len() - 1;
    (0..population.dimension())
        .map(|j| population.member(rng.integer(0, last)).position[j])
        .collect()
}

/// Generates one candidate position with the given operator.
pub fn generate<R: Draw + ?Sized>(
    op: OperatorKind,
    population: &Population,
    denominator: SigmaDenominator,
    rng: &mut R,
) -> Vec<f64> {
    match op {
        OperatorKind::Sop => sop_generate(population, rng),
        OperatorKind::Oop => oop_generate_with(population, rng, denominator),
        OperatorKind::Spp => spp_generate(population, rng),
    }
}
