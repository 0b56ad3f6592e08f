//! Registry of the 35-function benchmark suite.
//!
//! Ids are stable: `f1`–`f11` (unimodal), `g1`–`g13` (multimodal) and
//! `h1s`–`h11s` (the bases `h1`–`h11` shifted by the all-ones vector).
//! The unshifted bases can be fetched by their plain ids but are not part of
//! [`list_functions`].

pub mod functions;

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PsaError, Result};
use crate::objective::Objective;
use crate::population::SearchSpace;
use crate::rng::Draw;

use functions as fx;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Modality {
    Unimodal,
    Multimodal,
    Shifted,
}

impl fmt::Display for Modality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Modality::Unimodal => "unimodal",
            Modality::Multimodal => "multimodal",
            Modality::Shifted => "shifted",
        })
    }
}

/// How the Quartic noise term is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuarticNoise {
    /// The constant 0.5.
    #[default]
    Fixed,
    /// A fresh `U[0, 1)` draw from the caller's stream on every evaluation.
    Live,
}

/// Exact minimum of the `1/(2n)`-scaled Styblinski-Tang function.
pub const STYBLINSKI_TANG_MIN: f64 = -39.166_165_703_771_42;

/// Styblinski-Tang minimum as commonly quoted in benchmark tables. It is
/// about 1.8e-4 above the true minimum.
pub const STYBLINSKI_TANG_QUOTED_MIN: f64 = -39.16599;

#[derive(Debug, Clone, Copy)]
enum Minimizer {
    Constant(f64),
    DixonPrice,
}

impl Minimizer {
    fn position(self, n: usize) -> Vec<f64> {
        match self {
            Minimizer::Constant(c) => vec![c; n],
            Minimizer::DixonPrice => fx::dixon_price_minimizer(n),
        }
    }
}

#[derive(Clone, Copy)]
struct Entry {
    id: &'static str,
    name: &'static str,
    modality: Modality,
    interval: (f64, f64),
    formula: fn(&[f64]) -> f64,
    minimizer: Minimizer,
    minimum: f64,
}

const fn entry(
    id: &'static str,
    name: &'static str,
    modality: Modality,
    interval: (f64, f64),
    formula: fn(&[f64]) -> f64,
    minimizer: Minimizer,
    minimum: f64,
) -> Entry {
    Entry {
        id,
        name,
        modality,
        interval,
        formula,
        minimizer,
        minimum,
    }
}

use Minimizer::{Constant as At, DixonPrice};
use Modality::{Multimodal as M, Unimodal as U};

const UNIMODAL: [Entry; 11] = [
    entry("f1", "Brown", U, (-1.0, 4.0), fx::brown, At(0.0), 0.0),
    entry(
        "f2",
        "Dixon-Price",
        U,
        (-10.0, 10.0),
        fx::dixon_price,
        DixonPrice,
        0.0,
    ),
    entry(
        "f3",
        "Powell Singular 2",
        U,
        (-4.0, 5.0),
        fx::powell_singular2,
        At(0.0),
        0.0,
    ),
    entry(
        "f4",
        "Quartic",
        U,
        (-1.28, 1.28),
        fx::quartic_base,
        At(0.0),
        fx::QUARTIC_FIXED_NOISE,
    ),
    entry(
        "f5",
        "Rosenbrock",
        U,
        (-30.0, 30.0),
        fx::rosenbrock,
        At(1.0),
        0.0,
    ),
    entry(
        "f6",
        "Schwefel 1.2",
        U,
        (-100.0, 100.0),
        fx::schwefel_1_2,
        At(0.0),
        0.0,
    ),
    entry(
        "f7",
        "Schwefel 2.20",
        U,
        (-100.0, 100.0),
        fx::schwefel_2_20,
        At(0.0),
        0.0,
    ),
    entry(
        "f8",
        "Schwefel 2.22",
        U,
        (-10.0, 10.0),
        fx::schwefel_2_22,
        At(0.0),
        0.0,
    ),
    entry("f9", "Sphere", U, (-100.0, 100.0), fx::sphere, At(0.0), 0.0),
    entry("f10", "Step 2", U, (-10.0, 10.0), fx::step2, At(0.0), 0.0),
    entry(
        "f11",
        "Sum Squares",
        U,
        (-10.0, 10.0),
        fx::sum_squares,
        At(0.0),
        0.0,
    ),
];

const MULTIMODAL: [Entry; 13] = [
    entry("g1", "Ackley", M, (-32.0, 32.0), fx::ackley, At(0.0), 0.0),
    entry("g2", "Deb 1", M, (-1.0, 1.0), fx::deb1, At(0.1), -1.0),
    entry(
        "g3",
        "Drop-Wave",
        M,
        (-5.12, 5.12),
        fx::drop_wave,
        At(0.0),
        -1.0,
    ),
    entry(
        "g4",
        "Griewank",
        M,
        (-100.0, 100.0),
        fx::griewank,
        At(0.0),
        0.0,
    ),
    entry("g5", "Levy", M, (-10.0, 10.0), fx::levy, At(1.0), 0.0),
    entry(
        "g6",
        "Pathological",
        M,
        (-100.0, 100.0),
        fx::pathological,
        At(0.0),
        0.0,
    ),
    entry(
        "g7",
        "Penalty 2",
        M,
        (-50.0, 50.0),
        fx::penalty2,
        At(1.0),
        0.0,
    ),
    entry("g8", "Pinter", M, (-10.0, 10.0), fx::pinter, At(0.0), 0.0),
    entry(
        "g9",
        "Quintic",
        M,
        (-10.0, 10.0),
        fx::quintic,
        At(-1.0),
        0.0,
    ),
    entry(
        "g10",
        "Salomon",
        M,
        (-100.0, 100.0),
        fx::salomon,
        At(0.0),
        0.0,
    ),
    entry(
        "g11",
        "Sargan",
        M,
        (-100.0, 100.0),
        fx::sargan,
        At(0.0),
        0.0,
    ),
    entry(
        "g12",
        "Sinusoidal",
        M,
        (0.0, 180.0),
        fx::sinusoidal,
        At(120.0),
        -3.5,
    ),
    entry(
        "g13",
        "Styblinski-Tang",
        M,
        (-5.0, 5.0),
        fx::styblinski_tang,
        At(fx::STYBLINSKI_TANG_ARGMIN),
        STYBLINSKI_TANG_MIN,
    ),
];

const BASES: [Entry; 11] = [
    entry(
        "h1",
        "Alpine 1",
        M,
        (-10.0, 10.0),
        fx::alpine1,
        At(0.0),
        0.0,
    ),
    entry(
        "h2",
        "Bent Cigar",
        U,
        (-100.0, 100.0),
        fx::bent_cigar,
        At(0.0),
        0.0,
    ),
    entry(
        "h3",
        "Bohachevsky",
        M,
        (-50.0, 50.0),
        fx::bohachevsky,
        At(0.0),
        0.0,
    ),
    entry(
        "h4",
        "Chung Reynolds",
        U,
        (-100.0, 100.0),
        fx::chung_reynolds,
        At(0.0),
        0.0,
    ),
    entry("h5", "Csendes", M, (-1.0, 1.0), fx::csendes, At(0.0), 0.0),
    entry(
        "h6",
        "Ellipsoid",
        U,
        (-100.0, 100.0),
        fx::ellipsoid,
        At(0.0),
        0.0,
    ),
    entry(
        "h7",
        "Rastrigin",
        M,
        (-5.12, 5.12),
        fx::rastrigin,
        At(0.0),
        0.0,
    ),
    entry(
        "h8",
        "Sum of Different Powers",
        U,
        (-1.0, 1.0),
        fx::sum_of_different_powers,
        At(0.0),
        0.0,
    ),
    entry(
        "h9",
        "Trigonometric 1",
        M,
        (0.0, PI),
        fx::trigonometric1,
        At(0.0),
        0.0,
    ),
    entry("h10", "Wavy", M, (-PI, PI), fx::wavy, At(0.0), 0.0),
    entry(
        "h11",
        "Zakharov",
        U,
        (-5.0, 10.0),
        fx::zakharov,
        At(0.0),
        0.0,
    ),
];

const SHIFTED_IDS: [&str; 11] = [
    "h1s", "h2s", "h3s", "h4s", "h5s", "h6s", "h7s", "h8s", "h9s", "h10s", "h11s",
];

/// One row of the registry listing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionInfo {
    pub id: String,
    pub display_name: String,
    pub modality: Modality,
    pub interval: (f64, f64),
    pub optimum_value: f64,
}

/// A configured benchmark: formula, dimension, optional shift and known optimum.
#[derive(Clone)]
pub struct BenchmarkFunction {
    id: String,
    display_name: String,
    modality: Modality,
    interval: (f64, f64),
    dimension: usize,
    formula: fn(&[f64]) -> f64,
    shift: Option<Vec<f64>>,
    optimum_position: Vec<f64>,
    optimum_value: f64,
    quartic: Option<QuarticNoise>,
}

impl fmt::Debug for BenchmarkFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BenchmarkFunction")
            .field("id", &self.id)
            .field("display_name", &self.display_name)
            .field("dimension", &self.dimension)
            .field("shifted", &self.shift.is_some())
            .finish()
    }
}

impl BenchmarkFunction {
    fn from_entry(e: &Entry, dimension: usize) -> Self {
        Self {
            id: e.id.to_string(),
            display_name: e.name.to_string(),
            modality: e.modality,
            interval: e.interval,
            dimension,
            formula: e.formula,
            shift: None,
            optimum_position: e.minimizer.position(dimension),
            optimum_value: e.minimum,
            quartic: (e.id == "f4").then_some(QuarticNoise::Fixed),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn display_name(&self) -> &str {
        &self.display_name
    }

    pub fn modality(&self) -> Modality {
        self.modality
    }

    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn shift(&self) -> Option<&[f64]> {
        self.shift.as_deref()
    }

    pub fn optimum_position(&self) -> &[f64] {
        &self.optimum_position
    }

    pub fn optimum_value(&self) -> f64 {
        self.optimum_value
    }

    /// Switches Quartic to live noise. Other functions are returned unchanged.
    pub fn with_quartic_noise(mut self, noise: QuarticNoise) -> Self {
        if self.quartic.is_some() {
            self.quartic = Some(noise);
        }
        self
    }

    pub fn info(&self) -> FunctionInfo {
        FunctionInfo {
            id: self.id.clone(),
            display_name: self.display_name.clone(),
            modality: self.modality,
            interval: self.interval,
            optimum_value: self.optimum_value,
        }
    }

    fn raw(&self, x: &[f64]) -> f64 {
        match &self.shift {
            Some(s) => {
                let moved: Vec<f64> = x.iter().zip(s).map(|(a, b)| a - b).collect();
                (self.formula)(&moved)
            }
            None => (self.formula)(x),
        }
    }

    /// Evaluates with the noise-free convention, reporting non-finite values as errors.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension {
            return Err(PsaError::Contract(format!(
                "{} expects {} coordinates, got {}",
                self.id,
                self.dimension,
                x.len()
            )));
        }
        let v = self.value(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(PsaError::Evaluation {
                function: self.id.clone(),
                value: v,
                position: x.to_vec(),
            })
        }
    }
}

impl Objective for BenchmarkFunction {
    fn id(&self) -> &str {
        &self.id
    }

    fn dimension(&self) -> usize {
        self.dimension
    }

    fn search_space(&self) -> SearchSpace {
        SearchSpace::uniform(self.dimension, self.interval.0, self.interval.1)
            .expect("registry intervals are non-empty")
    }

    fn optimum_value(&self) -> Option<f64> {
        Some(self.optimum_value)
    }

    fn value(&self, x: &[f64]) -> f64 {
        let v = self.raw(x);
        match self.quartic {
            Some(_) => v + fx::QUARTIC_FIXED_NOISE,
            None => v,
        }
    }

    fn value_with(&self, x: &[f64], rng: &mut dyn Draw) -> f64 {
        let v = self.raw(x);
        match self.quartic {
            Some(QuarticNoise::Fixed) => v + fx::QUARTIC_FIXED_NOISE,
            Some(QuarticNoise::Live) => v + rng.uniform(0.0, 1.0),
            None => v,
        }
    }
}

fn find_entry(id: &str) -> Option<&'static Entry> {
    UNIMODAL
        .iter()
        .chain(MULTIMODAL.iter())
        .chain(BASES.iter())
        .find(|e| e.id == id)
}

fn check_dimension(dimension: usize) -> Result<()> {
    if dimension < 2 {
        return Err(PsaError::Config(format!(
            "benchmark dimension must be at least 2, got {dimension}"
        )));
    }
    Ok(())
}

/// Looks up a function by id at the given dimension.
///
/// Accepts every listed id plus the unshifted bases `h1`–`h11`.
pub fn get(id: &str, dimension: usize) -> Result<BenchmarkFunction> {
    check_dimension(dimension)?;
    if let Some(base) = id.strip_suffix('s') {
        if SHIFTED_IDS.contains(&id) {
            return make_shifted(base, vec![1.0; dimension]);
        }
    }
    find_entry(id)
        .map(|e| BenchmarkFunction::from_entry(e, dimension))
        .ok_or_else(|| PsaError::UnknownFunction(id.to_string()))
}

/// Shifts base `h1`–`h11` so that it evaluates `h(x - shift)`.
pub fn make_shifted(base_id: &str, shift: Vec<f64>) -> Result<BenchmarkFunction> {
    let entry = BASES
        .iter()
        .find(|e| e.id == base_id)
        .ok_or_else(|| PsaError::UnknownFunction(base_id.to_string()))?;
    check_dimension(shift.len())?;
    if shift.iter().any(|s| !s.is_finite()) {
        return Err(PsaError::Config("shift must be finite".into()));
    }
    let mut f = BenchmarkFunction::from_entry(entry, shift.len());
    f.id = format!("{base_id}s");
    f.modality = Modality::Shifted;
    f.optimum_position = f
        .optimum_position
        .iter()
        .zip(&shift)
        .map(|(x, s)| x + s)
        .collect();
    f.shift = Some(shift);
    Ok(f)
}

/// Evaluates function `id` at `x`; the dimension is taken from `x`.
pub fn evaluate_function(id: &str, x: &[f64]) -> Result<f64> {
    get(id, x.len())?.evaluate(x)
}

/// Ids of the 35-function suite in listing order.
pub fn suite_ids() -> Vec<&'static str> {
    UNIMODAL
        .iter()
        .chain(MULTIMODAL.iter())
        .map(|e| e.id)
        .chain(SHIFTED_IDS.iter().copied())
        .collect()
}

/// Suite ids restricted to one modality.
pub fn ids_with_modality(modality: Modality) -> Vec<&'static str> {
    match modality {
        Modality::Unimodal => UNIMODAL.iter().map(|e| e.id).collect(),
        Modality::Multimodal => MULTIMODAL.iter().map(|e| e.id).collect(),
        Modality::Shifted => SHIFTED_IDS.to_vec(),
    }
}

/// The 35 suite entries, f1..f11, g1..g13, h1s..h11s.
pub fn list_functions() -> Vec<FunctionInfo> {
    suite_ids()
        .into_iter()
        .map(|id| get(id, 2).expect("suite ids are registered").info())
        .collect()
}
