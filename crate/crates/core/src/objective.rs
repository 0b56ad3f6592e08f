use crate::population::SearchSpace;
use crate::rng::Draw;

/// A minimization target.
pub trait Objective: Sync {
    /// Stable identifier used in diagnostics and output records.
    fn id(&self) -> &str;

    fn dimension(&self) -> usize;

    /// Region the initial population is drawn from.
    fn search_space(&self) -> SearchSpace;

    /// Known global minimum, if any. Required by the accuracy stopping rule.
    fn optimum_value(&self) -> Option<f64>;

    fn value(&self, x: &[f64]) -> f64;

    /// Value of a possibly noisy objective. Noise-free objectives ignore `rng`.
    fn value_with(&self, x: &[f64], rng: &mut dyn Draw) -> f64 {
        let _ = rng;
        self.value(x)
    }
}

/// Wraps a closure as an [`Objective`]; handy for tests and ad-hoc problems.
pub struct FnObjective<F> {
    id: String,
    space: SearchSpace,
    optimum: Option<f64>,
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    pub fn new(id: impl Into<String>, space: SearchSpace, f: F) -> Self {
        Self {
            id: id.into(),
            space,
            optimum: None,
            f,
        }
    }

    pub fn with_optimum(mut self, value: f64) -> Self {
        self.optimum = Some(value);
        self
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn id(&self) -> &str {
        &self.id
    }

    fn dimension(&self) -> usize {
        self.space.dimension()
    }

    fn search_space(&self) -> SearchSpace {
        self.space.clone()
    }

    fn optimum_value(&self) -> Option<f64> {
        self.optimum
    }

    fn value(&self, x: &[f64]) -> f64 {
        (self.f)(x)
    }
}
