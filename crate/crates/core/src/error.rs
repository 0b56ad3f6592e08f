use thiserror::Error;

pub type Result<T, E = PsaError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PsaError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("contract violation: {0}")]
    Contract(String),

    /// The objective returned a value that cannot be ranked: NaN, or `-inf` during
    /// a search, or any non-finite value through direct evaluation.
    #[error("{function} returned unusable value {value} at {position:?}")]
    Evaluation {
        function: String,
        value: f64,
        position: Vec<f64>,
    },

    #[error("unknown benchmark function `{0}`")]
    UnknownFunction(String),

    #[error("empty input to {0}")]
    EmptyInput(&'static str),

    #[error("run of {function} with seed {seed} failed at iteration {iteration}: {source}")]
    Run {
        function: String,
        seed: u64,
        iteration: usize,
        #[source]
        source: Box<PsaError>,
    },
}
