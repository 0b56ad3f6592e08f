//! Perfectionism Search Algorithm (PSA).
//!
//! A population-based metaheuristic for continuous minimization. Each
//! iteration generates `N` candidates with three operators chosen at random:
//!
//! * **SOP** reshapes the coordinate profile of a pattern taken from the best
//!   tenth of the population,
//! * **OOP** samples around the incumbent best with per-dimension normal
//!   noise scaled by component distances,
//! * **SPP** assembles a candidate by copying every coordinate from a random
//!   population member.
//!
//! The union of the old population and the newcomers is then truncated back
//! to the `N` best members.
//!
//! ```
//! use psa_core::{benchmarks, psa::{run, RunConfig}};
//!
//! let sphere = benchmarks::get("f9", 5).unwrap();
//! let config = RunConfig { dimension: 5, max_iterations: 50, seed: 7, ..RunConfig::default() };
//! let result = run(&config, &sphere).unwrap();
//! assert!(result.best_value < 1e-3);
//! assert_eq!(result.nfe, 50 * 51);
//! ```

pub mod benchmarks;
pub mod error;
pub mod harness;
pub mod objective;
pub mod operators;
pub mod population;
pub mod psa;
pub mod rng;

pub use error::{PsaError, Result};
pub use objective::Objective;
pub use population::{Candidate, EvaluationCounter, Population, SearchSpace};
pub use rng::{Draw, RandomStream};
