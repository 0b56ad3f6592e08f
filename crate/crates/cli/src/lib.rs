//! Front end of the `psa` binary: argument model and output writers.

pub mod args;
pub mod output;
