//! Companion to `cycle-bound-core`: text formats for graphs, trees and degree
//! sequences; versioned JSON and CSV reports; and the experiment commands
//! behind the `cycle-bound-lab` binary.
//!
//! Every command is a pure function of its config. Replica `i` of a run uses
//! RNG stream `(seed, i)`, replicas are spread over a rayon pool but
//! collected in order, so a config and seed determine the CSV bytes. The JSON
//! report adds a wall-clock block unless `deterministic` is set.

pub mod commands;
pub mod error;
pub mod formats;
pub mod report;

pub use error::{LabError, Result};
