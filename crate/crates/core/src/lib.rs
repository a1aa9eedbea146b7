//! Verification primitives for upper bounds on the circumference of
//! supercritical random graphs.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation driven by explicit RNG streams; file formats, reports and the
//! command line live in the `cycle-bound-lab` companion crate.
//!
//! Module map:
//!
//! * [`compositions`]: uniform random compositions of `N` into `m` positive
//!   parts, their exact joint law and the exponential limit.
//! * [`biased_tree`]: biased trees, the path-family maximum `f_T`, the
//!   constant `E_T` (closed forms and Monte Carlo), bias optimisation and
//!   admissibility witnesses.
//! * [`pseudograph`]: multigraphs with loops, core/prekernel/kernel
//!   reductions, the bad set and its neighbourhood, tree embeddings, the
//!   certified cycle-weight bound and cycle solvers.
//! * [`kernel_config`]: the kernel configuration model for prekernels with a
//!   given degree sequence.
//! * [`gnm`]: `G(n, M)` sampling, prekernel statistics, the truncated
//!   multinomial degree model and the λ-equation.
#![no_std]
// `!(x > 0.0)` style checks are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod biased_tree;
pub mod compositions;
pub mod error;
pub mod gnm;
pub mod kernel_config;
pub mod optim;
pub mod pseudograph;
pub mod rng;
pub mod stats;

pub use error::{Error, Result};

/// Crate version, embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
