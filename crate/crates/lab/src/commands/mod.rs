//! One module per subcommand. Each takes a serializable config and returns
//! an [`Output`](crate::report::Output); nothing here touches the terminal.

pub mod composition_stats;
pub mod constants;
pub mod et_mc;
pub mod gnm_suite;
pub mod optimize_bias;
pub mod verify_bound;

use std::path::Path;

use cycle_bound_core::biased_tree::{e_t_closed_form, BiasedTree, StandardTree, TreeShape, STAR_UNIFORM_E_T};
use cycle_bound_core::pseudograph::{SolveMode, EXACT_MAX_VERTICES};
use rayon::prelude::*;

use crate::error::{LabError, Result};
use crate::formats::parse_tree_literal;

/// Resolves `star`, `T5`, `T7`, `T9` (closed-form optimal biases), a tree
/// literal, or `@path` to a file holding one.
pub fn resolve_tree(spec: &str) -> Result<BiasedTree> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("star") {
        return Ok(BiasedTree::uniform(TreeShape::star()));
    }
    if let Some(t) = StandardTree::from_name(spec) {
        return Ok(e_t_closed_form(t)?.biased_tree());
    }
    if let Some(path) = spec.strip_prefix('@') {
        let path = Path::new(path);
        let text = std::fs::read_to_string(path).map_err(|source| LabError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        return parse_tree_literal(&text).map_err(|e| e.in_file(path));
    }
    if spec.starts_with("tree") {
        return parse_tree_literal(spec);
    }
    Err(LabError::Usage(format!(
        "unknown tree `{spec}`: expected star, T5, T7, T9, a `tree k=...` literal or @file"
    )))
}

/// The exact `E_T` of a named tree, when one is known.
pub fn known_constant(spec: &str) -> Option<f64> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("star") {
        return Some(STAR_UNIFORM_E_T);
    }
    StandardTree::from_name(spec)
        .and_then(|t| e_t_closed_form(t).ok())
        .map(|cf| cf.value)
}

/// `f(i)` for every replica, in replica order, spread over the rayon pool.
pub fn fan_out<T: Send, F: Fn(u64) -> T + Sync + Send>(replicas: u64, f: F) -> Vec<T> {
    (0..replicas).into_par_iter().map(f).collect()
}

/// Exact search when the kernel is small enough, otherwise the node-limited
/// heuristic. The label goes into reports.
pub fn solver_for(kernel_vertices: usize, max_nodes: u64) -> (SolveMode, &'static str) {
    if kernel_vertices <= EXACT_MAX_VERTICES {
        (SolveMode::Exact, "exact")
    } else {
        (SolveMode::Heuristic { max_nodes }, "heuristic")
    }
}

/// Default node budget of the heuristic solver.
pub const DEFAULT_MAX_NODES: u64 = 2_000_000;
