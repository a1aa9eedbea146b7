//! Biased trees and the expectation `E_T`.
//!
//! A tree shape has all non-leaf vertices of degree 3. A bias vector puts a
//! nonnegative weight on each edge, summing to 1. For edge weights `x`,
//! `f_T(x)` is the largest biased weight of a maximal union of
//! vertex-disjoint leaf-to-leaf paths, and `E_T` is its mean under i.i.d.
//! unit exponentials.

mod admissibility;
mod closed_form;
mod families;
mod monte_carlo;
mod optimize;
mod shapes;
mod tree;

pub use admissibility::{
    admissibility_certificate, AdmissibilitySearch, Certificate, Evidence, MAX_SEARCH_EDGES, MC_CONFIDENCE_SIGMAS,
};
pub use closed_form::{
    bisect, e_t_closed_form, ClosedForm, Polynomial, StandardTree, ROOT_TOLERANCE, STAR_UNIFORM_E_T,
};
pub use families::{enumerate_path_families, PathFamily};
pub use monte_carlo::{accumulate_f_t, e_t_monte_carlo, EtEstimate, MIN_SAMPLES};
pub use optimize::{optimize_bias, BiasOptimum};
pub use shapes::{canonical_code, edge_automorphisms, tree_shapes};
pub use tree::{eval_f_t, BiasedTree, TreeShape, BIAS_SUM_TOLERANCE, MAX_TREE_EDGES};
