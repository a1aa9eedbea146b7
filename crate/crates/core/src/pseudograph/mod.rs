//! Pseudographs (multigraphs with loops) and the heavy-cycle machinery.
//!
//! Loops count 2 toward the degree and are cycles of length 1; two parallel
//! edges form a cycle of length 2. A cycle is identified with its edge set.

mod bad_set;
mod bound;
mod cycles;
mod embeddings;
mod graph;
mod reduction;
mod subdivide;

pub use bad_set::{bad_set, short_cycle_edges, BadSet};
pub use bound::{certified_cycle_weight_bound, certified_cycle_weight_bound_with, CertifiedBound};
pub use cycles::{enumerate_cycles, max_weight_cycle, CycleList, CycleSolution, SolveMode, EXACT_MAX_VERTICES};
pub use embeddings::{enumerate_tree_embeddings, expected_through_count, EmbeddingSet};
pub use graph::{generators, Pseudograph, Subgraph, WeightedPseudograph};
pub use reduction::{
    core, core_mask, core_subgraph, kernel_reduction, kernel_with_weights, prekernel, prekernel_mask,
    prekernel_subgraph, resubdivide, suppress_degree_two, Chain, Reduction,
};
pub use subdivide::subdivide_uniformly;
