use alloc::format;
use alloc::vec;

use super::bad_set::{bad_set, BadSet};
use super::embeddings::{enumerate_tree_embeddings, expected_through_count};
use super::graph::WeightedPseudograph;
use crate::biased_tree::BiasedTree;
use crate::error::{domain, Result};

/// An upper bound on the weight of every cycle of a weighted pseudograph.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedBound {
    /// `Σ_{e∈Γ(B)} X_e + (1/a) Σ_σ f_T(X_σ)`, or `N` when degenerate.
    pub value: f64,
    pub gamma_weight: u64,
    /// `Σ_σ f_T(X_σ)` over all embeddings into `G ∖ B`.
    pub embedding_sum: f64,
    /// The common through-count `a`; `None` when every edge lies in `Γ(B)`.
    pub through_count: Option<u64>,
    pub embeddings: usize,
    pub bad_edges: usize,
    pub gamma_edges: usize,
    /// Every edge is in `Γ(B)`; the bound falls back to the total weight.
    pub degenerate: bool,
}

/// Certified bound for `tree` with neighbourhood radius `k`.
///
/// For a cycle `C`, summing `Σ_i b_i X_{σ(e_i)} 1[σ(e_i) ∈ C]` over all
/// embeddings `σ` avoiding `B` gives at most `Σ_σ f_T(X_σ)`: images of
/// internal tree vertices have degree 3, so `C` meets each `σ(T)` in
/// leaf-to-leaf paths. Each edge outside `Γ(B)` is covered exactly `a` times
/// per slot, and the biases sum to 1, so the same sum is at least `a` times
/// the weight of `C ∖ Γ(B)`. Requires `k` at least the tree's edge count and
/// minimum degree 3.
pub fn certified_cycle_weight_bound(g: &WeightedPseudograph, tree: &BiasedTree, k: usize) -> Result<CertifiedBound> {
    let bad = bad_set(g.graph(), k);
    certified_cycle_weight_bound_with(g, tree, &bad)
}

/// [`certified_cycle_weight_bound`] with a precomputed bad set.
pub fn certified_cycle_weight_bound_with(
    g: &WeightedPseudograph,
    tree: &BiasedTree,
    bad: &BadSet,
) -> Result<CertifiedBound> {
    let graph = g.graph();
    let k = bad.k();
    if k < tree.edge_count() {
        return Err(domain(format!(
            "radius {k} is below the tree's {} edges",
            tree.edge_count()
        )));
    }
    if let Some(d) = graph.min_degree().filter(|&d| d < 3) {
        return Err(domain(format!("minimum degree {d} < 3; reduce to the kernel first")));
    }
    let gamma_weight: u64 = bad.gamma_edges().iter().map(|&e| g.weight(e)).sum();
    let embeddings = enumerate_tree_embeddings(tree.shape(), graph, bad.b_mask());
    let a = embeddings.regular_count(bad, expected_through_count(tree.shape()))?;
    let mut x = vec![0.0; tree.edge_count()];
    let embedding_sum: f64 = embeddings
        .iter()
        .map(|m| {
            for (xi, &e) in x.iter_mut().zip(m) {
                *xi = g.weight(e) as f64;
            }
            tree.f_t(&x)
        })
        .sum();
    let (value, degenerate) = match a {
        Some(a) => (gamma_weight as f64 + embedding_sum / a as f64, false),
        None => (g.total_weight() as f64, true),
    };
    Ok(CertifiedBound {
        value,
        gamma_weight,
        embedding_sum,
        through_count: a,
        embeddings: embeddings.len(),
        bad_edges: bad.b_edges().len(),
        gamma_edges: bad.gamma_edges().len(),
        degenerate,
    })
}
