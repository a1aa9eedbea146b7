//! Core, prekernel and kernel.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::{Pseudograph, Subgraph, WeightedPseudograph};
use crate::error::{domain, Result};

/// Vertices of the core: everything left after repeatedly deleting vertices
/// of degree at most 1.
pub fn core_mask(g: &Pseudograph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &(_, w) in g.incident(v) {
            // a vertex of degree <= 1 has no loop, so w != v
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// The maximal subgraph of minimum degree at least 2.
pub fn core(g: &Pseudograph) -> Pseudograph {
    core_subgraph(g).graph
}

pub fn core_subgraph(g: &Pseudograph) -> Subgraph {
    g.induced(&core_mask(g))
}

/// Vertices of the prekernel: the core minus its cycle components.
pub fn prekernel_mask(g: &Pseudograph) -> Vec<bool> {
    let mut keep = core_mask(g);
    let sub = g.induced(&keep);
    for comp in sub.graph.components() {
        if comp.iter().all(|&v| sub.graph.degree(v) == 2) {
            for v in comp {
                keep[sub.vertex_map[v]] = false;
            }
        }
    }
    keep
}

/// The core with every component that is a cycle removed.
pub fn prekernel(g: &Pseudograph) -> Pseudograph {
    prekernel_subgraph(g).graph
}

pub fn prekernel_subgraph(g: &Pseudograph) -> Subgraph {
    g.induced(&prekernel_mask(g))
}

/// A maximal path through degree-2 vertices, as original edges in order and
/// the interior vertices between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub edges: Vec<usize>,
    pub interior: Vec<usize>,
}

/// Result of suppressing the degree-2 vertices of a graph with minimum
/// degree at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Vertices of degree at least 3, joined by one edge per chain; the weight
    /// of a kernel edge is the total weight of its chain.
    pub kernel: WeightedPseudograph,
    /// Original index of each kernel vertex.
    pub kernel_vertices: Vec<usize>,
    /// `chains[e]` runs from the first to the second endpoint of kernel edge
    /// `e`.
    pub chains: Vec<Chain>,
    /// Components in which every vertex has degree 2, with the total weight
    /// of each.
    pub cycle_components: Vec<(Chain, u64)>,
}

impl Reduction {
    /// Original edges of a set of kernel edges.
    pub fn expand(&self, kernel_edges: &[usize]) -> Vec<usize> {
        kernel_edges
            .iter()
            .flat_map(|&e| self.chains[e].edges.iter().copied())
            .collect()
    }
}

/// Replaces every maximal path of degree-2 vertices by a single edge whose
/// weight is the path's total weight.
///
/// `g` must have minimum degree at least 2. Components without a vertex of
/// degree at least 3 are cycles; they are reported separately.
pub fn suppress_degree_two(g: &WeightedPseudograph) -> Result<Reduction> {
    let graph = g.graph();
    let n = graph.vertex_count();
    if let Some(v) = (0..n).find(|&v| graph.degree(v) < 2) {
        return Err(domain(format!("vertex {v} has degree {} < 2", graph.degree(v))));
    }
    let mut kernel_index = vec![usize::MAX; n];
    let mut kernel_vertices = Vec::new();
    for (v, index) in kernel_index.iter_mut().enumerate() {
        if graph.degree(v) >= 3 {
            *index = kernel_vertices.len();
            kernel_vertices.push(v);
        }
    }
    let mut used = vec![false; graph.edge_count()];
    let walk = |start: usize, first: usize, used: &mut [bool]| -> (Chain, usize, u64) {
        let mut edges = vec![first];
        let mut interior = Vec::new();
        let mut weight = g.weight(first);
        used[first] = true;
        let (a, b) = graph.edge(first);
        let mut cur = if a == start { b } else { a };
        let mut arrived = first;
        while graph.degree(cur) == 2 && cur != start {
            interior.push(cur);
            let &(e, next) = graph
                .incident(cur)
                .iter()
                .find(|&&(e, _)| e != arrived)
                .expect("degree-2 vertex has a second edge");
            used[e] = true;
            edges.push(e);
            weight += g.weight(e);
            arrived = e;
            cur = next;
        }
        (Chain { edges, interior }, cur, weight)
    };

    let mut kernel_edges = Vec::new();
    let mut kernel_weights = Vec::new();
    let mut chains = Vec::new();
    for &u in &kernel_vertices {
        for &(e, _) in graph.incident(u) {
            if used[e] {
                continue;
            }
            let (chain, end, weight) = walk(u, e, &mut used);
            kernel_edges.push((kernel_index[u], kernel_index[end]));
            kernel_weights.push(weight);
            chains.push(chain);
        }
    }
    let mut cycle_components = Vec::new();
    for v in 0..n {
        if let Some(&(e, _)) = graph.incident(v).iter().find(|&&(e, _)| !used[e]) {
            // v lies on a cycle of degree-2 vertices; walk back to v
            let (mut chain, end, weight) = walk(v, e, &mut used);
            debug_assert_eq!(end, v);
            chain.interior.insert(0, v);
            cycle_components.push((chain, weight));
        }
    }
    let kernel = WeightedPseudograph::new(Pseudograph::new(kernel_vertices.len(), kernel_edges)?, kernel_weights)?;
    Ok(Reduction {
        kernel,
        kernel_vertices,
        chains,
        cycle_components,
    })
}

/// The kernel of a prekernel, with weight `1 +` (number of suppressed
/// vertices) on each edge. The total weight equals the prekernel's edge
/// count.
pub fn kernel_with_weights(g: &Pseudograph) -> Result<WeightedPseudograph> {
    Ok(kernel_reduction(g)?.kernel)
}

/// [`kernel_with_weights`] with the chain bookkeeping.
pub fn kernel_reduction(g: &Pseudograph) -> Result<Reduction> {
    let r = suppress_degree_two(&WeightedPseudograph::unit(g.clone()))?;
    if !r.cycle_components.is_empty() {
        return Err(domain(format!(
            "input has {} cycle component(s); pass its prekernel",
            r.cycle_components.len()
        )));
    }
    Ok(r)
}

/// Replaces each edge of weight `w` by a path of `w` unit edges. Kernel
/// vertices keep their indices; new vertices follow in edge order.
pub fn resubdivide(g: &WeightedPseudograph) -> Pseudograph {
    let graph = g.graph();
    let mut next = graph.vertex_count();
    let mut edges = Vec::with_capacity(g.total_weight() as usize);
    for (i, &(u, v)) in graph.edges().iter().enumerate() {
        let mut prev = u;
        for _ in 1..g.weight(i) {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Pseudograph::new(next, edges).expect("subdivided edges are in range")
}
