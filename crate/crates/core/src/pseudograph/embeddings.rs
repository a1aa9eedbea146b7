use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::bad_set::BadSet;
use super::graph::Pseudograph;
use crate::biased_tree::TreeShape;
use crate::error::{Error, Result};

/// All vertex-injective homomorphisms of a tree into a graph that avoid a
/// forbidden edge set, stored as tree-edge → graph-edge maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingSet {
    tree_edges: usize,
    graph_edges: usize,
    // row-major, tree_edges entries per embedding
    maps: Vec<usize>,
    // through[j * tree_edges + i] = #{σ : σ(e_i) = w_j}
    through: Vec<u64>,
}

impl EmbeddingSet {
    pub fn len(&self) -> usize {
        self.maps.len() / self.tree_edges
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn tree_edge_count(&self) -> usize {
        self.tree_edges
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.maps.chunks_exact(self.tree_edges)
    }

    /// Number of embeddings sending tree edge `slot` onto graph edge `edge`.
    pub fn through_count(&self, edge: usize, slot: usize) -> u64 {
        self.through[edge * self.tree_edges + slot]
    }

    /// Smallest through-count over graph edges outside `Γ(B)` and all tree
    /// slots; `None` when every edge lies in `Γ(B)`.
    pub fn min_regular_count(&self, bad: &BadSet) -> Option<u64> {
        (0..self.graph_edges)
            .filter(|&j| !bad.in_gamma(j))
            .flat_map(|j| (0..self.tree_edges).map(move |i| (j, i)))
            .map(|(j, i)| self.through_count(j, i))
            .min()
    }

    /// The common through-count outside `Γ(B)`, checked to equal
    /// `expected` at every edge and slot there.
    pub fn regular_count(&self, bad: &BadSet, expected: u64) -> Result<Option<u64>> {
        for j in (0..self.graph_edges).filter(|&j| !bad.in_gamma(j)) {
            for i in 0..self.tree_edges {
                let c = self.through_count(j, i);
                if c != expected {
                    return Err(Error::Structural(format!(
                        "tree edge {i} maps onto graph edge {j} in {c} embeddings, expected {expected}"
                    )));
                }
            }
        }
        Ok((0..self.graph_edges).any(|j| !bad.in_gamma(j)).then_some(expected))
    }
}

/// `2^(1 + number of non-leaf vertices)`: the through-count of a tree edge
/// onto a graph edge whose surroundings look like the infinite cubic tree.
pub fn expected_through_count(shape: &TreeShape) -> u64 {
    1u64 << (1 + shape.internal_count())
}

/// Enumerates every 1-1 homomorphism of `shape` into `g` that uses no edge
/// marked in `forbidden` (and no loop).
///
/// Tree vertices are placed in breadth-first order from vertex 0; each
/// non-root vertex goes to an unused neighbour of its parent's image along an
/// allowed edge. Parallel edges give distinct embeddings.
pub fn enumerate_tree_embeddings(shape: &TreeShape, g: &Pseudograph, forbidden: &[bool]) -> EmbeddingSet {
    let tv = shape.vertex_count();
    let k = shape.edge_count();
    let mut order = vec![0usize];
    // (parent, tree edge to parent)
    let mut parent = vec![(usize::MAX, usize::MAX); tv];
    let mut seen = vec![false; tv];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &(e, w) in shape.incident(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = (u, e);
                order.push(w);
            }
        }
    }

    let mut set = EmbeddingSet {
        tree_edges: k,
        graph_edges: g.edge_count(),
        maps: Vec::new(),
        through: vec![0; g.edge_count() * k],
    };
    let mut state = Search {
        shape,
        g,
        forbidden,
        order: &order,
        parent: &parent,
        image: vec![usize::MAX; tv],
        used: vec![false; g.vertex_count()],
        edge_map: vec![usize::MAX; k],
    };
    for root in 0..g.vertex_count() {
        if g.degree(root) < shape.degree(0) {
            continue;
        }
        state.image[0] = root;
        state.used[root] = true;
        state.extend(1, &mut set);
        state.used[root] = false;
    }
    set
}

struct Search<'a> {
    shape: &'a TreeShape,
    g: &'a Pseudograph,
    forbidden: &'a [bool],
    order: &'a [usize],
    parent: &'a [(usize, usize)],
    image: Vec<usize>,
    used: Vec<bool>,
    edge_map: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, set: &mut EmbeddingSet) {
        if depth == self.order.len() {
            let k = self.edge_map.len();
            for (i, &j) in self.edge_map.iter().enumerate() {
                set.through[j * k + i] += 1;
            }
            set.maps.extend_from_slice(&self.edge_map);
            return;
        }
        let t = self.order[depth];
        let (p, te) = self.parent[t];
        let host = self.image[p];
        let need = self.shape.degree(t);
        for &(ge, w) in self.g.incident(host) {
            if self.forbidden[ge] || w == host || self.used[w] || self.g.degree(w) < need {
                continue;
            }
            self.image[t] = w;
            self.used[w] = true;
            self.edge_map[te] = ge;
            self.extend(depth + 1, set);
            self.used[w] = false;
        }
    }
}
