use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{domain, Error, Result};

/// A finite multigraph with loops. Edge `i` joins `edges[i].0` and
/// `edges[i].1`; a loop contributes 2 to the degree of its vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pseudograph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    // (edge, other endpoint); a loop appears twice
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Pseudograph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Structural(format!(
                    "edge {i} = ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            adjacency[u].push((i, v));
            adjacency[v].push((i, u));
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn empty() -> Self {
        Self {
            vertex_count: 0,
            edges: Vec::new(),
            adjacency: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    /// `(edge, other endpoint)` pairs at `v`, loops listed twice.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).max()
    }

    pub fn is_loop(&self, i: usize) -> bool {
        let (u, v) = self.edges[i];
        u == v
    }

    pub fn loop_count(&self) -> usize {
        (0..self.edge_count()).filter(|&i| self.is_loop(i)).count()
    }

    /// Number of edges that repeat an earlier non-loop edge's endpoints.
    pub fn parallel_excess(&self) -> usize {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).filter(|w| w[0] == w[1]).count()
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        self.loop_count() == 0 && self.parallel_excess() == 0
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut label = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut comp = vec![s];
            label[s] = id;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &(_, w) in &self.adjacency[u] {
                    if label[w] == usize::MAX {
                        label[w] = id;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `keep` with vertices renumbered in increasing
    /// order; edges keep their relative order.
    pub fn induced(&self, keep: &[bool]) -> Subgraph {
        let mut new_index = vec![usize::MAX; self.vertex_count];
        let mut vertex_map = Vec::new();
        for v in 0..self.vertex_count {
            if keep[v] {
                new_index[v] = vertex_map.len();
                vertex_map.push(v);
            }
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if keep[u] && keep[v] {
                edges.push((new_index[u], new_index[v]));
                edge_map.push(i);
            }
        }
        Subgraph {
            graph: Pseudograph::new(vertex_map.len(), edges).expect("induced edges are in range"),
            vertex_map,
            edge_map,
        }
    }

    /// Disjoint union with `other`, whose vertices are shifted past ours.
    pub fn disjoint_union(&self, other: &Pseudograph) -> Pseudograph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Pseudograph::new(shift + other.vertex_count, edges).expect("union edges are in range")
    }

    /// Sorted `(min, max)` endpoint pairs; equal for graphs that differ only
    /// in edge order.
    pub fn canonical_edge_list(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }
}

/// An induced subgraph together with the original index of each of its
/// vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Pseudograph,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

/// A pseudograph with a positive integer weight on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPseudograph {
    graph: Pseudograph,
    weights: Vec<u64>,
    total: u64,
}

impl WeightedPseudograph {
    pub fn new(graph: Pseudograph, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != graph.edge_count() {
            return Err(domain(format!(
                "expected {} weights, got {}",
                graph.edge_count(),
                weights.len()
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(domain(format!("edge {i} has weight 0; weights must be positive")));
        }
        let total = weights
            .iter()
            .try_fold(0u64, |acc, &w| acc.checked_add(w))
            .ok_or_else(|| domain("total weight overflows u64"))?;
        Ok(Self { graph, weights, total })
    }

    /// Every edge of weight 1.
    pub fn unit(graph: Pseudograph) -> Self {
        let weights = vec![1; graph.edge_count()];
        Self::new(graph, weights).expect("unit weights are valid")
    }

    pub fn graph(&self) -> &Pseudograph {
        &self.graph
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    /// `N`, the sum of the weights.
    pub fn total_weight(&self) -> u64 {
        self.total
    }

    pub fn into_parts(self) -> (Pseudograph, Vec<u64>) {
        (self.graph, self.weights)
    }

    /// Weight of an edge set.
    pub fn weight_of(&self, edges: &[usize]) -> u64 {
        edges.iter().map(|&e| self.weights[e]).sum()
    }
}

/// Named graphs used in examples and tests.
pub mod generators {
    use super::*;

    /// The Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner
    /// pentagram on `5..10`.
    pub fn petersen() -> Pseudograph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
        }
        for i in 0..5 {
            edges.push((i, i + 5));
        }
        for i in 0..5 {
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Pseudograph::new(10, edges).expect("valid Petersen graph")
    }

    pub fn complete(n: usize) -> Pseudograph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Pseudograph::new(n, edges).expect("valid complete graph")
    }

    /// The cycle on `n` vertices; `n = 1` is a loop and `n = 2` a double edge.
    pub fn cycle(n: usize) -> Pseudograph {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Pseudograph::new(n, edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Pseudograph {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Pseudograph::new(n, edges).expect("valid path")
    }

    /// Two poles `0` and `1` joined by internally disjoint paths, the `j`-th
    /// with `internal[j]` interior vertices.
    pub fn theta(internal: &[usize]) -> Pseudograph {
        let mut edges = Vec::new();
        let mut next = 2;
        for &t in internal {
            let mut prev = 0;
            for _ in 0..t {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Pseudograph::new(next, edges).expect("valid theta graph")
    }

    /// The 3-regular tree truncated `depth` edges from an edge `0 -- 1`:
    /// every vertex at distance below `depth` from that edge has degree 3.
    pub fn cubic_tree(depth: usize) -> Pseudograph {
        let mut edges = vec![(0, 1)];
        let mut frontier = vec![0, 1];
        let mut next = 2;
        for _ in 0..depth {
            let mut grown = Vec::new();
            for &u in &frontier {
                for _ in 0..2 {
                    edges.push((u, next));
                    grown.push(next);
                    next += 1;
                }
            }
            frontier = grown;
        }
        Pseudograph::new(next, edges).expect("valid cubic tree")
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;

    #[test]
    fn degrees_count_loops_twice() {
        let g = Pseudograph::new(2, vec![(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.degrees(), vec![4, 2]);
        assert_eq!(g.loop_count(), 1);
        assert_eq!(g.parallel_excess(), 1);
        assert!(!g.is_simple());
        assert!(Pseudograph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn generators_have_expected_sizes() {
        let p = petersen();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert!(p.is_simple());
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(cycle(1).degrees(), vec![2]);
        let t = theta(&[2, 3, 4]);
        assert_eq!((t.vertex_count(), t.edge_count()), (11, 12));
        assert_eq!((t.degree(0), t.degree(1)), (3, 3));
        let tree = cubic_tree(2);
        assert_eq!(tree.edge_count(), 1 + 4 + 8);
        assert_eq!((tree.degree(0), tree.degree(2)), (3, 3));
    }

    #[test]
    fn weights_must_be_positive() {
        let g = cycle(3);
        assert!(WeightedPseudograph::new(g.clone(), vec![1, 0, 2]).is_err());
        assert!(WeightedPseudograph::new(g.clone(), vec![1, 2]).is_err());
        let w = WeightedPseudograph::new(g, vec![1, 2, 3]).unwrap();
        assert_eq!(w.total_weight(), 6);
    }

    #[test]
    fn components_and_induced() {
        let g = complete(3).disjoint_union(&cycle(4));
        assert_eq!(g.components().len(), 2);
        let keep: Vec<bool> = (0..7).map(|v| v >= 3).collect();
        let sub = g.induced(&keep);
        assert_eq!(sub.graph.edge_count(), 4);
        assert_eq!(sub.vertex_map, vec![3, 4, 5, 6]);
        assert_eq!(sub.edge_map, vec![3, 4, 5, 6]);
    }
}
