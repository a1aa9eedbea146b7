use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::families::{enumerate_path_families, PathFamily};
use crate::error::{domain, Error, Result};

/// Largest supported tree; edge subsets are stored as `u64` masks.
pub const MAX_TREE_EDGES: usize = 63;

/// An unbiased tree whose non-leaf vertices all have degree 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeShape {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl TreeShape {
    /// Builds a shape from 0-based vertex pairs. Edge `i` of the shape is
    /// `edges[i]`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let k = edges.len();
        if k < 3 {
            return Err(Error::Structural(format!(
                "a tree with non-leaf degree 3 needs at least 3 edges, got {k}"
            )));
        }
        if k > MAX_TREE_EDGES {
            return Err(Error::Structural(format!(
                "trees are limited to {MAX_TREE_EDGES} edges"
            )));
        }
        if vertex_count != k + 1 {
            return Err(Error::Structural(format!(
                "a tree on {k} edges has {} vertices, got {vertex_count}",
                k + 1
            )));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Structural(format!("edge {i} has an endpoint out of range")));
            }
            if u == v {
                return Err(Error::Structural(format!("edge {i} is a loop")));
            }
            adjacency[u].push((i, v));
            adjacency[v].push((i, u));
        }
        // k = |V| - 1 edges, so connected implies acyclic
        let mut seen = vec![false; vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(_, w) in &adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Structural("edges do not form a connected tree".into()));
        }
        if let Some(v) = adjacency.iter().position(|a| a.len() != 1 && a.len() != 3) {
            return Err(Error::Structural(format!(
                "vertex {v} has degree {}, expected 1 or 3",
                adjacency[v].len()
            )));
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
        })
    }

    /// The 3-edge star.
    pub fn star() -> Self {
        Self::new(4, vec![(0, 1), (0, 2), (0, 3)]).expect("valid star")
    }

    /// Two adjacent centres `v = 0`, `w = 1`; edges ordered as leaf edges at
    /// `v`, the middle edge, then leaf edges at `w`.
    pub fn t5() -> Self {
        Self::new(6, vec![(0, 2), (0, 3), (0, 1), (1, 4), (1, 5)]).expect("valid T5")
    }

    /// A complete binary tree on six edges with an extra edge at the root.
    /// Edge 0 is the extra edge, edges 1 and 2 the other root edges, edges
    /// 3–4 hang below edge 1 and edges 5–6 below edge 2.
    pub fn t7() -> Self {
        Self::new(8, vec![(0, 1), (0, 2), (0, 3), (2, 4), (2, 5), (3, 6), (3, 7)]).expect("valid T7")
    }

    /// A centre joined to three degree-3 vertices, each carrying two leaves.
    /// Edges 0–5 are the leaf edges, edges 6–8 the internal edges.
    pub fn t9() -> Self {
        Self::new(
            10,
            vec![(1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9), (0, 1), (0, 2), (0, 3)],
        )
        .expect("valid T9")
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

    /// `(edge index, other endpoint)` pairs at `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adjacency[v].len() == 1
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn internal_count(&self) -> usize {
        (0..self.vertex_count).filter(|&v| !self.is_leaf(v)).count()
    }

    /// Whether edge `i` ends at a leaf.
    pub fn is_leaf_edge(&self, i: usize) -> bool {
        let (u, v) = self.edges[i];
        self.is_leaf(u) || self.is_leaf(v)
    }
}

/// Bias vectors are accepted when they sum to 1 within this tolerance.
pub const BIAS_SUM_TOLERANCE: f64 = 1e-12;

/// A tree shape with nonnegative edge biases summing to 1.
#[derive(Debug, Clone)]
pub struct BiasedTree {
    shape: TreeShape,
    biases: Vec<f64>,
    families: PathFamily,
    // one row of length k per family: b_i if e_i is in the family, else 0
    coefficients: Vec<f64>,
}

impl BiasedTree {
    pub fn new(shape: TreeShape, biases: Vec<f64>) -> Result<Self> {
        let k = shape.edge_count();
        if biases.len() != k {
            return Err(domain(format!("expected {k} biases, got {}", biases.len())));
        }
        if biases.iter().any(|b| !(b.is_finite() && *b >= 0.0)) {
            return Err(domain("biases must be finite and nonnegative"));
        }
        let sum: f64 = biases.iter().sum();
        if (sum - 1.0).abs() > BIAS_SUM_TOLERANCE {
            return Err(domain(format!("biases sum to {sum}, expected 1")));
        }
        let families = enumerate_path_families(&shape);
        let mut coefficients = Vec::with_capacity(families.len() * k);
        for &mask in families.masks() {
            coefficients.extend((0..k).map(|i| if mask >> i & 1 == 1 { biases[i] } else { 0.0 }));
        }
        Ok(Self {
            shape,
            biases,
            families,
            coefficients,
        })
    }

    /// Equal bias `1/k` on every edge.
    pub fn uniform(shape: TreeShape) -> Self {
        let k = shape.edge_count();
        let mut biases = vec![1.0 / k as f64; k];
        // absorb rounding so the sum is 1 to the last bit we can manage
        let rest: f64 = biases[1..].iter().sum();
        biases[0] = 1.0 - rest;
        Self::new(shape, biases).expect("uniform biases are valid")
    }

    pub fn shape(&self) -> &TreeShape {
        &self.shape
    }

    pub fn biases(&self) -> &[f64] {
        &self.biases
    }

    pub fn edge_count(&self) -> usize {
        self.shape.edge_count()
    }

    pub fn families(&self) -> &PathFamily {
        &self.families
    }

    /// `f_T(x)` without argument checks. `x` must have one entry per edge.
    #[inline]
    pub fn f_t(&self, x: &[f64]) -> f64 {
        let k = self.edge_count();
        debug_assert_eq!(x.len(), k);
        self.coefficients
            .chunks_exact(k)
            .map(|row| row.iter().zip(x).map(|(b, xi)| b * xi).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// `f_T(x) = max over path families P of Σ_{e_i ∈ P} b_i x_i`.
pub fn eval_f_t(tree: &BiasedTree, x: &[f64]) -> Result<f64> {
    if x.len() != tree.edge_count() {
        return Err(domain(format!(
            "expected {} coordinates, got {}",
            tree.edge_count(),
            x.len()
        )));
    }
    if x.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
        return Err(domain("coordinates must be finite and nonnegative"));
    }
    Ok(tree.f_t(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_structures() {
        assert!(TreeShape::new(3, vec![(0, 1), (1, 2)]).is_err());
        // path on 3 edges: internal vertices of degree 2
        assert!(TreeShape::new(4, vec![(0, 1), (1, 2), (2, 3)]).is_err());
        // cycle plus isolated vertex
        assert!(TreeShape::new(4, vec![(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(TreeShape::new(4, vec![(0, 0), (0, 2), (0, 3)]).is_err());
        assert!(TreeShape::new(4, vec![(0, 1), (0, 2), (0, 9)]).is_err());
    }

    #[test]
    fn standard_shapes() {
        for (shape, k, internal) in [
            (TreeShape::star(), 3, 1),
            (TreeShape::t5(), 5, 2),
            (TreeShape::t7(), 7, 3),
            (TreeShape::t9(), 9, 4),
        ] {
            assert_eq!(shape.edge_count(), k);
            assert_eq!(shape.internal_count(), internal);
            assert_eq!(shape.leaves().len(), internal + 2);
        }
        let t5 = TreeShape::t5();
        assert_eq!(
            (0..5).map(|i| t5.is_leaf_edge(i)).collect::<Vec<_>>(),
            vec![true, true, false, true, true]
        );
    }

    #[test]
    fn rejects_bad_biases() {
        let s = TreeShape::star();
        assert!(BiasedTree::new(s.clone(), vec![0.5, 0.5]).is_err());
        assert!(BiasedTree::new(s.clone(), vec![0.5, 0.6, -0.1]).is_err());
        assert!(BiasedTree::new(s.clone(), vec![0.5, 0.5, 0.1]).is_err());
        assert!(BiasedTree::new(s, vec![1.0, 0.0, 0.0]).is_ok());
    }

    #[test]
    fn f_t_examples() {
        let star = BiasedTree::uniform(TreeShape::star());
        let v = eval_f_t(&star, &[3.0, 1.0, 2.0]).unwrap();
        assert!((v - 5.0 / 3.0).abs() < 1e-15);
        assert_eq!(eval_f_t(&star, &[0.0; 3]).unwrap(), 0.0);
        assert!(eval_f_t(&star, &[1.0, 2.0]).is_err());
        assert!(eval_f_t(&star, &[1.0, -2.0, 0.0]).is_err());

        let t5 = BiasedTree::new(TreeShape::t5(), vec![0.1, 0.1, 0.6, 0.1, 0.1]).unwrap();
        let v = eval_f_t(&t5, &[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        // e2 e3 e5: 0.2 + 1.8 + 0.5
        assert!((v - 2.5).abs() < 1e-12);
    }

    proptest::proptest! {
        #[test]
        fn f_t_is_homogeneous_monotone_and_bounded(
            x in proptest::collection::vec(0.0f64..10.0, 9),
            raw in proptest::collection::vec(0.01f64..1.0, 9),
            c in 0.0f64..50.0,
            bump in 0.0f64..5.0,
            coord in 0usize..9,
        ) {
            let total: f64 = raw.iter().sum();
            let mut b: Vec<f64> = raw.iter().map(|r| r / total).collect();
            let rest: f64 = b[1..].iter().sum();
            b[0] = 1.0 - rest;
            let t = BiasedTree::new(TreeShape::t9(), b).unwrap();
            let fx = t.f_t(&x);
            let scaled: Vec<f64> = x.iter().map(|v| v * c).collect();
            let fs = t.f_t(&scaled);
            proptest::prop_assert!((fs - c * fx).abs() <= 1e-12 * (c * fx).max(1e-300));
            let mut y = x.clone();
            y[coord] += bump;
            proptest::prop_assert!(t.f_t(&y) >= fx);
            proptest::prop_assert!(fx <= x.iter().sum::<f64>() + 1e-12);
            proptest::prop_assert!(fx >= 0.0);
        }
    }
}
