use alloc::vec;
use alloc::vec::Vec;

use super::tree::TreeShape;

/// The maximal unions of vertex-disjoint leaf-to-leaf paths of a tree, each
/// stored as an edge mask (bit `i` set when edge `i` is used).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    masks: Vec<u64>,
}

impl PathFamily {
    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.masks.binary_search(&mask).is_ok()
    }
}

struct LeafPath {
    edges: u64,
    vertices: u128,
}

fn leaf_paths(shape: &TreeShape) -> Vec<LeafPath> {
    let leaves = shape.leaves();
    let n = shape.vertex_count();
    let mut out = Vec::new();
    for (a, &from) in leaves.iter().enumerate() {
        // parent pointers from `from`
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(u) = stack.pop() {
            for &(e, w) in shape.incident(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((e, u));
                    stack.push(w);
                }
            }
        }
        for &to in &leaves[a + 1..] {
            let mut edges = 0u64;
            let mut vertices = 1u128 << to;
            let mut cur = to;
            while let Some((e, p)) = parent[cur] {
                edges |= 1 << e;
                vertices |= 1 << p;
                cur = p;
            }
            out.push(LeafPath { edges, vertices });
        }
    }
    out
}

/// Enumerates every maximal union of vertex-disjoint paths whose endpoints
/// are leaves.
///
/// Leaf-to-leaf paths cannot be extended, so a packing is maximal exactly
/// when no further leaf path is vertex-disjoint from it. Packings are grown
/// in path-index order, which visits each one once.
pub fn enumerate_path_families(shape: &TreeShape) -> PathFamily {
    let paths = leaf_paths(shape);
    let mut masks = Vec::new();
    grow(&paths, 0, 0, 0, &mut masks);
    masks.sort_unstable();
    masks.dedup();
    PathFamily { masks }
}

fn grow(paths: &[LeafPath], start: usize, used: u128, edges: u64, out: &mut Vec<u64>) {
    if edges != 0 && paths.iter().all(|p| p.vertices & used != 0) {
        out.push(edges);
    }
    for (i, p) in paths.iter().enumerate().skip(start) {
        if p.vertices & used == 0 {
            grow(paths, i + 1, used | p.vertices, edges | p.edges, out);
        }
    }
}
