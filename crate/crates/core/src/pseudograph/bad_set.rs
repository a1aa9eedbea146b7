use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::Pseudograph;

/// Marks every edge lying on a cycle of length at most `k`. Loops are
/// 1-cycles and a pair of parallel edges is a 2-cycle.
///
/// Edge `uv` is on such a cycle exactly when `v` is within `k - 1` steps of
/// `u` in the graph with `uv` removed.
pub fn short_cycle_edges(g: &Pseudograph, k: usize) -> Vec<bool> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    let mut out = vec![false; g.edge_count()];
    if k == 0 {
        return out;
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            out[e] = true;
            continue;
        }
        // bounded BFS from u avoiding e
        dist[u] = 0;
        touched.push(u);
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if dist[x] + 1 > k - 1 {
                continue;
            }
            for &(f, y) in g.incident(x) {
                if f != e && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    touched.push(y);
                    queue.push_back(y);
                }
            }
            if dist[v] != usize::MAX {
                break;
            }
        }
        out[e] = dist[v] != usize::MAX && dist[v] < k;
        for &t in &touched {
            dist[t] = usize::MAX;
        }
        touched.clear();
        queue.clear();
    }
    out
}

/// The edges `B` that break local cubic tree structure, and their
/// neighbourhood `Γ(B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadSet {
    k: usize,
    in_b: Vec<bool>,
    in_gamma: Vec<bool>,
}

impl BadSet {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn contains(&self, e: usize) -> bool {
        self.in_b[e]
    }

    pub fn in_gamma(&self, e: usize) -> bool {
        self.in_gamma[e]
    }

    pub fn b_mask(&self) -> &[bool] {
        &self.in_b
    }

    pub fn gamma_mask(&self) -> &[bool] {
        &self.in_gamma
    }

    pub fn b_edges(&self) -> Vec<usize> {
        (0..self.in_b.len()).filter(|&e| self.in_b[e]).collect()
    }

    pub fn gamma_edges(&self) -> Vec<usize> {
        (0..self.in_gamma.len()).filter(|&e| self.in_gamma[e]).collect()
    }

    pub fn is_empty(&self) -> bool {
        !self.in_b.iter().any(|&b| b)
    }
}

/// `B`: edges on cycles of length at most `k` plus edges at vertices of
/// degree above 3. `Γ(B)`: edges reachable from an endpoint of a `B` edge by a
/// path of at most `k` edges, i.e. edges with an endpoint within `k - 1`
/// steps of `V(B)`.
pub fn bad_set(g: &Pseudograph, k: usize) -> BadSet {
    let mut in_b = short_cycle_edges(g, k);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if g.degree(u) > 3 || g.degree(v) > 3 {
            in_b[e] = true;
        }
    }
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if in_b[e] {
            for x in [u, v] {
                if dist[x] == usize::MAX {
                    dist[x] = 0;
                    queue.push_back(x);
                }
            }
        }
    }
    while let Some(x) = queue.pop_front() {
        if dist[x] + 1 >= k {
            continue;
        }
        for &(_, y) in g.incident(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    let in_gamma = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| in_b[e] || dist[u].min(dist[v]) < k)
        .collect();
    BadSet { k, in_b, in_gamma }
}
