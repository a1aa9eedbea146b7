//! Cycle enumeration and maximum-weight cycles.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::{Pseudograph, WeightedPseudograph};
use super::reduction::{core_mask, suppress_degree_two};
use crate::error::{Error, Result};

/// Simple cycles as sorted edge-index lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleList {
    pub cycles: Vec<Vec<usize>>,
    /// More than `max_count` cycles exist; only the first `max_count` are
    /// listed.
    pub truncated: bool,
}

/// Every simple cycle of `g`, loops and parallel pairs included, up to
/// `max_count` of them.
///
/// Cycles are listed by smallest vertex; each is found once by walking only
/// through larger vertices and keeping the direction whose first edge has the
/// smaller index.
pub fn enumerate_cycles(g: &Pseudograph, max_count: usize) -> CycleList {
    let mut out = CycleList {
        cycles: Vec::new(),
        truncated: false,
    };
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    'outer: for s in 0..n {
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if u == s && v == s {
                if out.cycles.len() == max_count {
                    out.truncated = true;
                    break 'outer;
                }
                out.cycles.push(vec![e]);
            }
        }
        on_path[s] = true;
        let stop = walk_cycles(g, s, s, &mut on_path, &mut path, max_count, &mut out);
        on_path[s] = false;
        if stop {
            break;
        }
    }
    out
}

fn walk_cycles(
    g: &Pseudograph,
    s: usize,
    cur: usize,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    max_count: usize,
    out: &mut CycleList,
) -> bool {
    for &(e, w) in g.incident(cur) {
        if w == cur || path.last() == Some(&e) {
            continue;
        }
        if w == s {
            if !path.is_empty() && path[0] < e {
                if out.cycles.len() == max_count {
                    out.truncated = true;
                    return true;
                }
                let mut c = path.clone();
                c.push(e);
                c.sort_unstable();
                out.cycles.push(c);
            }
        } else if w > s && !on_path[w] {
            on_path[w] = true;
            path.push(e);
            let stop = walk_cycles(g, s, w, on_path, path, max_count, out);
            path.pop();
            on_path[w] = false;
            if stop {
                return true;
            }
        }
    }
    false
}

/// Largest reduced graph accepted by [`SolveMode::Exact`].
pub const EXACT_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    /// Complete branch and bound; rejects graphs whose reduced form has more
    /// than [`EXACT_MAX_VERTICES`] vertices.
    Exact,
    /// The same search stopped after `max_nodes` search nodes.
    Heuristic { max_nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSolution {
    pub weight: u64,
    /// Sorted edge indices of the input graph.
    pub edges: Vec<usize>,
    /// The search finished, so no heavier cycle exists.
    pub optimal: bool,
    pub nodes: u64,
}

/// A heaviest cycle of `g`, or `None` for a forest.
///
/// The graph is reduced to its core and degree-2 chains are contracted into
/// weighted edges; cycle components are candidates of their own. The reduced
/// graph is searched depth-first from each start vertex through larger
/// vertices, heaviest edges first. A branch is cut when its weight plus an
/// upper bound on any closing path cannot beat the best cycle so far. The
/// bound counts, for each vertex still available, its two heaviest usable
/// edges (one at the two path ends) and halves the total.
pub fn max_weight_cycle(g: &WeightedPseudograph, mode: SolveMode) -> Result<Option<CycleSolution>> {
    let sub = g.graph().induced(&core_mask(g.graph()));
    let weights: Vec<u64> = sub.edge_map.iter().map(|&e| g.weight(e)).collect();
    let core = WeightedPseudograph::new(sub.graph, weights)?;
    let reduction = suppress_degree_two(&core)?;
    let kernel = &reduction.kernel;
    let kn = kernel.graph().vertex_count();
    let budget = match mode {
        SolveMode::Exact => {
            if kn > EXACT_MAX_VERTICES {
                return Err(Error::Size(format!(
                    "exact search needs at most {EXACT_MAX_VERTICES} vertices after reduction, got {kn}"
                )));
            }
            u64::MAX
        }
        SolveMode::Heuristic { max_nodes } => max_nodes,
    };

    let mut best: Option<(u64, Vec<usize>)> = None;
    for (chain, w) in &reduction.cycle_components {
        if best.as_ref().is_none_or(|b| *w > b.0) {
            best = Some((*w, chain.edges.clone()));
        }
    }
    let mut search = Solver::new(kernel, budget);
    let found = search.run();
    let optimal = !search.exhausted();
    if let Some((w, kernel_edges)) = found {
        if best.as_ref().is_none_or(|b| w > b.0) {
            best = Some((w, reduction.expand(&kernel_edges)));
        }
    }
    Ok(best.map(|(weight, core_edges)| {
        let mut edges: Vec<usize> = core_edges.iter().map(|&e| sub.edge_map[e]).collect();
        edges.sort_unstable();
        CycleSolution {
            weight,
            edges,
            optimal,
            nodes: search.nodes,
        }
    }))
}

struct Solver<'a> {
    g: &'a WeightedPseudograph,
    // heaviest first, loops removed
    adjacency: Vec<Vec<(usize, usize)>>,
    budget: u64,
    nodes: u64,
    on_path: Vec<bool>,
    path: Vec<usize>,
    best: u64,
    best_edges: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(g: &'a WeightedPseudograph, budget: u64) -> Self {
        let graph = g.graph();
        let adjacency = (0..graph.vertex_count())
            .map(|v| {
                let mut a: Vec<(usize, usize)> = graph.incident(v).iter().copied().filter(|&(_, w)| w != v).collect();
                a.sort_by(|x, y| g.weight(y.0).cmp(&g.weight(x.0)).then(x.0.cmp(&y.0)));
                a
            })
            .collect();
        Self {
            g,
            adjacency,
            budget,
            nodes: 0,
            on_path: vec![false; graph.vertex_count()],
            path: Vec::new(),
            best: 0,
            best_edges: Vec::new(),
        }
    }

    fn exhausted(&self) -> bool {
        self.nodes >= self.budget
    }

    fn run(&mut self) -> Option<(u64, Vec<usize>)> {
        let graph = self.g.graph();
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            if u == v && self.g.weight(e) > self.best {
                self.best = self.g.weight(e);
                self.best_edges = vec![e];
            }
        }
        for s in 0..graph.vertex_count() {
            if self.exhausted() {
                break;
            }
            self.on_path[s] = true;
            self.dfs(s, s, 0);
            self.on_path[s] = false;
        }
        (self.best > 0).then(|| (self.best, core::mem::take(&mut self.best_edges)))
    }

    /// Upper bound on a path from `cur` back to `s` through unused vertices
    /// above `s`.
    fn closing_bound(&self, s: usize, cur: usize) -> u64 {
        let usable = |v: usize| v == s || v == cur || (v > s && !self.on_path[v]);
        let mut twice = 0u64;
        for v in 0..self.adjacency.len() {
            if !usable(v) {
                continue;
            }
            let take = if v == s || v == cur { 1 } else { 2 };
            let usable_edges = self.adjacency[v]
                .iter()
                // the path edge into cur cannot be reused
                .filter(|&&(e, w)| usable(w) && !(v == cur && self.path.last() == Some(&e)))
                .take(take);
            twice += usable_edges.map(|&(e, _)| self.g.weight(e)).sum::<u64>();
        }
        twice / 2
    }

    fn dfs(&mut self, s: usize, cur: usize, weight: u64) {
        self.nodes += 1;
        if self.exhausted() {
            return;
        }
        if cur != s && weight + self.closing_bound(s, cur) <= self.best {
            return;
        }
        let neighbours = self.adjacency[cur].clone();
        for (e, w) in neighbours {
            if self.path.last() == Some(&e) {
                continue;
            }
            let we = self.g.weight(e);
            if w == s {
                if !self.path.is_empty() && weight + we > self.best {
                    self.best = weight + we;
                    self.best_edges = self.path.clone();
                    self.best_edges.push(e);
                }
            } else if w > s && !self.on_path[w] {
                self.on_path[w] = true;
                self.path.push(e);
                self.dfs(s, w, weight + we);
                self.path.pop();
                self.on_path[w] = false;
                if self.exhausted() {
                    return;
                }
            }
        }
    }
}
