use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use super::graph::{Pseudograph, WeightedPseudograph};
use crate::error::{domain, Result};

/// Runs the edge-subdivision process from `g` until the total weight is `n`.
///
/// Starting from weight 1 on every edge, each step picks an edge with
/// probability proportional to its current weight and adds 1 to it. This is
/// the same as repeatedly subdividing a uniformly chosen edge of the current
/// graph, and leaves a uniformly random composition of `n` into `m` parts.
pub fn subdivide_uniformly<R: Rng + ?Sized>(g: &Pseudograph, n: u64, rng: &mut R) -> Result<WeightedPseudograph> {
    let m = g.edge_count() as u64;
    if n < m {
        return Err(domain(format!("total weight {n} is below the edge count {m}")));
    }
    if m == 0 {
        return Ok(WeightedPseudograph::unit(g.clone()));
    }
    // owner[u] is the edge holding unit u, so a uniform unit is a
    // weight-proportional edge
    let mut owner: Vec<u32> = (0..m as u32).collect();
    owner.reserve((n - m) as usize);
    let mut weights = alloc::vec![1u64; m as usize];
    for _ in m..n {
        let e = owner[rng.random_range(0..owner.len())];
        weights[e as usize] += 1;
        owner.push(e);
    }
    WeightedPseudograph::new(g.clone(), weights)
}
