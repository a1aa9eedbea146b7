//! The kernel configuration model.
//!
//! Each vertex of degree `d_i ≥ 3` gets `d_i` points; a uniform perfect
//! matching of all points gives the kernel, and the degree-2 vertices are
//! placed on its edges in uniformly random positions. Collapsing the points
//! and subdividing yields a prekernel with degree sequence `d`. Conditioned
//! on being simple, it is uniform among simple graphs with that sequence:
//! every simple labelled graph arises from exactly `∏_{d_i ≥ 3} d_i!`
//! configurations.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{domain, Error, Result};
use crate::pseudograph::{short_cycle_edges, Pseudograph, WeightedPseudograph};

/// A validated degree sequence: every term at least 2, at least one term at
/// least 3, and `r = Σ(d_i - 2)` even.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    d: Vec<u32>,
}

pub fn validate_degree_sequence(d: &[u32]) -> Result<DegreeSequence> {
    if d.is_empty() {
        return Err(domain("degree sequence is empty"));
    }
    if let Some(i) = d.iter().position(|&x| x < 2) {
        return Err(domain(format!("d[{i}] = {} is below 2", d[i])));
    }
    if d.iter().all(|&x| x == 2) {
        return Err(Error::Degenerate("all degrees are 2, so the kernel is empty".into()));
    }
    let r: u64 = d.iter().map(|&x| u64::from(x) - 2).sum();
    if r % 2 == 1 {
        return Err(Error::Parity(r));
    }
    let seq = DegreeSequence { d: d.to_vec() };
    assert_eq!(seq.point_count() % 2, 0, "even r forces an even point count");
    Ok(seq)
}

impl DegreeSequence {
    pub fn degrees(&self) -> &[u32] {
        &self.d
    }

    /// `v`, the number of vertices.
    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// `r = Σ(d_i - 2)`.
    pub fn excess(&self) -> u64 {
        self.d.iter().map(|&x| u64::from(x) - 2).sum()
    }

    /// `D_j`, the number of vertices of degree `j`.
    pub fn count(&self, j: u32) -> usize {
        self.d.iter().filter(|&&x| x == j).count()
    }

    /// `Σ_{d_i ≥ 3} C(d_i, 2)`.
    pub fn sum_pairs(&self) -> u64 {
        self.d
            .iter()
            .filter(|&&x| x >= 3)
            .map(|&x| u64::from(x) * u64::from(x - 1) / 2)
            .sum()
    }

    /// Points in the pairing: `Σ_{d_i ≥ 3} d_i`.
    pub fn point_count(&self) -> usize {
        self.d.iter().filter(|&&x| x >= 3).map(|&x| x as usize).sum()
    }

    /// Edges of the kernel: half the point count.
    pub fn kernel_edge_count(&self) -> usize {
        self.point_count() / 2
    }

    /// Edges of the prekernel: `Σ d_i / 2`.
    pub fn prekernel_edge_count(&self) -> u64 {
        self.d.iter().map(|&x| u64::from(x)).sum::<u64>() / 2
    }
}

/// A pairing of the points plus an ordered placement of the degree-2
/// vertices on the pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelConfiguration {
    /// `owner[p]` is the vertex (index into `d`) holding point `p`.
    owner: Vec<usize>,
    /// Pairs `(p, q)` with `p < q`, sorted.
    pairing: Vec<(usize, usize)>,
    /// Degree-2 vertices on each pair, listed from point `p` towards `q`.
    placement: Vec<Vec<usize>>,
    vertex_count: usize,
}

impl KernelConfiguration {
    /// A configuration with the given pairing and no degree-2 vertices
    /// placed. `pairing` must be a perfect matching of the points of `d`.
    pub fn from_pairing(d: &DegreeSequence, pairing: Vec<(usize, usize)>) -> Result<Self> {
        let owner = point_owners(d);
        let mut seen = vec![false; owner.len()];
        for &(p, q) in &pairing {
            for x in [p, q] {
                if x >= owner.len() || core::mem::replace(&mut seen[x], true) {
                    return Err(domain(format!("point {x} is out of range or paired twice")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(domain("pairing does not cover every point"));
        }
        let mut pairing: Vec<(usize, usize)> = pairing.into_iter().map(|(p, q)| (p.min(q), p.max(q))).collect();
        pairing.sort_unstable();
        let placement = vec![Vec::new(); pairing.len()];
        Ok(Self {
            owner,
            pairing,
            placement,
            vertex_count: d.len(),
        })
    }

    pub fn pairing(&self) -> &[(usize, usize)] {
        &self.pairing
    }

    pub fn placement(&self) -> &[Vec<usize>] {
        &self.placement
    }

    pub fn point_owner(&self, p: usize) -> usize {
        self.owner[p]
    }

    /// Number of positions available for the next label: one more than the
    /// labels already on each pair, summed.
    pub fn slot_count(&self) -> usize {
        self.pairing.len() + self.placement.iter().map(Vec::len).sum::<usize>()
    }

    /// Places degree-2 vertex `label` on pair `edge` before the label
    /// currently at `position` (or last when `position` equals the count).
    pub fn insert_label(&mut self, label: usize, edge: usize, position: usize) {
        self.placement[edge].insert(position, label);
    }

    /// `1 +` the number of labels on each pair.
    pub fn weights(&self) -> Vec<u64> {
        self.placement.iter().map(|p| p.len() as u64 + 1).collect()
    }
}

fn point_owners(d: &DegreeSequence) -> Vec<usize> {
    d.degrees()
        .iter()
        .enumerate()
        .filter(|(_, &x)| x >= 3)
        .flat_map(|(i, &x)| core::iter::repeat_n(i, x as usize))
        .collect()
}

/// A uniform pairing with the degree-2 vertices (in index order) inserted
/// one at a time into a uniform slot. Insertion gives every ordered
/// placement probability `1 / (m (m+1) ⋯ (m + D_2 - 1))`.
pub fn sample_configuration<R: Rng + ?Sized>(d: &DegreeSequence, rng: &mut R) -> KernelConfiguration {
    let mut points: Vec<usize> = (0..d.point_count()).collect();
    points.shuffle(rng);
    let pairing = points.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    let mut config = KernelConfiguration::from_pairing(d, pairing).expect("shuffled points form a matching");
    // slot_owner lists one entry per open slot: each pair once plus once per
    // label already on it
    let mut slot_owner: Vec<usize> = (0..config.pairing.len()).collect();
    for (label, _) in d.degrees().iter().enumerate().filter(|(_, &x)| x == 2) {
        let edge = slot_owner[rng.random_range(0..slot_owner.len())];
        let position = rng.random_range(0..=config.placement[edge].len());
        config.insert_label(label, edge, position);
        slot_owner.push(edge);
    }
    config
}

/// The prekernel `G(P, f)` and the weighted kernel `K(P)` of a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    /// Vertex `i` is vertex `i` of the degree sequence.
    pub prekernel: Pseudograph,
    /// One vertex per `d_i ≥ 3` in index order, one edge per pair.
    pub kernel: WeightedPseudograph,
    /// Degree-sequence index of each kernel vertex.
    pub kernel_vertices: Vec<usize>,
}

pub fn realize(config: &KernelConfiguration) -> Realization {
    let mut kernel_index = vec![usize::MAX; config.vertex_count];
    let mut kernel_vertices = Vec::new();
    for &v in &config.owner {
        if kernel_index[v] == usize::MAX {
            kernel_index[v] = kernel_vertices.len();
            kernel_vertices.push(v);
        }
    }
    let mut kernel_edges = Vec::with_capacity(config.pairing.len());
    let mut pre_edges = Vec::new();
    for (j, &(p, q)) in config.pairing.iter().enumerate() {
        let (a, b) = (config.owner[p], config.owner[q]);
        kernel_edges.push((kernel_index[a], kernel_index[b]));
        let mut prev = a;
        for &label in &config.placement[j] {
            pre_edges.push((prev, label));
            prev = label;
        }
        pre_edges.push((prev, b));
    }
    let kernel = WeightedPseudograph::new(
        Pseudograph::new(kernel_vertices.len(), kernel_edges).expect("kernel endpoints are in range"),
        config.weights(),
    )
    .expect("weights are positive");
    Realization {
        prekernel: Pseudograph::new(config.vertex_count, pre_edges).expect("prekernel endpoints are in range"),
        kernel,
        kernel_vertices,
    }
}

/// Default retry budget of [`sample_uniform_prekernel`].
pub const DEFAULT_MAX_ATTEMPTS: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrekernelSample {
    pub realization: Realization,
    /// Configurations drawn, including the accepted one.
    pub attempts: u64,
}

/// A uniform simple prekernel with degree sequence `d`, by rejection.
pub fn sample_uniform_prekernel<R: Rng + ?Sized>(
    d: &DegreeSequence,
    rng: &mut R,
    max_attempts: u64,
) -> Result<PrekernelSample> {
    for attempt in 1..=max_attempts {
        let realization = realize(&sample_configuration(d, rng));
        if realization.prekernel.is_simple() {
            return Ok(PrekernelSample {
                realization,
                attempts: attempt,
            });
        }
    }
    Err(Error::RetryExhausted { attempts: max_attempts })
}

/// A uniform simple 3-regular graph on `n` vertices (`n` even, at least 4).
pub fn random_cubic_graph<R: Rng + ?Sized>(n: usize, rng: &mut R, max_attempts: u64) -> Result<Pseudograph> {
    if n < 4 || n % 2 == 1 {
        return Err(domain(format!("no simple cubic graph on {n} vertices")));
    }
    let d = validate_degree_sequence(&vec![3; n])?;
    Ok(sample_uniform_prekernel(&d, rng, max_attempts)?.realization.prekernel)
}

/// Number of edges of `g` lying on a cycle of length at most `k`.
pub fn short_cycle_census(g: &Pseudograph, k: usize) -> usize {
    short_cycle_edges(g, k).iter().filter(|&&b| b).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::count_compositions;
    use crate::pseudograph::{generators, kernel_with_weights};
    use crate::rng::stream;
    use num_bigint::BigUint;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use statrs::distribution::{ChiSquared, ContinuousCDF};
    use std::collections::BTreeMap;

    fn chi_square_p(observed: &[u64], expected: &[f64]) -> f64 {
        let chi2: f64 = observed
            .iter()
            .zip(expected)
            .map(|(&o, &e)| (o as f64 - e).powi(2) / e)
            .sum();
        1.0 - ChiSquared::new((observed.len() - 1) as f64).unwrap().cdf(chi2)
    }

    /// Every perfect matching of `0..n`, as sorted pair lists.
    fn all_matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let first = points[0];
        let mut out = Vec::new();
        for i in 1..points.len() {
            let rest: Vec<usize> = points[1..].iter().copied().filter(|&p| p != points[i]).collect();
            for mut m in all_matchings(&rest) {
                m.push((first, points[i]));
                m.sort_unstable();
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn validation_examples() {
        let d = validate_degree_sequence(&[3, 3, 3, 3]).unwrap();
        assert_eq!((d.len(), d.excess(), d.count(3)), (4, 4, 4));
        assert_eq!(validate_degree_sequence(&[3, 3, 3]), Err(Error::Parity(3)));
        let d = validate_degree_sequence(&[2, 2, 5, 3, 2]).unwrap();
        assert_eq!(
            (d.len(), d.excess(), d.count(2), d.count(3), d.count(5)),
            (5, 4, 3, 1, 1)
        );
        assert_eq!(d.sum_pairs(), 13);
        assert!(matches!(validate_degree_sequence(&[3, 1, 2]), Err(Error::Domain(_))));
        assert!(matches!(validate_degree_sequence(&[2, 2]), Err(Error::Degenerate(_))));
    }

    #[test]
    fn two_cubic_vertices_give_theta_or_dumbbell() {
        let d = validate_degree_sequence(&[3, 3]).unwrap();
        let mut theta = 0;
        let mut dumbbell = 0;
        for m in all_matchings(&[0, 1, 2, 3, 4, 5]) {
            let r = realize(&KernelConfiguration::from_pairing(&d, m).unwrap());
            match r.kernel.graph().loop_count() {
                0 => theta += 1,
                2 => dumbbell += 1,
                other => panic!("{other} loops"),
            }
        }
        assert_eq!((theta, dumbbell), (6, 9));
    }

    #[test]
    fn single_label_is_uniform_on_a_theta() {
        let d = validate_degree_sequence(&[3, 3, 2]).unwrap();
        let theta_pairing = vec![(0, 3), (1, 4), (2, 5)];
        let mut hits = [0u32; 3];
        for edge in 0..3 {
            let mut c = KernelConfiguration::from_pairing(&d, theta_pairing.clone()).unwrap();
            assert_eq!(c.slot_count(), 3);
            c.insert_label(2, edge, 0);
            let w = c.weights();
            hits[w.iter().position(|&x| x == 2).unwrap()] += 1;
        }
        assert_eq!(hits, [1, 1, 1]);
    }

    #[test]
    fn lone_quartic_vertex() {
        let d = validate_degree_sequence(&[4]).unwrap();
        let ms = all_matchings(&[0, 1, 2, 3]);
        assert_eq!(ms.len(), 3);
        for m in ms {
            let r = realize(&KernelConfiguration::from_pairing(&d, m).unwrap());
            assert_eq!(r.prekernel.loop_count(), 2);
        }
    }

    #[test]
    fn realizations_preserve_degrees_and_round_trip() {
        let mut rng = stream(21, 0);
        for d in [
            vec![3, 3, 3, 3],
            vec![2, 2, 5, 3, 2],
            vec![3, 3, 4, 2, 2, 2, 2, 2, 4, 4],
        ] {
            let d = validate_degree_sequence(&d).unwrap();
            for _ in 0..50 {
                let r = realize(&sample_configuration(&d, &mut rng));
                let degrees: Vec<u32> = r.prekernel.degrees().iter().map(|&x| x as u32).collect();
                assert_eq!(degrees, d.degrees());
                assert_eq!(r.kernel.total_weight(), d.prekernel_edge_count());
                if d.count(2) == 0 {
                    assert_eq!(r.kernel.graph().edges(), r.prekernel.edges());
                }
                // suppressing the degree-2 vertices gives back the kernel
                let k = kernel_with_weights(&r.prekernel).unwrap();
                let key = |g: &WeightedPseudograph| {
                    let mut e: Vec<(usize, usize, u64)> = g
                        .graph()
                        .edges()
                        .iter()
                        .zip(g.weights())
                        .map(|(&(u, v), &w)| (u.min(v), u.max(v), w))
                        .collect();
                    e.sort_unstable();
                    e
                };
                assert_eq!(key(&k), key(&r.kernel));
            }
        }
        let r = realize(&sample_configuration(
            &validate_degree_sequence(&[3, 3, 3, 3]).unwrap(),
            &mut rng,
        ));
        assert_eq!((r.prekernel.vertex_count(), r.prekernel.edge_count()), (4, 6));
    }

    /// Exact law of the weights under every insertion sequence, for a fixed
    /// pairing, against the uniform composition law.
    fn insertion_law(d: &DegreeSequence, pairing: Vec<(usize, usize)>) -> BTreeMap<Vec<u64>, BigRational> {
        fn go(c: &KernelConfiguration, labels: &[usize], p: BigRational, out: &mut BTreeMap<Vec<u64>, BigRational>) {
            let Some((&label, rest)) = labels.split_first() else {
                *out.entry(c.weights()).or_insert_with(BigRational::zero) += p;
                return;
            };
            let slots = BigRational::from_integer(c.slot_count().into());
            for edge in 0..c.pairing().len() {
                for pos in 0..=c.placement()[edge].len() {
                    let mut next = c.clone();
                    next.insert_label(label, edge, pos);
                    go(&next, rest, &p / &slots, out);
                }
            }
        }
        let c = KernelConfiguration::from_pairing(d, pairing).unwrap();
        let labels: Vec<usize> = (0..d.len()).filter(|&i| d.degrees()[i] == 2).collect();
        let mut out = BTreeMap::new();
        go(&c, &labels, BigRational::one(), &mut out);
        out
    }

    #[test]
    fn weights_are_uniform_compositions_exactly() {
        for (d, pairing) in [
            (vec![3, 3, 2, 2], vec![(0, 3), (1, 4), (2, 5)]),
            (vec![3, 3, 2, 2], vec![(0, 1), (2, 3), (4, 5)]),
            (vec![4, 2, 2, 2, 2], vec![(0, 1), (2, 3)]),
            (vec![5, 3, 2], vec![(0, 5), (1, 2), (3, 6), (4, 7)]),
            (vec![3, 3, 2, 2, 2], vec![(0, 3), (1, 4), (2, 5)]),
        ] {
            let d = validate_degree_sequence(&d).unwrap();
            assert!(d.count(2) <= 4);
            let law = insertion_law(&d, pairing);
            let m = d.kernel_edge_count() as u64;
            let n = d.prekernel_edge_count();
            let count: BigUint = count_compositions(n, m).unwrap();
            assert_eq!(BigUint::from(law.len()), count);
            let each = BigRational::new(1.into(), count.into());
            assert!(law.values().all(|p| *p == each));
        }
    }

    #[test]
    fn weights_are_uniform_compositions_statistically() {
        // 6 kernel edges, 6 degree-2 vertices: 462 compositions of 12
        let d = validate_degree_sequence(&[3, 3, 3, 3, 2, 2, 2, 2, 2, 2]).unwrap();
        let draws = 462 * 200;
        let mut rng = stream(22, 0);
        let mut counts: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
        let fixed = vec![(0, 3), (1, 4), (2, 6), (5, 9), (7, 10), (8, 11)];
        for _ in 0..draws {
            let mut c = KernelConfiguration::from_pairing(&d, fixed.clone()).unwrap();
            let mut slot_owner: Vec<usize> = (0..6).collect();
            for label in 4..10 {
                let e = slot_owner[rng.random_range(0..slot_owner.len())];
                let pos = rng.random_range(0..=c.placement()[e].len());
                c.insert_label(label, e, pos);
                slot_owner.push(e);
            }
            *counts.entry(c.weights()).or_default() += 1;
        }
        assert_eq!(counts.len(), 462);
        let observed: Vec<u64> = counts.values().copied().collect();
        let p = chi_square_p(&observed, &vec![draws as f64 / 462.0; 462]);
        assert!(p > 0.001, "p = {p}");
    }

    #[test]
    fn pairings_are_uniform() {
        // 8 points: 105 matchings
        let d = validate_degree_sequence(&[4, 4]).unwrap();
        let draws = 1_000_000u64;
        let mut rng = stream(23, 0);
        let mut counts: BTreeMap<Vec<(usize, usize)>, u64> = BTreeMap::new();
        for _ in 0..draws {
            let c = sample_configuration(&d, &mut rng);
            *counts.entry(c.pairing().to_vec()).or_default() += 1;
        }
        assert_eq!(counts.len(), 105);
        let observed: Vec<u64> = counts.values().copied().collect();
        let p = chi_square_p(&observed, &vec![draws as f64 / 105.0; 105]);
        assert!(p > 0.001, "p = {p}");
    }

    #[test]
    fn two_cubic_vertices_are_never_simple() {
        let d = validate_degree_sequence(&[3, 3]).unwrap();
        assert_eq!(
            sample_uniform_prekernel(&d, &mut stream(24, 0), 200),
            Err(Error::RetryExhausted { attempts: 200 })
        );
    }

    /// Labelled simple graphs with degree sequence `d`, by subset search.
    fn simple_graphs(d: &[u32]) -> Vec<Vec<(usize, usize)>> {
        let n = d.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut out = Vec::new();
        for mask in 0u64..(1 << pairs.len()) {
            let mut deg = vec![0u32; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            if deg == d {
                out.push(
                    (0..pairs.len())
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| pairs[i])
                        .collect(),
                );
            }
        }
        out
    }

    #[test]
    fn uniform_over_simple_graphs() {
        let d = [3, 3, 3, 3, 2, 2];
        let graphs = simple_graphs(&d);
        assert!(graphs.len() > 1);
        let seq = validate_degree_sequence(&d).unwrap();
        let mut rng = stream(25, 0);
        let draws = 200 * graphs.len() as u64;
        let mut counts: BTreeMap<Vec<(usize, usize)>, u64> = BTreeMap::new();
        for _ in 0..draws {
            let s = sample_uniform_prekernel(&seq, &mut rng, DEFAULT_MAX_ATTEMPTS).unwrap();
            *counts.entry(s.realization.prekernel.canonical_edge_list()).or_default() += 1;
        }
        assert!(counts.keys().all(|g| graphs.contains(g)));
        let observed: Vec<u64> = graphs.iter().map(|g| counts.get(g).copied().unwrap_or(0)).collect();
        let p = chi_square_p(&observed, &vec![draws as f64 / graphs.len() as f64; graphs.len()]);
        assert!(p > 0.001, "p = {p}, {} graphs", graphs.len());
    }

    /// Simple matchings of `3n` points in `n` triples, counted by exhaustive
    /// search over all `(3n - 1)!!` matchings.
    fn simple_matching_count(n: usize) -> (u64, u64) {
        fn go(free: &[usize], adj: &mut [Vec<bool>], simple: &mut u64, total: &mut u64, ok: bool) {
            let Some(&p) = free.first() else {
                *total += 1;
                *simple += u64::from(ok);
                return;
            };
            for i in 1..free.len() {
                let q = free[i];
                let (a, b) = (p / 3, q / 3);
                let clash = a == b || adj[a][b];
                let rest: Vec<usize> = free.iter().copied().filter(|&x| x != p && x != q).collect();
                if !clash {
                    adj[a][b] = true;
                    adj[b][a] = true;
                }
                go(&rest, adj, simple, total, ok && !clash);
                if !clash {
                    adj[a][b] = false;
                    adj[b][a] = false;
                }
            }
        }
        let free: Vec<usize> = (0..3 * n).collect();
        let mut adj = vec![vec![false; n]; n];
        let (mut simple, mut total) = (0, 0);
        go(&free, &mut adj, &mut simple, &mut total, true);
        (simple, total)
    }

    fn acceptance_rate(n: usize, trials: u64, seed: u64) -> f64 {
        let d = validate_degree_sequence(&vec![3; n]).unwrap();
        let mut rng = stream(seed, 0);
        let accepted = (0..trials)
            .filter(|_| realize(&sample_configuration(&d, &mut rng)).prekernel.is_simple())
            .count();
        accepted as f64 / trials as f64
    }

    #[test]
    fn exact_simple_fraction_for_six_cubic_vertices() {
        let (simple, total) = simple_matching_count(6);
        assert_eq!(total, 34_459_425);
        // 70 labelled cubic graphs on 6 vertices, each from 6^6 matchings
        assert_eq!(simple, 70 * 46_656);
        assert_eq!(simple_graphs(&[3; 6]).len(), 70);
        let exact = simple as f64 / total as f64;
        let trials = 200_000;
        let rate = acceptance_rate(6, trials, 26);
        let sigma = (exact * (1.0 - exact) / trials as f64).sqrt();
        assert!((rate - exact).abs() < 3.0 * sigma, "{rate} vs {exact}");
    }

    #[test]
    fn acceptance_rate_at_twenty_matches_the_six_vertex_anchor() {
        let (simple, total) = simple_matching_count(6);
        let anchor = simple as f64 / total as f64;
        let trials = 200_000;
        let rate = acceptance_rate(20, trials, 28);
        let sigma = (anchor * (1.0 - anchor) / trials as f64).sqrt();
        assert!(
            (rate - anchor).abs() < 3.0 * sigma,
            "(3)x20 acceptance {rate} vs (3)x6 exact {anchor}, {:.1} sigma",
            (rate - anchor) / sigma
        );
    }

    #[test]
    fn four_cubic_vertices_always_give_k4() {
        // K4 is the only simple graph with this sequence
        let d = [3, 3, 3, 3];
        assert_eq!(
            simple_graphs(&d),
            vec![vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]]
        );
        let seq = validate_degree_sequence(&d).unwrap();
        let mut rng = stream(29, 0);
        for _ in 0..10_000 {
            let s = sample_uniform_prekernel(&seq, &mut rng, DEFAULT_MAX_ATTEMPTS).unwrap();
            assert_eq!(s.realization.prekernel.canonical_edge_list(), simple_graphs(&d)[0]);
        }
    }

    #[test]
    fn three_labels_on_one_theta_edge() {
        let d = validate_degree_sequence(&[3, 3, 2, 2, 2]).unwrap();
        let mut c = KernelConfiguration::from_pairing(&d, vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        for label in [2, 3, 4] {
            c.insert_label(label, 0, c.placement()[0].len());
        }
        let r = realize(&c);
        assert_eq!(r.kernel.weights(), &[4, 1, 1]);
        assert_eq!(r.kernel.total_weight(), 6);
        assert_eq!(r.prekernel.edge_count(), 6);
        assert!(r.prekernel.is_simple() || r.prekernel.parallel_excess() == 1);
    }

    #[test]
    fn short_cycle_census_has_no_trend() {
        // 1000 configuration kernels for (3)x200 in 20 batches of 50
        let d = validate_degree_sequence(&[3; 200]).unwrap();
        let mut rng = stream(30, 0);
        let means: Vec<f64> = (0..20)
            .map(|_| {
                let total: usize = (0..50)
                    .map(|_| short_cycle_census(realize(&sample_configuration(&d, &mut rng)).kernel.graph(), 9))
                    .sum();
                total as f64 / 50.0
            })
            .collect();
        let (_, p) = crate::stats::mann_kendall(&means);
        assert!(p > 0.05, "p = {p}, means {means:?}");
        assert!(means.iter().all(|&m| m > 0.0 && m <= 300.0));
    }

    #[test]
    fn census_examples() {
        assert_eq!(short_cycle_census(&generators::petersen(), 3), 0);
        let theta = Pseudograph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(short_cycle_census(&theta, 2), 3);
        let g = random_cubic_graph(12, &mut stream(27, 0), DEFAULT_MAX_ATTEMPTS).unwrap();
        assert!(g.is_simple() && g.degrees().iter().all(|&x| x == 3));
    }
}
