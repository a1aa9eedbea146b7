//! The uniform random graph `G(n, M)` in the supercritical phase, its
//! prekernel statistics, and the truncated-multinomial degree model.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_distr::{Binomial, Distribution};

use crate::biased_tree::bisect;
use crate::error::{domain, Error, Result};
use crate::pseudograph::{core_mask, prekernel, Pseudograph};

/// `n` vertices and `M` edges; `s = M - ⌊n/2⌋` when built from `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GnmParams {
    pub n: u64,
    pub m: u64,
    pub s: Option<u64>,
}

fn pair_count(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

impl GnmParams {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if m > pair_count(n) {
            return Err(domain(format!("M = {m} exceeds C({n}, 2) = {}", pair_count(n))));
        }
        Ok(Self { n, m, s: None })
    }

    /// `M = ⌊n/2⌋ + s`.
    pub fn supercritical(n: u64, s: u64) -> Result<Self> {
        let mut p = Self::new(n, n / 2 + s)?;
        p.s = Some(s);
        Ok(p)
    }

    /// A message when `s` lies outside `n^(2/3) < s < n`.
    pub fn warning(&self) -> Option<String> {
        let s = self.s? as f64;
        let n = self.n as f64;
        let lower = libm::pow(n, 2.0 / 3.0);
        (s <= lower || s >= n).then(|| format!("s = {s} is outside the supercritical range ({lower:.1}, {n})"))
    }

    /// `8 s² / n`.
    pub fn predicted_v(&self) -> Option<f64> {
        let s = self.s? as f64;
        Some(8.0 * s * s / self.n as f64)
    }

    /// `32 s³ / (3 n²)`.
    pub fn predicted_r(&self) -> Option<f64> {
        let s = self.s? as f64;
        let n = self.n as f64;
        Some(32.0 * s * s * s / (3.0 * n * n))
    }
}

/// The pair `(u, v)`, `u < v`, at position `idx` of the row-major list of
/// pairs of `0..n`.
fn decode_pair(n: u64, idx: u64) -> (usize, usize) {
    // row u starts at u (2n - u - 1) / 2
    let start = |u: u64| u * (2 * n - u - 1) / 2;
    let nf = n as f64;
    let guess = nf - 0.5 - libm::sqrt((nf - 0.5) * (nf - 0.5) - 2.0 * idx as f64);
    let mut u = (guess.max(0.0) as u64).min(n - 2);
    while u > 0 && start(u) > idx {
        u -= 1;
    }
    while u + 1 < n - 1 && start(u + 1) <= idx {
        u += 1;
    }
    let v = u + 1 + (idx - start(u));
    (u as usize, v as usize)
}

/// A uniform simple graph with `m` edges on `n` vertices, by Floyd's
/// distinct sampling over the `C(n, 2)` pairs. Edges are listed in pair
/// order.
pub fn sample_gnm<R: Rng + ?Sized>(n: u64, m: u64, rng: &mut R) -> Result<Pseudograph> {
    let total = pair_count(n);
    if m > total {
        return Err(domain(format!("M = {m} exceeds C({n}, 2) = {total}")));
    }
    let mut chosen = BTreeSet::new();
    for j in total - m..total {
        let t = rng.random_range(0..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    let edges = chosen.into_iter().map(|i| decode_pair(n, i)).collect();
    Pseudograph::new(n as usize, edges)
}

/// The largest component; among those of maximum size, the one containing
/// the smallest vertex. Sorted.
pub fn largest_component(g: &Pseudograph) -> Vec<usize> {
    // components come ordered by smallest vertex, so the first maximum wins
    let mut best: Vec<usize> = Vec::new();
    for c in g.components() {
        if c.len() > best.len() {
            best = c;
        }
    }
    best
}

/// Vertices of the core of `G` minus its largest component.
pub fn cycles_outside_giant(g: &Pseudograph) -> usize {
    let mut keep = vec![true; g.vertex_count()];
    for v in largest_component(g) {
        keep[v] = false;
    }
    let rest = g.induced(&keep);
    core_mask(&rest.graph).iter().filter(|&&x| x).count()
}

/// Degree statistics of one prekernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrekernelStats {
    pub n: u64,
    pub s: u64,
    pub m: u64,
    pub v: u64,
    pub r: u64,
    pub d3: u64,
    /// `Σ_{d_i ≥ 3} C(d_i, 2)`.
    pub sum_pairs: u64,
    pub predicted_v: f64,
    pub predicted_r: f64,
    /// The prekernel is empty.
    pub degenerate: bool,
}

impl PrekernelStats {
    pub fn of(params: &GnmParams, prekernel: &Pseudograph) -> Self {
        let s = params.s.unwrap_or(0);
        let degrees = prekernel.degrees();
        let big = degrees.iter().filter(|&&d| d >= 3);
        Self {
            n: params.n,
            s,
            m: params.m,
            v: degrees.len() as u64,
            r: degrees.iter().map(|&d| d as u64 - 2).sum(),
            d3: degrees.iter().filter(|&&d| d == 3).count() as u64,
            sum_pairs: big.map(|&d| (d * (d - 1) / 2) as u64).sum(),
            predicted_v: params.predicted_v().unwrap_or(f64::NAN),
            predicted_r: params.predicted_r().unwrap_or(f64::NAN),
            degenerate: degrees.is_empty(),
        }
    }

    /// `|v - 8s²/n| / (8s²/n)`.
    pub fn v_deviation(&self) -> f64 {
        (self.v as f64 - self.predicted_v).abs() / self.predicted_v
    }

    /// `|r - 32s³/(3n²)| / (32s³/(3n²))`.
    pub fn r_deviation(&self) -> f64 {
        (self.r as f64 - self.predicted_r).abs() / self.predicted_r
    }

    /// `Σ 2 C(d_i, 2) < 4r`.
    pub fn doubled_pairs_below_4r(&self) -> bool {
        2 * self.sum_pairs < 4 * self.r
    }

    /// `Σ C(d_i, 2) < 4r`.
    pub fn pairs_below_4r(&self) -> bool {
        self.sum_pairs < 4 * self.r
    }
}

/// Samples `G(n, ⌊n/2⌋ + s)` and returns the graph and its prekernel.
pub fn sample_prekernel<R: Rng + ?Sized>(params: &GnmParams, rng: &mut R) -> Result<(Pseudograph, Pseudograph)> {
    let g = sample_gnm(params.n, params.m, rng)?;
    let p = prekernel(&g);
    Ok((g, p))
}

/// One [`PrekernelStats`] per replica, replica `i` on stream `(seed, i)`.
pub fn prekernel_statistics(n: u64, s: u64, replicas: u64, seed: u64) -> Result<Vec<PrekernelStats>> {
    let params = GnmParams::supercritical(n, s)?;
    (0..replicas)
        .map(|i| {
            let (_, p) = sample_prekernel(&params, &mut crate::rng::stream(seed, i))?;
            Ok(PrekernelStats::of(&params, &p))
        })
        .collect()
}

/// `λ (e^λ - 1) / (e^λ - 1 - λ)`, increasing from 2 at `λ = 0`.
pub fn lambda_equation_lhs(lambda: f64) -> f64 {
    lambda * libm::expm1(lambda) / exp_tail(lambda, 2)
}

/// `Σ_{j ≥ from} λ^j / j!`, summed as a series for small `λ` to avoid
/// cancellation.
fn exp_tail(lambda: f64, from: u32) -> f64 {
    let mut term = 1.0;
    for j in 1..=from {
        term *= lambda / f64::from(j);
    }
    if lambda < 1.0 {
        let mut sum = 0.0;
        let mut j = f64::from(from);
        while term > 1e-18 * sum {
            sum += term;
            j += 1.0;
            term *= lambda / j;
        }
        sum
    } else {
        // head terms λ^j / j! for j < from
        let mut head = 0.0;
        let mut t = 1.0;
        for j in 1..from {
            t *= lambda / f64::from(j);
            head += t;
        }
        libm::expm1(lambda) - head
    }
}

/// Below this `c - 2` the two-term series `λ = 3ε - 3ε²/2` is used.
pub const LAMBDA_SERIES_THRESHOLD: f64 = 1e-6;

/// Bisection tolerance on `λ`.
pub const LAMBDA_TOLERANCE: f64 = 1e-12;

/// The positive root of `λ (e^λ - 1) / (e^λ - 1 - λ) = c`.
pub fn solve_lambda(c: f64) -> Result<f64> {
    if !(c.is_finite() && c > 2.0) {
        return Err(domain(format!("the λ-equation needs c > 2, got {c}")));
    }
    let eps = c - 2.0;
    if eps < LAMBDA_SERIES_THRESHOLD {
        // lhs = 2 + λ/3 + λ²/18 + O(λ³)
        return Ok(3.0 * eps - 1.5 * eps * eps);
    }
    // lhs(ε) < 2 + ε/3 and lhs(λ) > λ bracket the root
    bisect(|l| lambda_equation_lhs(l) - c, eps, c, LAMBDA_TOLERANCE)
}

/// The Poisson law conditioned on being at least 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedPoissonModel {
    lambda: f64,
    normalizer: f64,
}

impl TruncatedPoissonModel {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(domain(format!("λ must be positive, got {lambda}")));
        }
        Ok(Self {
            lambda,
            normalizer: exp_tail(lambda, 2),
        })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `e^λ - 1 - λ`.
    pub fn normalizer(&self) -> f64 {
        self.normalizer
    }

    /// `p_j = λ^j / (j! (e^λ - 1 - λ))`.
    pub fn pmf(&self, j: u64) -> Result<f64> {
        if j < 2 {
            return Err(domain(format!("support starts at 2, got {j}")));
        }
        let log = j as f64 * libm::log(self.lambda) - libm::lgamma(j as f64 + 1.0) - libm::log(self.normalizer);
        Ok(libm::exp(log))
    }

    /// `P(Y ≥ 3)`.
    pub fn tail_above_two(&self) -> f64 {
        exp_tail(self.lambda, 3) / self.normalizer
    }

    /// A draw of `Y` conditioned on `Y ≥ 3`, by inversion.
    pub fn sample_at_least_three<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let tail = self.tail_above_two();
        let mut u: f64 = rng.random::<f64>() * tail;
        let mut j = 3u64;
        let mut p = self.pmf(3).expect("3 is in the support");
        while u >= p && p > 0.0 {
            u -= p;
            j += 1;
            p *= self.lambda / j as f64;
        }
        j
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        if rng.random::<f64>() < self.tail_above_two() {
            self.sample_at_least_three(rng)
        } else {
            2
        }
    }
}

/// Default rejection budget of [`sample_truncated_multinomial`].
pub const DEFAULT_MULTINOMIAL_ATTEMPTS: u64 = 1_000_000;

/// A draw from `Multi(v, t)` conditioned on every entry being at least 2.
///
/// Independent truncated-Poisson entries conditioned on summing to `t` have
/// exactly this law for every `λ`; `λ = solve_lambda(t / v)` makes the
/// conditioning event likely. Each attempt draws the number of entries above
/// 2 from a binomial and only their values, so it costs `O(t - 2v)` rather
/// than `O(v)`; positions are placed uniformly once a draw is accepted.
pub fn sample_truncated_multinomial<R: Rng + ?Sized>(
    v: u64,
    t: u64,
    rng: &mut R,
    max_attempts: u64,
) -> Result<Vec<u32>> {
    if v == 0 {
        return Err(domain("v must be positive"));
    }
    if t < 2 * v {
        return Err(domain(format!("t = {t} is below 2v = {}", 2 * v)));
    }
    if t > u64::from(u32::MAX) {
        return Err(domain(format!("t = {t} does not fit a degree")));
    }
    if v == 1 {
        return Ok(vec![t as u32]);
    }
    let excess = t - 2 * v;
    if excess == 0 {
        return Ok(vec![2; v as usize]);
    }
    let model = TruncatedPoissonModel::new(solve_lambda(t as f64 / v as f64)?)?;
    let above = Binomial::new(v, model.tail_above_two()).map_err(|e| Error::Internal(format!("{e}")))?;
    let mut values = Vec::new();
    for _ in 0..max_attempts {
        let count = above.sample(rng);
        if count > excess {
            continue;
        }
        values.clear();
        let mut sum = 0;
        for _ in 0..count {
            sum += model.sample_at_least_three(rng) - 2;
            if sum > excess {
                break;
            }
            values.push(sum);
        }
        if sum != excess || values.len() as u64 != count {
            continue;
        }
        // undo the running sum
        for i in (1..values.len()).rev() {
            values[i] -= values[i - 1];
        }
        let mut d = vec![2u32; v as usize];
        // partial Fisher-Yates picks `count` positions in random order
        let mut positions: Vec<usize> = (0..v as usize).collect();
        for (i, &extra) in values.iter().enumerate() {
            let j = rng.random_range(i..positions.len());
            positions.swap(i, j);
            d[positions[i]] += extra as u32;
        }
        return Ok(d);
    }
    Err(Error::RetryExhausted { attempts: max_attempts })
}

/// Degree-sequence hypotheses behind the circumference bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeHypotheses {
    pub v: u64,
    pub r: u64,
    pub d3: u64,
    /// `D_3 / r`, absent when `r = 0`.
    pub d3_ratio: Option<f64>,
    pub sum_pairs: u64,
    /// `Σ C(d_i, 2) < 4r`.
    pub pairs_below_4r: bool,
    /// `Σ 2 C(d_i, 2) < 4r`.
    pub doubled_pairs_below_4r: bool,
    /// `r = 0`: every degree is 2.
    pub degenerate: bool,
}

pub fn degree_hypotheses_check(d: &[u32]) -> DegreeHypotheses {
    let r: u64 = d.iter().map(|&x| u64::from(x.saturating_sub(2))).sum();
    let d3 = d.iter().filter(|&&x| x == 3).count() as u64;
    let sum_pairs: u64 = d
        .iter()
        .filter(|&&x| x >= 3)
        .map(|&x| u64::from(x) * u64::from(x - 1) / 2)
        .sum();
    DegreeHypotheses {
        v: d.len() as u64,
        r,
        d3,
        d3_ratio: (r > 0).then(|| d3 as f64 / r as f64),
        sum_pairs,
        pairs_below_4r: sum_pairs < 4 * r,
        doubled_pairs_below_4r: 2 * sum_pairs < 4 * r,
        degenerate: r == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream;
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

    #[test]
    fn pair_decoding_is_a_bijection() {
        for n in [2u64, 3, 4, 7, 50] {
            let decoded: Vec<(usize, usize)> = (0..pair_count(n)).map(|i| decode_pair(n, i)).collect();
            let expected: Vec<(usize, usize)> = (0..n as usize)
                .flat_map(|u| (u + 1..n as usize).map(move |v| (u, v)))
                .collect();
            assert_eq!(decoded, expected);
        }
        let n = 100_000u64;
        assert_eq!(decode_pair(n, 0), (0, 1));
        assert_eq!(decode_pair(n, pair_count(n) - 1), (99_998, 99_999));
        assert_eq!(decode_pair(n, n - 1), (1, 2));
    }

    #[test]
    fn gnm_examples() {
        let mut rng = stream(40, 0);
        assert_eq!(sample_gnm(5, 0, &mut rng).unwrap().edge_count(), 0);
        assert_eq!(sample_gnm(3, 3, &mut rng).unwrap().edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert!(matches!(sample_gnm(3, 4, &mut rng), Err(Error::Domain(_))));
        assert!(GnmParams::new(4, 7).is_err());
        let g = sample_gnm(1000, 600, &mut rng).unwrap();
        assert!(g.is_simple() && g.edge_count() == 600);
    }

    #[test]
    fn gnm_is_uniform_on_four_vertices() {
        let draws = 1_000_000u64;
        let mut rng = stream(41, 0);
        let mut counts: BTreeMap<Vec<(usize, usize)>, u64> = BTreeMap::new();
        for _ in 0..draws {
            *counts
                .entry(sample_gnm(4, 3, &mut rng).unwrap().edges().to_vec())
                .or_default() += 1;
        }
        assert_eq!(counts.len(), 20);
        let p_hat = 1.0 / 20.0;
        let sigma = (p_hat * (1.0 - p_hat) / draws as f64).sqrt();
        for &c in counts.values() {
            assert!((c as f64 / draws as f64 - p_hat).abs() < 4.0 * sigma);
        }
        let observed: Vec<u64> = counts.values().copied().collect();
        assert!(chi_square_p(&observed, &[draws as f64 / 20.0; 20]) > 0.001);
    }

    #[test]
    fn largest_component_examples() {
        let two_triangles = Pseudograph::new(6, vec![(3, 4), (4, 5), (5, 3), (0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(largest_component(&two_triangles), vec![0, 1, 2]);
        assert_eq!(
            largest_component(&crate::pseudograph::generators::petersen()),
            (0..10).collect::<Vec<_>>()
        );
        // path 0-1-2 and K4 on 3..7
        let mut edges = vec![(0, 1), (1, 2)];
        for u in 3..7 {
            for v in u + 1..7 {
                edges.push((u, v));
            }
        }
        let g = Pseudograph::new(7, edges).unwrap();
        assert_eq!(largest_component(&g), vec![3, 4, 5, 6]);
        assert_eq!(cycles_outside_giant(&g), 0);
        assert_eq!(cycles_outside_giant(&two_triangles), 3);
        assert_eq!(cycles_outside_giant(&crate::pseudograph::generators::petersen()), 0);
        // K4 giant with a pendant path, a triangle with a tail, and a tree
        let g = Pseudograph::new(
            12,
            vec![
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (5, 6),
                (6, 7),
                (7, 5),
                (7, 8),
                (9, 10),
                (10, 11),
            ],
        )
        .unwrap();
        assert_eq!(cycles_outside_giant(&g), 3);
    }

    #[test]
    fn predicted_prekernel_sizes() {
        let n = 100_000u64;
        let s = libm::ceil(libm::pow(n as f64, 0.75)) as u64;
        assert_eq!(s, 5624);
        let p = GnmParams::supercritical(n, s).unwrap();
        assert_eq!(p.m, 55_624);
        assert!((p.predicted_v().unwrap() - 2530.3).abs() < 0.1);
        assert!((p.predicted_r().unwrap() - 189.75).abs() < 0.1);
        assert!(p.warning().is_none());
        assert!(GnmParams::supercritical(n, 100).unwrap().warning().is_some());
    }

    #[test]
    fn prekernel_pipeline_is_consistent() {
        let stats = prekernel_statistics(2000, 150, 5, 42).unwrap();
        assert_eq!(stats.len(), 5);
        let params = GnmParams::supercritical(2000, 150).unwrap();
        for i in 0..5 {
            let (_, p) = sample_prekernel(&params, &mut stream(42, i)).unwrap();
            assert_eq!(PrekernelStats::of(&params, &p), stats[i as usize]);
            assert!(p.min_degree().is_none_or(|d| d >= 2));
            for comp in p.components() {
                assert!(comp.iter().any(|&v| p.degree(v) >= 3), "cycle component survived");
            }
            let st = stats[i as usize];
            assert!(st.v >= st.d3);
        }
        // tiny subcritical graphs give empty prekernels, recorded not failed
        let tiny = prekernel_statistics(20, 0, 20, 1).unwrap();
        assert!(tiny.iter().any(|s| s.degenerate));
    }

    #[test]
    fn lambda_oracles() {
        // values from a 40-digit root finder
        for (c, lambda) in [
            (2.3, 0.790_727_968_134_336_8),
            (2.01, 0.029_851_189_595_944_567),
            (2.1, 0.286_103_845_688_852_3),
            (2.5, 1.229_933_200_381_957_5),
            (3.0, 2.149_125_799_907_062_5),
        ] {
            let got = solve_lambda(c).unwrap();
            assert!((got - lambda).abs() < 1e-11, "c = {c}: {got}");
        }
        assert!((solve_lambda(2.01).unwrap() / 0.03 - 1.0).abs() < 0.02);
        assert!(solve_lambda(2.1).unwrap() < solve_lambda(2.5).unwrap());
        assert!(solve_lambda(2.0).is_err() && solve_lambda(1.0).is_err() && solve_lambda(f64::NAN).is_err());
    }

    #[test]
    fn lambda_series_regime() {
        for (eps, lambda) in [(1e-3, 0.002_998_501_198_950_968), (1e-4, 0.000_299_985_001_199_895)] {
            let got = solve_lambda(2.0 + eps).unwrap();
            assert!((got / (3.0 * eps) - 1.0).abs() <= 0.01);
            assert!((got - lambda).abs() < 1e-12, "{got}");
        }
        // the series and the bisection agree across the switch
        let below = solve_lambda(2.0 + 0.999e-6).unwrap();
        let above = solve_lambda(2.0 + 1.001e-6).unwrap();
        assert!(below < above && (above - below) < 1e-8);
    }

    #[test]
    fn truncated_poisson_pmf() {
        let m = TruncatedPoissonModel::new(1.0).unwrap();
        assert!((m.pmf(2).unwrap() - 0.696_105_595_588_666_4).abs() < 1e-14);
        assert!(m.pmf(1).is_err());
        assert!(TruncatedPoissonModel::new(0.0).is_err());
        for lambda in [1e-6, 0.03, 1.0, 5.0, 40.0] {
            let m = TruncatedPoissonModel::new(lambda).unwrap();
            let ratio = m.pmf(3).unwrap() / m.pmf(2).unwrap();
            assert!((ratio - lambda / 3.0).abs() < 1e-12 * lambda.max(1.0));
            let mut total = 0.0;
            let mut j = 2;
            loop {
                let p = m.pmf(j).unwrap();
                total += p;
                if p < 1e-15 && j as f64 > lambda {
                    break;
                }
                j += 1;
            }
            assert!((total - 1.0).abs() < 1e-10, "λ = {lambda}: {total}");
        }
        assert!(TruncatedPoissonModel::new(1e-9).unwrap().pmf(2).unwrap() > 1.0 - 1e-9);
    }

    #[test]
    fn lambda_solution_has_requested_mean() {
        // the mean of the truncated law is the left side of the λ-equation
        for c in [2.05, 2.3, 3.5] {
            let l = solve_lambda(c).unwrap();
            assert!((lambda_equation_lhs(l) - c).abs() < 1e-10);
            let m = TruncatedPoissonModel::new(l).unwrap();
            let mean: f64 = (2..200).map(|j| j as f64 * m.pmf(j).unwrap()).sum();
            assert!((mean - c).abs() < 1e-10);
        }
    }

    /// Exact `Multi(v, t) | ≥ 2` law by enumeration: weight `1 / ∏ j_i!`.
    fn exact_multinomial_law(v: usize, t: u32) -> BTreeMap<Vec<u32>, f64> {
        fn go(v: usize, left: u32, cur: &mut Vec<u32>, out: &mut BTreeMap<Vec<u32>, f64>) {
            if cur.len() == v - 1 {
                if left >= 2 {
                    cur.push(left);
                    let w = cur.iter().map(|&j| 1.0 / libm::tgamma(f64::from(j) + 1.0)).product();
                    out.insert(cur.clone(), w);
                    cur.pop();
                }
                return;
            }
            for j in 2..=left {
                cur.push(j);
                go(v, left - j, cur, out);
                cur.pop();
            }
        }
        let mut out = BTreeMap::new();
        go(v, t, &mut Vec::new(), &mut out);
        let z: f64 = out.values().sum();
        out.values_mut().for_each(|w| *w /= z);
        out
    }

    #[test]
    fn truncated_multinomial_small_cases() {
        let mut rng = stream(43, 0);
        assert_eq!(sample_truncated_multinomial(1, 9, &mut rng, 10).unwrap(), vec![9]);
        assert_eq!(sample_truncated_multinomial(4, 8, &mut rng, 10).unwrap(), vec![2; 4]);
        assert!(sample_truncated_multinomial(3, 5, &mut rng, 10).is_err());
        assert!(sample_truncated_multinomial(0, 5, &mut rng, 10).is_err());
        let law = exact_multinomial_law(2, 5);
        assert_eq!(law.len(), 2);
        assert!(law.values().all(|&p| (p - 0.5).abs() < 1e-15));
        let law = exact_multinomial_law(3, 9);
        assert!((law[&vec![3, 3, 3]] - (1.0 / 216.0) / (3.0 / 480.0 + 6.0 / 288.0 + 1.0 / 216.0)).abs() < 1e-15);
    }

    #[test]
    fn truncated_multinomial_matches_exact_law() {
        for (v, t, seed) in [(2usize, 5u32, 44u64), (3, 7, 45), (3, 9, 46), (4, 13, 47)] {
            let law = exact_multinomial_law(v, t);
            let draws = 200_000u64;
            let mut rng = stream(seed, 0);
            let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            for _ in 0..draws {
                let d = sample_truncated_multinomial(v as u64, u64::from(t), &mut rng, DEFAULT_MULTINOMIAL_ATTEMPTS)
                    .unwrap();
                assert!(d.iter().all(|&x| x >= 2) && d.iter().sum::<u32>() == t);
                *counts.entry(d).or_default() += 1;
            }
            assert!(counts.keys().all(|k| law.contains_key(k)));
            let observed: Vec<u64> = law.keys().map(|k| counts.get(k).copied().unwrap_or(0)).collect();
            let expected: Vec<f64> = law.values().map(|p| p * draws as f64).collect();
            let p = chi_square_p(&observed, &expected);
            assert!(p > 0.001, "(v, t) = ({v}, {t}): p = {p}");
        }
    }

    #[test]
    fn degree_hypotheses() {
        let h = degree_hypotheses_check(&[2; 10]);
        assert!(h.degenerate && h.d3_ratio.is_none());
        let h = degree_hypotheses_check(&[2, 2, 5, 3, 2]);
        assert_eq!((h.r, h.d3, h.sum_pairs), (4, 1, 13));
        assert!(h.pairs_below_4r && !h.doubled_pairs_below_4r);
        let h = degree_hypotheses_check(&[3, 3, 2, 2]);
        assert_eq!(h.d3_ratio, Some(1.0));
        assert!(h.pairs_below_4r && !h.doubled_pairs_below_4r);
    }

    #[test]
    fn few_cycle_vertices_outside_the_giant() {
        let n = 100_000u64;
        let s = libm::ceil(libm::pow(n as f64, 0.75)) as u64;
        let params = GnmParams::supercritical(n, s).unwrap();
        let total: usize = (0..20)
            .map(|i| cycles_outside_giant(&sample_gnm(params.n, params.m, &mut stream(49, i)).unwrap()))
            .sum();
        let mean = total as f64 / 20.0;
        let bound = n as f64 / s as f64 * libm::log(n as f64);
        assert!(mean <= bound, "{mean} > {bound}");
    }

    #[test]
    fn degree_hypotheses_at_scale() {
        // v = 10^4, r = 10^2, 10^3 draws
        let mut rng = stream(48, 0);
        let (mut ratio_ok, mut pairs_ok) = (0, 0);
        for _ in 0..1000 {
            let d = sample_truncated_multinomial(10_000, 20_100, &mut rng, DEFAULT_MULTINOMIAL_ATTEMPTS).unwrap();
            let h = degree_hypotheses_check(&d);
            assert_eq!(h.r, 100);
            ratio_ok += u32::from(h.d3_ratio.is_some_and(|x| (0.8..=1.2).contains(&x)));
            pairs_ok += u32::from(h.pairs_below_4r);
        }
        assert!(ratio_ok >= 950, "{ratio_ok}");
        assert!(pairs_ok >= 950, "{pairs_ok}");
    }
}
