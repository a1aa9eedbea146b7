use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_distr::Exp1;

use super::families::enumerate_path_families;
use super::monte_carlo::{e_t_monte_carlo, EtEstimate, MIN_SAMPLES};
use super::shapes::edge_automorphisms;
use super::tree::{BiasedTree, TreeShape};
use crate::error::{domain, Result};
use crate::optim::{nelder_mead, NelderMeadOptions};

/// Result of [`optimize_bias`].
#[derive(Debug, Clone)]
pub struct BiasOptimum {
    pub tree: BiasedTree,
    /// Objective at the optimum on the common random numbers used for the
    /// search (biased low).
    pub search_value: f64,
    /// Independent estimate of `E_T` at the optimum.
    pub estimate: EtEstimate,
}

impl BiasOptimum {
    pub fn biases(&self) -> &[f64] {
        self.tree.biases()
    }
}

/// Cap on the automorphisms used to symmetrise the draws.
const MAX_AUTOMORPHISMS: usize = 512;

/// Sample mean of `f_T` over a fixed matrix of exponentials, as a function of
/// the biases. Each base draw appears once per automorphism of the shape, so
/// the objective is exactly invariant under the symmetries of the tree.
///
/// The linear control variate `Σ b_i β_i (X̄_i - 1)` has mean zero and removes
/// most of the column-mean noise from the gradient; `β` is regressed once at
/// uniform biases.
struct CrnObjective {
    k: usize,
    families: Vec<Vec<usize>>,
    draws: Vec<f64>,
    control: Vec<f64>,
}

impl CrnObjective {
    fn new<R: Rng + ?Sized>(shape: &TreeShape, automorphisms: &[Vec<usize>], samples: u64, rng: &mut R) -> Self {
        let k = shape.edge_count();
        let families = enumerate_path_families(shape)
            .masks()
            .iter()
            .map(|&m| (0..k).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        let base = (samples as usize).div_ceil(automorphisms.len());
        let mut draws = Vec::with_capacity(base * automorphisms.len() * k);
        let mut x = vec![0.0; k];
        for _ in 0..base {
            x.iter_mut().for_each(|xi| *xi = rng.sample(Exp1));
            for perm in automorphisms {
                let start = draws.len();
                draws.resize(start + k, 0.0);
                for (i, &j) in perm.iter().enumerate() {
                    draws[start + j] = x[i];
                }
            }
        }
        let mut objective = Self {
            k,
            families,
            draws,
            control: vec![0.0; k],
        };
        objective.control = objective.fit_control(&vec![1.0 / k as f64; k]);
        objective
    }

    fn rows(&self) -> usize {
        self.draws.len() / self.k
    }

    fn best_family(&self, b: &[f64], x: &[f64]) -> (usize, f64) {
        let mut best = (0, 0.0);
        for (j, f) in self.families.iter().enumerate() {
            let v = f.iter().map(|&i| b[i] * x[i]).sum::<f64>();
            if v > best.1 {
                best = (j, v);
            }
        }
        best
    }

    /// Per-edge `β_i (X̄_i - 1)` where `β_i` is the regression slope of
    /// `X_i 1[e_i wins]` on `X_i`.
    fn fit_control(&self, b: &[f64]) -> Vec<f64> {
        let k = self.k;
        let n = self.rows() as f64;
        let (mut sx, mut sxx, mut sy, mut sxy) = (vec![0.0; k], vec![0.0; k], vec![0.0; k], vec![0.0; k]);
        for x in self.draws.chunks_exact(k) {
            let (j, _) = self.best_family(b, x);
            for i in 0..k {
                sx[i] += x[i];
                sxx[i] += x[i] * x[i];
            }
            for &i in &self.families[j] {
                sy[i] += x[i];
                sxy[i] += x[i] * x[i];
            }
        }
        (0..k)
            .map(|i| {
                let mx = sx[i] / n;
                let var = sxx[i] / n - mx * mx;
                let cov = sxy[i] / n - mx * sy[i] / n;
                let beta = if var > 0.0 { cov / var } else { 0.0 };
                beta * (mx - 1.0)
            })
            .collect()
    }

    fn mean(&self, b: &[f64]) -> f64 {
        let mut y = vec![0.0; self.k];
        let mut total = 0.0;
        for x in self.draws.chunks_exact(self.k) {
            for ((yi, bi), xi) in y.iter_mut().zip(b).zip(x) {
                *yi = bi * xi;
            }
            let best = self
                .families
                .iter()
                .map(|f| f.iter().map(|&i| y[i]).sum::<f64>())
                .fold(0.0, f64::max);
            total += best;
        }
        total / self.rows() as f64 - b.iter().zip(&self.control).map(|(bi, ci)| bi * ci).sum::<f64>()
    }
}

/// Maps `k - 1` free parameters to the simplex; the first coordinate's logit
/// is pinned at 0.
fn softmax(theta: &[f64]) -> Vec<f64> {
    let top = theta.iter().copied().fold(0.0, f64::max);
    let mut b: Vec<f64> = core::iter::once(0.0)
        .chain(theta.iter().copied())
        .map(|t| libm::exp(t - top))
        .collect();
    let s: f64 = b.iter().sum();
    b.iter_mut().for_each(|v| *v /= s);
    let rest: f64 = b[1..].iter().sum();
    b[0] = (1.0 - rest).max(0.0);
    b
}

/// Minimises the Monte Carlo estimate of `E_T` over biases on `shape`.
///
/// The search uses one matrix of `samples × k` exponentials for every
/// evaluation, making the objective deterministic. Each of `restarts` runs
/// of Nelder–Mead on the softmax parametrisation is restarted from its own
/// result until it stops improving. The winner is averaged over the orbit of
/// the automorphisms, which cannot raise the convex objective, and then
/// re-estimated on `samples` fresh draws.
pub fn optimize_bias<R: Rng + ?Sized>(
    shape: &TreeShape,
    samples: u64,
    rng: &mut R,
    restarts: usize,
) -> Result<BiasOptimum> {
    if samples < MIN_SAMPLES {
        return Err(domain(format!("need at least {MIN_SAMPLES} samples, got {samples}")));
    }
    let automorphisms = edge_automorphisms(shape, MAX_AUTOMORPHISMS);
    let objective = CrnObjective::new(shape, &automorphisms, samples, rng);
    let dim = shape.edge_count() - 1;
    let opts = NelderMeadOptions {
        step: 0.5,
        f_tolerance: 1e-9,
        x_tolerance: 1e-5,
        max_evaluations: 4000 * dim,
    };
    let mut best: Option<(Vec<f64>, f64)> = None;
    for r in 0..restarts.max(1) {
        let mut theta: Vec<f64> = if r == 0 {
            vec![0.0; dim]
        } else {
            (0..dim).map(|_| rng.random_range(-1.5..1.5)).collect()
        };
        let mut value = f64::INFINITY;
        for _ in 0..8 {
            let m = nelder_mead(|t| objective.mean(&softmax(t)), &theta, &opts);
            let improved = m.value < value - 1e-7;
            if m.value < value {
                theta = m.x;
                value = m.value;
            }
            if !improved {
                break;
            }
        }
        if best.as_ref().is_none_or(|(_, v)| value < *v) {
            best = Some((theta, value));
        }
    }
    let (theta, _) = best.expect("at least one restart");
    let raw = softmax(&theta);
    let g = automorphisms.len() as f64;
    let mut biases: Vec<f64> = (0..raw.len())
        .map(|i| automorphisms.iter().map(|p| raw[p[i]]).sum::<f64>() / g)
        .collect();
    let rest: f64 = biases[1..].iter().sum();
    biases[0] = (1.0 - rest).max(0.0);
    let search_value = objective.mean(&biases);
    let tree = BiasedTree::new(shape.clone(), biases)?;
    let estimate = e_t_monte_carlo(&tree, samples, rng)?;
    Ok(BiasOptimum {
        tree,
        search_value,
        estimate,
    })
}
