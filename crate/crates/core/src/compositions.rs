//! Uniform random compositions of `N` into `m` positive parts.
//!
//! A composition `(X_1, …, X_m)` with every `X_i ≥ 1` and `Σ X_i = N` is the
//! weight sequence placed on kernel edges. There are `C(N-1, m-1)` of them,
//! and the number with a prescribed prefix `X_1 = t_1, …, X_j = t_j` is
//! `C(N-1-t, m-j-1)` where `t = t_1 + … + t_j`. For bounded `j` the scaled
//! parts `X_i / μ` (with `μ = N/m`) behave like independent unit
//! exponentials; the Monte Carlo estimators here compare both sides of that
//! limit.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_distr::{Distribution, Exp1};

use crate::error::{domain, Result};
use crate::stats::{Estimate, Welford};

/// A sequence of positive integers with a fixed total.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u64>,
    total: u64,
}

impl Composition {
    /// Wraps `parts`, checking that every part is positive.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(domain("a composition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(domain("composition parts must be positive"));
        }
        let total = parts.iter().sum();
        Ok(Self { parts, total })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    /// `N`, the sum of the parts.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// `m`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `μ = N / m` as an exact rational.
    pub fn mu(&self) -> BigRational {
        BigRational::new(BigInt::from(self.total), BigInt::from(self.parts.len()))
    }

    /// Parts divided by `μ`; these sum to `m` up to rounding.
    pub fn scaled(&self) -> Vec<f64> {
        let mu = self.total as f64 / self.parts.len() as f64;
        self.parts.iter().map(|&p| p as f64 / mu).collect()
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

fn check_sizes(total: u64, parts: u64) -> Result<()> {
    if parts == 0 {
        return Err(domain("number of parts must be at least 1"));
    }
    if total < parts {
        return Err(domain(format!("no composition of {total} into {parts} positive parts")));
    }
    Ok(())
}

/// The number of compositions of `total` into `parts` positive parts,
/// `C(total-1, parts-1)`.
pub fn count_compositions(total: u64, parts: u64) -> Result<BigUint> {
    check_sizes(total, parts)?;
    Ok(binomial(total - 1, parts - 1))
}

/// Draws a composition uniformly at random.
///
/// The `parts - 1` cut points are a uniform `(parts-1)`-subset of the
/// `total - 1` gaps, chosen by a partial Fisher–Yates shuffle whose swaps are
/// kept in a map, so memory is `O(parts)` regardless of `total`.
pub fn sample_composition<R: Rng + ?Sized>(total: u64, parts: u64, rng: &mut R) -> Result<Composition> {
    check_sizes(total, parts)?;
    let gaps = total - 1;
    let cuts_needed = parts - 1;
    let mut swapped: BTreeMap<u64, u64> = BTreeMap::new();
    let mut cuts = Vec::with_capacity(cuts_needed as usize);
    for i in 0..cuts_needed {
        let j = rng.random_range(i..gaps);
        let at_j = swapped.get(&j).copied().unwrap_or(j);
        let at_i = swapped.get(&i).copied().unwrap_or(i);
        swapped.insert(j, at_i);
        // gap index g separates positions g and g+1, i.e. a cut after g+1
        cuts.push(at_j + 1);
    }
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts as usize);
    let mut prev = 0;
    for c in cuts {
        out.push(c - prev);
        prev = c;
    }
    out.push(total - prev);
    Composition::new(out)
}

/// `P[X_1 = t_1, …, X_j = t_j]` as an exact rational.
pub fn exact_joint_pmf(total: u64, parts: u64, prefix: &[u64]) -> Result<BigRational> {
    check_sizes(total, parts)?;
    let j = prefix.len() as u64;
    if j == 0 || j >= parts {
        return Err(domain(format!("prefix length {j} must satisfy 1 <= j < m = {parts}")));
    }
    if prefix.contains(&0) {
        return Err(domain("prefix entries must be positive"));
    }
    let t: u64 = prefix.iter().sum();
    if t >= total {
        return Ok(BigRational::zero());
    }
    let completions = binomial(total - 1 - t, parts - j - 1);
    if completions.is_zero() {
        return Ok(BigRational::zero());
    }
    let all = binomial(total - 1, parts - 1);
    Ok(BigRational::new(BigInt::from(completions), BigInt::from(all)))
}

/// The tail estimate `2 μ^{-j} e^{-x} (1 - 1/(2μ))^{t - xμ}` for prefixes of
/// length `j` summing to `t ≥ xμ`.
///
/// The large-`N` requirement behind the estimate is checked as
/// `m - j - 1 > m/2`.
pub fn tail_bound(total: u64, parts: u64, j: u64, x: f64, t: u64) -> Result<f64> {
    check_sizes(total, parts)?;
    if j == 0 || j >= parts {
        return Err(domain("prefix length must satisfy 1 <= j < m"));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("x must be a positive real"));
    }
    if 2 * (parts - j - 1) <= parts {
        return Err(domain(format!(
            "tail bound needs m - j - 1 > m/2 (m = {parts}, j = {j})"
        )));
    }
    let mu = total as f64 / parts as f64;
    let excess = t as f64 - x * mu;
    if excess < 0.0 {
        return Err(domain(format!("t = {t} is below x*mu = {}", x * mu)));
    }
    let log_bound = libm::log(2.0) - j as f64 * libm::log(mu) - x + excess * libm::log1p(-0.5 / mu);
    Ok(libm::exp(log_bound))
}

/// A nonnegative function of `arity` variables with a polynomial growth
/// bound `f(x) ≤ C (x_1 + … + x_j)^d`.
pub struct BoundedFunction<F> {
    arity: usize,
    growth_c: f64,
    growth_d: f64,
    eval: F,
}

impl<F: Fn(&[f64]) -> f64> BoundedFunction<F> {
    pub fn new(arity: usize, growth_c: f64, growth_d: f64, eval: F) -> Result<Self> {
        if arity == 0 {
            return Err(domain("arity must be positive"));
        }
        if !(growth_c >= 0.0) || !(growth_d >= 0.0) {
            return Err(domain("growth constants must be nonnegative"));
        }
        Ok(Self {
            arity,
            growth_c,
            growth_d,
            eval,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn growth(&self) -> (f64, f64) {
        (self.growth_c, self.growth_d)
    }

    /// Evaluates at `x`, checking nonnegativity and the growth bound.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.arity {
            return Err(domain(format!("expected {} arguments, got {}", self.arity, x.len())));
        }
        let value = (self.eval)(x);
        if !(value >= 0.0) {
            return Err(domain(format!("function returned {value}, expected >= 0")));
        }
        let sum: f64 = x.iter().sum();
        let cap = self.growth_c * libm::pow(sum, self.growth_d);
        if value > cap * (1.0 + 1e-12) + 1e-300 {
            return Err(domain(format!(
                "growth bound violated: f = {value} > C (sum x)^d = {cap}"
            )));
        }
        Ok(value)
    }
}

/// Averages `g(X_1/μ, …, X_j/μ)` over independent uniform compositions.
pub fn mc_limit_expectation<F, R>(
    g: &BoundedFunction<F>,
    total: u64,
    parts: u64,
    samples: u64,
    rng: &mut R,
) -> Result<Estimate>
where
    F: Fn(&[f64]) -> f64,
    R: Rng + ?Sized,
{
    check_sizes(total, parts)?;
    if samples == 0 {
        return Err(domain("samples must be at least 1"));
    }
    if g.arity() as u64 >= parts {
        return Err(domain("function arity must be smaller than m"));
    }
    let mu = total as f64 / parts as f64;
    let mut acc = Welford::new();
    let mut args = alloc::vec![0.0; g.arity()];
    for _ in 0..samples {
        let c = sample_composition(total, parts, rng)?;
        for (a, &p) in args.iter_mut().zip(c.parts()) {
            *a = p as f64 / mu;
        }
        acc.push(g.evaluate(&args)?);
    }
    Ok(acc.estimate())
}

/// Monte Carlo value of `∫ g(x) e^{-x_1-…-x_j} dx` with independent unit
/// exponential coordinates.
pub fn reference_integral<F, R>(g: &BoundedFunction<F>, samples: u64, rng: &mut R) -> Result<Estimate>
where
    F: Fn(&[f64]) -> f64,
    R: Rng + ?Sized,
{
    if samples == 0 {
        return Err(domain("samples must be at least 1"));
    }
    let mut acc = Welford::new();
    let mut args = alloc::vec![0.0; g.arity()];
    for _ in 0..samples {
        for a in args.iter_mut() {
            *a = Exp1.sample(rng);
        }
        acc.push(g.evaluate(&args)?);
    }
    Ok(acc.estimate())
}
