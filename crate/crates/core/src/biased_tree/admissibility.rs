use alloc::format;

use super::closed_form::{e_t_closed_form, ClosedForm, StandardTree, STAR_UNIFORM_E_T};
use super::monte_carlo::{e_t_monte_carlo, EtEstimate};
use super::optimize::optimize_bias;
use super::shapes::tree_shapes;
use super::tree::{BiasedTree, TreeShape};
use crate::error::{domain, Result};
use crate::rng::stream;

/// Largest `k` searched numerically.
pub const MAX_SEARCH_EDGES: usize = 11;

/// Standard errors of headroom required of a Monte Carlo witness.
pub const MC_CONFIDENCE_SIGMAS: f64 = 4.0;

/// Why a witness tree has `E_T < c*`.
#[derive(Debug, Clone, PartialEq)]
pub enum Evidence {
    /// The uniform 3-edge star, `E_T = 8/9` exactly.
    Star,
    ClosedForm(ClosedForm),
    /// `value + 4σ < c*` on draws independent of the bias search.
    MonteCarlo(EtEstimate),
}

impl Evidence {
    pub fn value(&self) -> f64 {
        match self {
            Evidence::Star => STAR_UNIFORM_E_T,
            Evidence::ClosedForm(cf) => cf.value,
            Evidence::MonteCarlo(e) => e.value,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub tree: BiasedTree,
    pub evidence: Evidence,
}

/// Effort spent on the numerical fallback.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibilitySearch {
    pub samples: u64,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for AdmissibilitySearch {
    fn default() -> Self {
        Self {
            samples: 200_000,
            restarts: 2,
            seed: 0,
        }
    }
}

/// Looks for a biased tree on `k` edges with `E_T < c_star`.
///
/// Exact values are tried first: the uniform star for `k = 3` and the closed
/// forms for `k ∈ {5, 7, 9}`. For `k ∈ {3, 5}` nothing else can do better
/// (each has a single shape whose symmetric bias is optimal), so the search
/// stops there. For `k ∈ {7, 9, 11}` every shape is then optimised
/// numerically and accepted only if a fresh estimate clears `c_star` by
/// [`MC_CONFIDENCE_SIGMAS`] standard errors. Larger `k` and even `k` give
/// `None`.
pub fn admissibility_certificate(c_star: f64, k: usize, search: &AdmissibilitySearch) -> Result<Option<Certificate>> {
    if !(c_star.is_finite() && c_star > 0.0) {
        return Err(domain(format!("c* must be positive, got {c_star}")));
    }
    if k < 3 {
        return Err(domain(format!("trees need at least 3 edges, got {k}")));
    }
    if k.is_multiple_of(2) {
        return Ok(None);
    }
    if k == 3 {
        return Ok((STAR_UNIFORM_E_T < c_star).then(|| Certificate {
            tree: BiasedTree::uniform(TreeShape::star()),
            evidence: Evidence::Star,
        }));
    }
    if let Some(t) = StandardTree::ALL.into_iter().find(|t| t.edge_count() == k) {
        let cf = e_t_closed_form(t)?;
        if cf.value < c_star {
            return Ok(Some(Certificate {
                tree: cf.biased_tree(),
                evidence: Evidence::ClosedForm(cf),
            }));
        }
        if k == 5 {
            return Ok(None);
        }
    }
    if k > MAX_SEARCH_EDGES {
        return Ok(None);
    }
    let mut best: Option<Certificate> = None;
    for (i, shape) in tree_shapes(k).iter().enumerate() {
        let mut rng = stream(search.seed, i as u64);
        let opt = optimize_bias(shape, search.samples, &mut rng, search.restarts)?;
        // re-estimate on a stream the search never touched
        let check = e_t_monte_carlo(
            &opt.tree,
            search.samples,
            &mut stream(search.seed, (1 << 32) + i as u64),
        )?;
        if check.value + MC_CONFIDENCE_SIGMAS * check.standard_error < c_star
            && best.as_ref().is_none_or(|b| check.value < b.evidence.value())
        {
            best = Some(Certificate {
                tree: opt.tree,
                evidence: Evidence::MonteCarlo(check),
            });
        }
    }
    Ok(best)
}
