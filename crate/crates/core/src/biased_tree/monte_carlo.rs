use alloc::format;
use alloc::vec;

use rand::Rng;
use rand_distr::Exp1;

use super::tree::BiasedTree;
use crate::error::{domain, Result};
use crate::stats::{Estimate, Welford};

/// Monte Carlo estimate of `E_T`.
pub type EtEstimate = Estimate;

/// Smallest sample count accepted by [`e_t_monte_carlo`].
pub const MIN_SAMPLES: u64 = 1000;

/// Adds `samples` draws of `f_T(X)`, `X` i.i.d. unit exponential, to `acc`.
pub fn accumulate_f_t<R: Rng + ?Sized>(tree: &BiasedTree, samples: u64, rng: &mut R, acc: &mut Welford) {
    let mut x = vec![0.0; tree.edge_count()];
    for _ in 0..samples {
        for xi in x.iter_mut() {
            *xi = rng.sample(Exp1);
        }
        acc.push(tree.f_t(&x));
    }
}

pub fn e_t_monte_carlo<R: Rng + ?Sized>(tree: &BiasedTree, samples: u64, rng: &mut R) -> Result<EtEstimate> {
    if samples < MIN_SAMPLES {
        return Err(domain(format!("need at least {MIN_SAMPLES} samples, got {samples}")));
    }
    let mut acc = Welford::new();
    accumulate_f_t(tree, samples, rng, &mut acc);
    Ok(acc.estimate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biased_tree::{e_t_closed_form, StandardTree, TreeShape, STAR_UNIFORM_E_T};
    use crate::rng::stream;

    #[test]
    fn star_matches_eight_ninths() {
        let star = BiasedTree::uniform(TreeShape::star());
        let est = e_t_monte_carlo(&star, 400_000, &mut stream(1, 0)).unwrap();
        assert!(est.sigmas_from(STAR_UNIFORM_E_T).abs() < 3.0, "{est:?}");
    }

    #[test]
    fn closed_forms_agree_with_sampling() {
        for (i, t) in StandardTree::ALL.into_iter().enumerate() {
            let cf = e_t_closed_form(t).unwrap();
            let est = e_t_monte_carlo(&cf.biased_tree(), 400_000, &mut stream(2, i as u64)).unwrap();
            assert!(est.sigmas_from(cf.value).abs() < 4.0, "{t:?}: {est:?} vs {}", cf.value);
        }
    }

    #[test]
    fn degenerate_bias_is_at_most_one() {
        let t = BiasedTree::new(TreeShape::t5(), vec![1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let est = e_t_monte_carlo(&t, 100_000, &mut stream(3, 0)).unwrap();
        assert!(est.value <= 1.0 + 4.0 * est.standard_error);
        assert!(e_t_monte_carlo(&t, 999, &mut stream(3, 0)).is_err());
    }
}
