//! Derivative-free minimisation.

use alloc::vec;
use alloc::vec::Vec;

/// Stopping rules for [`nelder_mead`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadOptions {
    /// Initial simplex edge length along each axis.
    pub step: f64,
    /// Stop once the spread of simplex values falls below this.
    pub f_tolerance: f64,
    /// Stop once every vertex is within this distance of the best one.
    pub x_tolerance: f64,
    pub max_evaluations: usize,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self {
            step: 0.5,
            f_tolerance: 1e-10,
            x_tolerance: 1e-8,
            max_evaluations: 20_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
}

/// Nelder–Mead with dimension-adaptive coefficients (reflection 1,
/// expansion `1 + 2/n`, contraction `3/4 - 1/(2n)`, shrink `1 - 1/n`).
pub fn nelder_mead<F: FnMut(&[f64]) -> f64>(mut f: F, start: &[f64], opts: &NelderMeadOptions) -> Minimum {
    let n = start.len();
    if n == 0 {
        let value = f(start);
        return Minimum {
            x: Vec::new(),
            value,
            evaluations: 1,
        };
    }
    let nf = n as f64;
    let (alpha, gamma, rho, sigma) = (1.0, 1.0 + 2.0 / nf, 0.75 - 0.5 / nf, 1.0 - 1.0 / nf);
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    let v0 = eval(start, &mut evals);
    simplex.push((start.to_vec(), v0));
    for i in 0..n {
        let mut x = start.to_vec();
        x[i] += opts.step;
        let v = eval(&x, &mut evals);
        simplex.push((x, v));
    }

    let point =
        |c: &[f64], w: &[f64], t: f64| -> Vec<f64> { c.iter().zip(w).map(|(ci, wi)| ci + t * (wi - ci)).collect() };

    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = simplex[0].1;
        let worst = simplex[n].1;
        let spread = simplex
            .iter()
            .skip(1)
            .map(|(x, _)| {
                x.iter()
                    .zip(&simplex[0].0)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if (worst - best).abs() <= opts.f_tolerance && spread <= opts.x_tolerance || evals >= opts.max_evaluations {
            break;
        }

        let mut centroid = vec![0.0; n];
        for (x, _) in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / nf;
            }
        }
        let (worst_x, worst_v) = simplex[n].clone();
        let second_worst = simplex[n - 1].1;

        let xr = point(&centroid, &worst_x, -alpha);
        let vr = eval(&xr, &mut evals);
        if vr < best {
            let xe = point(&centroid, &worst_x, -alpha * gamma);
            let ve = eval(&xe, &mut evals);
            simplex[n] = if ve < vr { (xe, ve) } else { (xr, vr) };
            continue;
        }
        if vr < second_worst {
            simplex[n] = (xr, vr);
            continue;
        }
        // contraction: outside if the reflection improved on the worst point
        let (xc, vc) = if vr < worst_v {
            let xc = point(&centroid, &worst_x, -alpha * rho);
            let vc = eval(&xc, &mut evals);
            (xc, vc)
        } else {
            let xc = point(&centroid, &worst_x, rho);
            let vc = eval(&xc, &mut evals);
            (xc, vc)
        };
        if vc < worst_v.min(vr) {
            simplex[n] = (xc, vc);
            continue;
        }
        let x0 = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            let x = point(&x0, &vertex.0, sigma);
            let v = eval(&x, &mut evals);
            *vertex = (x, v);
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, value) = simplex.swap_remove(0);
    Minimum {
        x,
        value,
        evaluations: evals,
    }
}
