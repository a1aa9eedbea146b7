use cycle_bound_core::compositions::{exact_joint_pmf, sample_composition};
use cycle_bound_core::rng::stream;
use cycle_bound_core::Error;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::fan_out;
use crate::error::{LabError, Result};
use crate::report::{to_csv, Output, ReportBuilder};

/// Relative tolerance of the exponential limit for `t ≤ 5μ`.
pub const LIMIT_TOLERANCE: f64 = 0.05;
/// Thresholds `x` at which the empirical tail `P(X_1 > xμ)` is compared
/// with `e^{-x}`.
pub const TAIL_POINTS: [f64; 4] = [0.5, 1.0, 2.0, 3.0];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitCheck {
    pub j: u64,
    pub t_max: u64,
    /// `max |P[X_1..X_j = prefix] μ^j e^{t/μ} - 1|` over all `t` in `j..=t_max`.
    pub max_deviation: f64,
    pub worst_t: u64,
}

fn prefix_with_sum(j: u64, t: u64) -> Vec<u64> {
    let mut p = vec![1; j as usize];
    p[j as usize - 1] = t - (j - 1);
    p
}

fn exact_pmf(total: u64, parts: u64, j: u64, t: u64) -> Result<f64> {
    exact_joint_pmf(total, parts, &prefix_with_sum(j, t))?
        .to_f64()
        .filter(|p| p.is_finite() && *p > 0.0)
        .ok_or_else(|| LabError::Usage(format!("pmf at t = {t} is not a positive f64")))
}

/// The pmf depends on the prefix only through its sum `t`, and consecutive
/// values differ by the factor `(N-1-t-k) / (N-1-t)` with `k = m-j-1`. The
/// scan walks that recurrence from an exact start and re-anchors against
/// the exact rational at `μ`, `2μ`, ... so rounding cannot accumulate.
pub fn limit_law_deviation(total: u64, parts: u64, j: u64, t_max: u64) -> Result<LimitCheck> {
    if j == 0 || j >= parts || t_max < j || t_max >= total {
        return Err(Error::Domain(format!("need 1 <= j < m and j <= t_max < N (j = {j}, t_max = {t_max})")).into());
    }
    let mu = total as f64 / parts as f64;
    let k = (parts - j - 1) as f64;
    let anchor_every = (mu.ceil() as u64).max(1);
    let mut pmf = exact_pmf(total, parts, j, j)?;
    let mut worst = (0.0f64, j);
    for t in j..=t_max {
        if t > j && (t - j).is_multiple_of(anchor_every) {
            let exact = exact_pmf(total, parts, j, t)?;
            if (pmf / exact - 1.0).abs() > 1e-9 {
                return Err(LabError::Usage(format!("pmf recurrence drifted at t = {t}")));
            }
            pmf = exact;
        }
        let ratio = pmf * mu.powi(j as i32) * (t as f64 / mu).exp();
        if (ratio - 1.0).abs() > worst.0 {
            worst = ((ratio - 1.0).abs(), t);
        }
        let rest = (total - 1 - t) as f64;
        pmf *= (rest - k) / rest;
    }
    Ok(LimitCheck {
        j,
        t_max,
        max_deviation: worst.0,
        worst_t: worst.1,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositionConfig {
    /// `N`, the total.
    pub total: u64,
    /// `m`, the number of parts.
    pub parts: u64,
    pub samples: u64,
    pub replicas: u64,
    pub seed: u64,
    pub deterministic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReplicaRow {
    pub seed: u64,
    pub replica: u64,
    pub samples: u64,
    pub mean_scaled_first: f64,
    pub tail_0_5: f64,
    pub tail_1: f64,
    pub tail_2: f64,
    pub tail_3: f64,
    pub scaled_sum_exact: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositionResults {
    pub mu: f64,
    pub limit: Vec<LimitCheck>,
    pub mean_scaled_first: f64,
    /// `(x, empirical P(X_1 > xμ), e^{-x})`.
    pub tails: Vec<(f64, f64, f64)>,
}

pub fn run(config: &CompositionConfig) -> Result<Output> {
    if config.replicas == 0 || config.samples < config.replicas {
        return Err(LabError::Usage("need at least one sample per replica".into()));
    }
    let (n, m) = (config.total, config.parts);
    let mu = n as f64 / m as f64;
    let mut report = ReportBuilder::new("composition-stats", config.seed, config);
    let t_max = ((5.0 * mu).floor() as u64).min(n - 1);
    let mut limit = Vec::new();
    for j in 1..=3.min(m.saturating_sub(1)) {
        if t_max >= j {
            let check = limit_law_deviation(n, m, j, t_max)?;
            report.verdict(
                &format!("exponential limit within 5% for j = {j}, t <= 5 mu"),
                check.max_deviation <= LIMIT_TOLERANCE,
                false,
                format!("max deviation {} at t = {}", check.max_deviation, check.worst_t),
            );
            limit.push(check);
        }
    }
    let share = config.samples / config.replicas;
    let extra = config.samples % config.replicas;
    let rows = fan_out(config.replicas, |i| -> Result<ReplicaRow> {
        let count = share + u64::from(i < extra);
        let mut rng = stream(config.seed, i);
        let mut first = 0.0;
        let mut tails = [0u64; 4];
        let mut exact_sum = true;
        for _ in 0..count {
            let c = sample_composition(n, m, &mut rng)?;
            let x = c.parts()[0] as f64 / mu;
            first += x;
            for (hit, &p) in tails.iter_mut().zip(&TAIL_POINTS) {
                *hit += u64::from(x > p);
            }
            exact_sum &= c.total() == n;
        }
        let f = |h: u64| h as f64 / count as f64;
        Ok(ReplicaRow {
            seed: config.seed,
            replica: i,
            samples: count,
            mean_scaled_first: first / count as f64,
            tail_0_5: f(tails[0]),
            tail_1: f(tails[1]),
            tail_2: f(tails[2]),
            tail_3: f(tails[3]),
            scaled_sum_exact: exact_sum,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let weight = |r: &ReplicaRow| r.samples as f64 / config.samples as f64;
    let mean_first = rows.iter().map(|r| r.mean_scaled_first * weight(r)).sum();
    let pooled = |g: fn(&ReplicaRow) -> f64| rows.iter().map(|r| g(r) * weight(r)).sum::<f64>();
    let tails = vec![
        (0.5, pooled(|r| r.tail_0_5), (-0.5f64).exp()),
        (1.0, pooled(|r| r.tail_1), (-1.0f64).exp()),
        (2.0, pooled(|r| r.tail_2), (-2.0f64).exp()),
        (3.0, pooled(|r| r.tail_3), (-3.0f64).exp()),
    ];
    report.verdict(
        "parts always sum to N",
        rows.iter().all(|r| r.scaled_sum_exact),
        true,
        "",
    );
    let results = CompositionResults {
        mu,
        limit,
        mean_scaled_first: mean_first,
        tails,
    };
    Ok(Output {
        report: report.finish(&results, config.deterministic),
        csv: Some(to_csv(&rows)?),
    })
}
