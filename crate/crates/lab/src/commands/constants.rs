use cycle_bound_core::biased_tree::{e_t_closed_form, e_t_monte_carlo, StandardTree};
use cycle_bound_core::rng::stream;
use serde::Serialize;

use super::fan_out;
use crate::error::Result;
use crate::report::{Output, ReportBuilder};

/// The circumference constant the pipeline must beat: `8 E_T(T9) < 6.958`.
pub const HEADLINE_THRESHOLD: f64 = 6.958;

/// Earlier circumference constants, shown for context: lower bounds 16/3
/// and 6, upper bound 7.496.
pub const PRIOR_LOWER: f64 = 16.0 / 3.0;
pub const IMPROVED_LOWER: f64 = 6.0;
pub const PRIOR_UPPER: f64 = 7.496;

/// Published intervals for `E_T`.
pub fn golden_interval(t: StandardTree) -> (f64, f64) {
    match t {
        StandardTree::T5 => (0.8797, 0.8798),
        StandardTree::T7 => (0.8741, 0.8742),
        StandardTree::T9 => (0.8696, 0.8697),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstantsConfig {
    /// Monte Carlo draws per tree for the cross-check.
    pub samples: u64,
    pub seed: u64,
    pub deterministic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TreeConstant {
    pub tree: &'static str,
    pub b_star: f64,
    pub e_t: f64,
    pub eight_e_t: f64,
    pub interval: (f64, f64),
    pub in_interval: bool,
    pub mc_value: f64,
    pub mc_standard_error: f64,
    pub mc_sigmas: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstantsResults {
    pub trees: Vec<TreeConstant>,
    pub headline: f64,
    pub headline_threshold: f64,
    pub prior_lower: f64,
    pub improved_lower: f64,
    pub prior_upper: f64,
}

pub fn run(config: &ConstantsConfig) -> Result<Output> {
    let mut report = ReportBuilder::new("constants", config.seed, config);
    let estimates = fan_out(StandardTree::ALL.len() as u64, |i| -> Result<_> {
        let t = StandardTree::ALL[i as usize];
        let cf = e_t_closed_form(t)?;
        let mc = e_t_monte_carlo(&cf.biased_tree(), config.samples, &mut stream(config.seed, i))?;
        Ok((t, cf, mc))
    });
    let mut trees = Vec::new();
    for e in estimates {
        let (t, cf, mc) = e?;
        let interval = golden_interval(t);
        let in_interval = interval.0 < cf.value && cf.value < interval.1;
        let sigmas = mc.sigmas_from(cf.value);
        report.verdict(
            &format!("{} closed form in interval", t.name()),
            in_interval,
            true,
            format!("E_T = {} in ({}, {})", cf.value, interval.0, interval.1),
        );
        report.verdict(
            &format!("{} Monte Carlo within 4 standard errors", t.name()),
            sigmas.abs() <= 4.0,
            false,
            format!("{} +- {} ({sigmas:.2} sigma)", mc.value, mc.standard_error),
        );
        trees.push(TreeConstant {
            tree: t.name(),
            b_star: cf.b_star,
            e_t: cf.value,
            eight_e_t: 8.0 * cf.value,
            interval,
            in_interval,
            mc_value: mc.value,
            mc_standard_error: mc.standard_error,
            mc_sigmas: sigmas,
        });
    }
    let headline = 8.0 * trees[2].e_t;
    report.verdict(
        "8 E_T(T9) below 6.958",
        headline < HEADLINE_THRESHOLD,
        true,
        format!("{headline}"),
    );
    let results = ConstantsResults {
        trees,
        headline,
        headline_threshold: HEADLINE_THRESHOLD,
        prior_lower: PRIOR_LOWER,
        improved_lower: IMPROVED_LOWER,
        prior_upper: PRIOR_UPPER,
    };
    Ok(Output {
        report: report.finish(&results, config.deterministic),
        csv: None,
    })
}
