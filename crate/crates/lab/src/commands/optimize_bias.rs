use cycle_bound_core::biased_tree::{e_t_closed_form, optimize_bias, StandardTree};
use cycle_bound_core::rng::stream;
use serde::Serialize;

use super::resolve_tree;
use crate::error::Result;
use crate::formats::format_tree_literal;
use crate::report::{Output, ReportBuilder};

/// Distance allowed between the optimum and a closed-form bias pattern.
pub const PATTERN_TOLERANCE: f64 = 0.005;

#[derive(Debug, Clone, Serialize)]
pub struct OptimizeConfig {
    /// Only the shape is used; biases in a literal are ignored.
    pub tree: String,
    pub samples: u64,
    pub restarts: usize,
    pub seed: u64,
    pub deterministic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OptimizeResults {
    pub tree: String,
    pub biases: Vec<f64>,
    pub search_value: f64,
    pub value: f64,
    pub standard_error: f64,
    pub closed_form_value: Option<f64>,
    pub closed_form_biases: Option<Vec<f64>>,
    /// Largest coordinate difference from the closed-form pattern.
    pub pattern_distance: Option<f64>,
}

pub fn run(config: &OptimizeConfig) -> Result<Output> {
    let shape = resolve_tree(&config.tree)?.shape().clone();
    let mut report = ReportBuilder::new("optimize-bias", config.seed, config);
    let opt = optimize_bias(&shape, config.samples, &mut stream(config.seed, 0), config.restarts)?;
    let standard = StandardTree::from_name(config.tree.trim())
        .map(e_t_closed_form)
        .transpose()?;
    let pattern = standard.map(|cf| cf.tree.biases(cf.b_star));
    let distance = pattern.as_ref().map(|p| {
        p.iter()
            .zip(opt.tree.biases())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    });
    if let Some(d) = distance {
        report.verdict(
            "optimum matches the closed-form bias pattern",
            d <= PATTERN_TOLERANCE,
            false,
            format!("max coordinate distance {d} (tolerance {PATTERN_TOLERANCE})"),
        );
    }
    if let Some(cf) = standard {
        let z = opt.estimate.sigmas_from(cf.value);
        report.verdict(
            "optimum not worse than the closed form",
            z <= 4.0,
            false,
            format!(
                "{} +- {} vs {} ({z:.2} sigma)",
                opt.estimate.value, opt.estimate.standard_error, cf.value
            ),
        );
    }
    let results = OptimizeResults {
        tree: format_tree_literal(&opt.tree),
        biases: opt.tree.biases().to_vec(),
        search_value: opt.search_value,
        value: opt.estimate.value,
        standard_error: opt.estimate.standard_error,
        closed_form_value: standard.map(|cf| cf.value),
        closed_form_biases: pattern,
        pattern_distance: distance,
    };
    Ok(Output {
        report: report.finish(&results, config.deterministic),
        csv: None,
    })
}
