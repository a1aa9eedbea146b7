use cycle_bound_core::biased_tree::accumulate_f_t;
use cycle_bound_core::rng::stream;
use cycle_bound_core::stats::Welford;
use serde::Serialize;

use super::{fan_out, known_constant, resolve_tree};
use crate::error::{LabError, Result};
use crate::formats::format_tree_literal;
use crate::report::{to_csv, Output, ReportBuilder};

#[derive(Debug, Clone, Serialize)]
pub struct EtMcConfig {
    pub tree: String,
    /// Total draws, split evenly over the replicas.
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
    pub mean: f64,
    pub standard_error: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EtMcResults {
    pub tree: String,
    pub value: f64,
    pub standard_error: f64,
    pub samples: u64,
    pub reference: Option<f64>,
    pub sigmas: Option<f64>,
}

pub fn run(config: &EtMcConfig) -> Result<Output> {
    if config.replicas == 0 || config.samples < config.replicas {
        return Err(LabError::Usage("need at least one sample per replica".into()));
    }
    let tree = resolve_tree(&config.tree)?;
    let mut report = ReportBuilder::new("et-mc", config.seed, config);
    let share = config.samples / config.replicas;
    let extra = config.samples % config.replicas;
    let parts = fan_out(config.replicas, |i| {
        let mut acc = Welford::new();
        accumulate_f_t(
            &tree,
            share + u64::from(i < extra),
            &mut stream(config.seed, i),
            &mut acc,
        );
        acc
    });
    let mut total = Welford::new();
    let rows: Vec<ReplicaRow> = parts
        .iter()
        .enumerate()
        .map(|(i, acc)| {
            total.merge(acc);
            ReplicaRow {
                seed: config.seed,
                replica: i as u64,
                samples: acc.count(),
                mean: acc.mean(),
                standard_error: acc.standard_error(),
            }
        })
        .collect();
    let estimate = total.estimate();
    let reference = known_constant(&config.tree);
    let sigmas = reference.map(|r| estimate.sigmas_from(r));
    if let (Some(r), Some(z)) = (reference, sigmas) {
        report.verdict(
            "within 4 standard errors of the exact value",
            z.abs() <= 4.0,
            false,
            format!(
                "{} +- {} vs {r} ({z:.2} sigma)",
                estimate.value, estimate.standard_error
            ),
        );
    }
    let results = EtMcResults {
        tree: format_tree_literal(&tree),
        value: estimate.value,
        standard_error: estimate.standard_error,
        samples: estimate.samples,
        reference,
        sigmas,
    };
    Ok(Output {
        report: report.finish(&results, config.deterministic),
        csv: Some(to_csv(&rows)?),
    })
}
