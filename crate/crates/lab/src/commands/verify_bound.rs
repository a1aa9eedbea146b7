use std::path::PathBuf;

use cycle_bound_core::gnm::{degree_hypotheses_check, sample_truncated_multinomial, DEFAULT_MULTINOMIAL_ATTEMPTS};
use cycle_bound_core::kernel_config::{
    random_cubic_graph, sample_uniform_prekernel, validate_degree_sequence, DEFAULT_MAX_ATTEMPTS,
};
use cycle_bound_core::pseudograph::{
    certified_cycle_weight_bound, max_weight_cycle, subdivide_uniformly, WeightedPseudograph,
};
use cycle_bound_core::rng::stream;
use serde::Serialize;

use super::{fan_out, known_constant, resolve_tree, solver_for};
use crate::error::{LabError, Result};
use crate::formats::{format_degree_sequence, read_graph};
use crate::report::{to_csv, Output, ReportBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphSource {
    /// A weighted graph file; one instance regardless of `replicas`.
    File(PathBuf),
    /// A uniform simple cubic graph on `n` vertices, subdivided uniformly.
    RandomCubic(usize),
    /// A uniform simple prekernel with this degree sequence; its kernel and
    /// weights come from the degree-2 vertices.
    Kernel(Vec<u32>),
    /// As `Kernel`, with the degree sequence drawn from `Multi(v, t) | ≥ 2`
    /// per replica.
    KernelMultinomial { v: u64, t: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    pub source: GraphSource,
    pub tree: String,
    /// Bad-set radius; defaults to the tree's edge count.
    pub k: Option<usize>,
    pub replicas: u64,
    pub seed: u64,
    /// `N = weight_factor * m` for subdivided cubic graphs.
    pub weight_factor: u64,
    pub max_nodes: u64,
    pub deterministic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceRow {
    pub seed: u64,
    pub replica: u64,
    pub vertices: usize,
    pub edges: usize,
    pub total_weight: u64,
    pub certified_bound: f64,
    pub gamma_weight: u64,
    pub embedding_sum: f64,
    pub degenerate: bool,
    pub cycle_weight: u64,
    pub solver: &'static str,
    pub optimal: bool,
    pub margin: f64,
    pub bound_ratio: f64,
    pub violation: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyResults {
    pub instances: usize,
    pub exact_instances: usize,
    pub violations: usize,
    pub mean_bound_ratio: f64,
    /// `E_T` of the tree, when known exactly.
    pub tree_constant: Option<f64>,
    pub degree_sequences: Vec<String>,
    pub rows: Vec<InstanceRow>,
}

fn instance(config: &VerifyConfig, replica: u64) -> Result<(WeightedPseudograph, Option<Vec<u32>>)> {
    let mut rng = stream(config.seed, replica);
    match &config.source {
        GraphSource::File(path) => Ok((read_graph(path)?, None)),
        GraphSource::RandomCubic(n) => {
            let g = random_cubic_graph(*n, &mut rng, DEFAULT_MAX_ATTEMPTS)?;
            let total = config.weight_factor * g.edge_count() as u64;
            Ok((subdivide_uniformly(&g, total, &mut rng)?, None))
        }
        GraphSource::Kernel(d) => {
            let d = validate_degree_sequence(d)?;
            let s = sample_uniform_prekernel(&d, &mut rng, DEFAULT_MAX_ATTEMPTS)?;
            Ok((s.realization.kernel, None))
        }
        GraphSource::KernelMultinomial { v, t } => {
            let raw = sample_truncated_multinomial(*v, *t, &mut rng, DEFAULT_MULTINOMIAL_ATTEMPTS)?;
            let d = validate_degree_sequence(&raw)?;
            let s = sample_uniform_prekernel(&d, &mut rng, DEFAULT_MAX_ATTEMPTS)?;
            Ok((s.realization.kernel, Some(raw)))
        }
    }
}

pub fn run(config: &VerifyConfig) -> Result<Output> {
    let tree = resolve_tree(&config.tree)?;
    let k = config.k.unwrap_or(tree.edge_count());
    if let GraphSource::KernelMultinomial { v, t } = config.source {
        if t < 2 * v || (t - 2 * v) % 2 == 1 {
            return Err(LabError::Usage(format!(
                "t - 2v must be even and nonnegative (v = {v}, t = {t})"
            )));
        }
    }
    let replicas = match config.source {
        GraphSource::File(_) => 1,
        _ => config.replicas,
    };
    let mut report = ReportBuilder::new("verify-bound", config.seed, config);
    let outcomes = fan_out(replicas, |i| -> Result<(InstanceRow, Option<Vec<u32>>)> {
        let (g, d) = instance(config, i)?;
        let bound = certified_cycle_weight_bound(&g, &tree, k)?;
        let (mode, solver) = solver_for(g.graph().vertex_count(), config.max_nodes);
        let cycle = max_weight_cycle(&g, mode)?;
        let (weight, optimal) = cycle.map_or((0, true), |c| (c.weight, c.optimal));
        let total = g.total_weight();
        Ok((
            InstanceRow {
                seed: config.seed,
                replica: i,
                vertices: g.graph().vertex_count(),
                edges: g.graph().edge_count(),
                total_weight: total,
                certified_bound: bound.value,
                gamma_weight: bound.gamma_weight,
                embedding_sum: bound.embedding_sum,
                degenerate: bound.degenerate,
                cycle_weight: weight,
                solver,
                optimal,
                margin: bound.value - weight as f64,
                bound_ratio: bound.value / total as f64,
                // any cycle found above the bound refutes it, exact or not
                violation: weight as f64 > bound.value,
            },
            d,
        ))
    });
    let mut rows = Vec::new();
    let mut sequences = Vec::new();
    for o in outcomes {
        let (row, d) = o?;
        if let Some(d) = d {
            let h = degree_hypotheses_check(&d);
            report.verdict(
                &format!("replica {} degree sequence: sum C(d,2) < 4r", row.replica),
                h.pairs_below_4r,
                false,
                format!("v = {}, r = {}, D3 = {}, sum_pairs = {}", h.v, h.r, h.d3, h.sum_pairs),
            );
            sequences.push(format_degree_sequence(&d));
        }
        rows.push(row);
    }
    let violations = rows.iter().filter(|r| r.violation).count();
    let exact = rows.iter().filter(|r| r.optimal).count();
    report.verdict(
        "certified bound is never exceeded",
        violations == 0,
        true,
        format!(
            "{violations} violations over {} instances ({exact} solved exactly)",
            rows.len()
        ),
    );
    let results = VerifyResults {
        instances: rows.len(),
        exact_instances: exact,
        violations,
        mean_bound_ratio: rows.iter().map(|r| r.bound_ratio).sum::<f64>() / rows.len().max(1) as f64,
        tree_constant: known_constant(&config.tree),
        degree_sequences: sequences,
        rows,
    };
    Ok(Output {
        report: report.finish(&results, config.deterministic),
        csv: Some(to_csv(&results.rows)?),
    })
}
