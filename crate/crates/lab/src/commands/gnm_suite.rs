use cycle_bound_core::gnm::{cycles_outside_giant, sample_prekernel, GnmParams, PrekernelStats};
use cycle_bound_core::pseudograph::{
    certified_cycle_weight_bound, kernel_with_weights, max_weight_cycle, EXACT_MAX_VERTICES,
};
use cycle_bound_core::rng::stream;
use serde::Serialize;

use super::{fan_out, known_constant, resolve_tree, solver_for};
use crate::error::Result;
use crate::report::{to_csv, Output, ReportBuilder};

/// Relative tolerance on `v` against `8s²/n`.
pub const V_TOLERANCE: f64 = 0.15;
/// Relative tolerance on `r` against `32s³/(3n²)`.
pub const R_TOLERANCE: f64 = 0.20;
/// Fraction of replicas that must meet each statistical hypothesis.
pub const PASS_FRACTION: f64 = 0.9;

#[derive(Debug, Clone, Serialize)]
pub struct GnmSuiteConfig {
    pub n: u64,
    pub s: u64,
    pub replicas: u64,
    pub seed: u64,
    pub tree: String,
    pub k: Option<usize>,
    pub max_nodes: u64,
    pub deterministic: bool,
}

/// `⌈n^0.75⌉`.
pub fn default_s(n: u64) -> u64 {
    (n as f64).powf(0.75).ceil() as u64
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteRow {
    pub seed: u64,
    pub replica: u64,
    pub n: u64,
    pub s: u64,
    #[serde(rename = "M")]
    pub m: u64,
    pub v: u64,
    pub r: u64,
    #[serde(rename = "D3")]
    pub d3: u64,
    pub sum_pairs: u64,
    pub predicted_v: f64,
    pub predicted_r: f64,
    pub v_deviation: f64,
    pub r_deviation: f64,
    pub pairs_below_4r: bool,
    pub doubled_pairs_below_4r: bool,
    pub cycles_outside_giant: usize,
    pub kernel_vertices: usize,
    pub kernel_weight: u64,
    pub gamma_weight: u64,
    pub certified_bound: f64,
    pub cycle_length: u64,
    pub solver: &'static str,
    /// `8 E_T s² / n`, when `E_T` is known.
    pub predicted_cycle: Option<f64>,
    pub violation: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResults {
    pub predicted_v: f64,
    pub predicted_r: f64,
    pub supercritical_warning: Option<String>,
    pub violations: usize,
    pub degenerate_replicas: usize,
    pub heuristic_replicas: usize,
    pub v_within_tolerance: usize,
    pub r_within_tolerance: usize,
    pub pairs_below_4r: usize,
    pub doubled_pairs_below_4r: usize,
    pub mean_cycle_length: f64,
    pub mean_certified_bound: f64,
    pub rows: Vec<SuiteRow>,
}

pub fn run(config: &GnmSuiteConfig) -> Result<Output> {
    let params = GnmParams::supercritical(config.n, config.s)?;
    let tree = resolve_tree(&config.tree)?;
    let k = config.k.unwrap_or(tree.edge_count());
    let et = known_constant(&config.tree);
    let mut report = ReportBuilder::new("gnm-suite", config.seed, config);
    let predicted_v = params.predicted_v().expect("built from s");
    if predicted_v > EXACT_MAX_VERTICES as f64 {
        report.verdict(
            "resource guard",
            true,
            false,
            format!(
                "predicted prekernel of {predicted_v:.0} vertices exceeds {EXACT_MAX_VERTICES}; heuristic solver used"
            ),
        );
    }
    let rows = fan_out(config.replicas, |i| -> Result<SuiteRow> {
        let (g, prekernel) = sample_prekernel(&params, &mut stream(config.seed, i))?;
        let stats = PrekernelStats::of(&params, &prekernel);
        let mut row = SuiteRow {
            seed: config.seed,
            replica: i,
            n: stats.n,
            s: stats.s,
            m: stats.m,
            v: stats.v,
            r: stats.r,
            d3: stats.d3,
            sum_pairs: stats.sum_pairs,
            predicted_v: stats.predicted_v,
            predicted_r: stats.predicted_r,
            v_deviation: stats.v_deviation(),
            r_deviation: stats.r_deviation(),
            pairs_below_4r: stats.pairs_below_4r(),
            doubled_pairs_below_4r: stats.doubled_pairs_below_4r(),
            cycles_outside_giant: cycles_outside_giant(&g),
            kernel_vertices: 0,
            kernel_weight: 0,
            gamma_weight: 0,
            certified_bound: 0.0,
            cycle_length: 0,
            solver: "none",
            predicted_cycle: et.map(|e| 8.0 * e * (config.s as f64).powi(2) / config.n as f64),
            violation: false,
        };
        if stats.degenerate {
            return Ok(row);
        }
        let kernel = kernel_with_weights(&prekernel)?;
        let bound = certified_cycle_weight_bound(&kernel, &tree, k)?;
        let (mode, solver) = solver_for(kernel.graph().vertex_count(), config.max_nodes);
        let cycle = max_weight_cycle(&kernel, mode)?.map_or(0, |c| c.weight);
        row.kernel_vertices = kernel.graph().vertex_count();
        row.kernel_weight = kernel.total_weight();
        row.gamma_weight = bound.gamma_weight;
        row.certified_bound = bound.value;
        row.cycle_length = cycle;
        row.solver = solver;
        row.violation = cycle as f64 > bound.value;
        Ok(row)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let count = |f: &dyn Fn(&SuiteRow) -> bool| rows.iter().filter(|r| f(r)).count();
    let live: Vec<&SuiteRow> = rows.iter().filter(|r| r.solver != "none").collect();
    let need = (PASS_FRACTION * rows.len() as f64).ceil() as usize;
    let results = SuiteResults {
        predicted_v,
        predicted_r: params.predicted_r().expect("built from s"),
        supercritical_warning: params.warning(),
        violations: count(&|r| r.violation),
        degenerate_replicas: rows.len() - live.len(),
        heuristic_replicas: count(&|r| r.solver == "heuristic"),
        v_within_tolerance: count(&|r| r.v_deviation <= V_TOLERANCE),
        r_within_tolerance: count(&|r| r.r_deviation <= R_TOLERANCE),
        pairs_below_4r: count(&|r| r.pairs_below_4r),
        doubled_pairs_below_4r: count(&|r| r.doubled_pairs_below_4r),
        mean_cycle_length: live.iter().map(|r| r.cycle_length as f64).sum::<f64>() / live.len().max(1) as f64,
        mean_certified_bound: live.iter().map(|r| r.certified_bound).sum::<f64>() / live.len().max(1) as f64,
        rows: rows.clone(),
    };
    report.verdict(
        "longest cycle found never exceeds the certified kernel bound",
        results.violations == 0,
        true,
        format!("{} violations over {} replicas", results.violations, rows.len()),
    );
    for (name, hits) in [
        ("v within 15% of 8s^2/n", results.v_within_tolerance),
        ("r within 20% of 32s^3/(3n^2)", results.r_within_tolerance),
        ("sum 2 C(d,2) < 4r", results.doubled_pairs_below_4r),
        ("sum C(d,2) < 4r", results.pairs_below_4r),
    ] {
        report.verdict(
            name,
            hits >= need,
            false,
            format!("{hits} of {} replicas (need {need})", rows.len()),
        );
    }
    Ok(Output {
        report: report.finish(&results, config.deterministic),
        csv: Some(to_csv(&rows)?),
    })
}
