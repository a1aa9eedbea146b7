use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cycle_bound_lab::commands::{
    composition_stats, constants, et_mc, gnm_suite, optimize_bias, verify_bound, DEFAULT_MAX_NODES,
};
use cycle_bound_lab::formats::parse_degree_sequence;
use cycle_bound_lab::report::Output;
use cycle_bound_lab::{LabError, Result};

#[derive(Parser)]
#[command(
    name = "cycle-bound-lab",
    version,
    about = "Circumference-bound constants and simulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Master seed; replica i uses stream (seed, i).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    replicas: Option<u64>,
    #[arg(long, global = true)]
    samples: Option<u64>,
    /// Directory for <command>.json and <command>.csv; JSON goes to stdout
    /// when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Leave the wall-clock block out of the report.
    #[arg(long, global = true)]
    deterministic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form E_T for T5, T7, T9 with a Monte Carlo cross-check.
    Constants,
    /// Monte Carlo estimate of E_T.
    EtMc {
        /// star, T5, T7, T9, a `tree k=...` literal, or @file.
        #[arg(long, default_value = "T9")]
        tree: String,
    },
    /// Numerical bias optimisation for a tree shape.
    OptimizeBias {
        #[arg(long, default_value = "T5")]
        tree: String,
        #[arg(long, default_value_t = 2)]
        restarts: usize,
    },
    /// Certified cycle-weight bound against the heaviest cycle found.
    VerifyBound {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "T9")]
        tree: String,
        /// Bad-set radius; defaults to the tree's edge count.
        #[arg(long)]
        k: Option<usize>,
        /// N = factor * m for subdivided cubic graphs.
        #[arg(long, default_value_t = 10)]
        weight_factor: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: u64,
    },
    /// Prekernel statistics and cycle bounds for G(n, n/2 + s).
    GnmSuite {
        #[arg(long)]
        n: u64,
        /// Defaults to ceil(n^0.75).
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, default_value = "T9")]
        tree: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: u64,
    },
    /// Uniform composition laws: exact limit scan and sampled tails.
    CompositionStats {
        /// N, the total.
        #[arg(long)]
        total: u64,
        /// m, the number of parts.
        #[arg(long)]
        parts: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Weighted graph file (`p n m` / `e u v [w]`).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Uniform simple cubic graph on N vertices.
    #[arg(long, value_name = "N")]
    random_cubic: Option<usize>,
    /// Degree sequence of the prekernel, e.g. 3x8,4x2,2x6.
    #[arg(long, value_name = "D")]
    kernel: Option<String>,
    /// Degree sequence drawn from Multi(v, t) | >= 2, given as V,T.
    #[arg(long, value_name = "V,T")]
    kernel_multinomial: Option<String>,
}

impl Source {
    fn resolve(self) -> Result<verify_bound::GraphSource> {
        use verify_bound::GraphSource;
        if let Some(path) = self.graph {
            return Ok(GraphSource::File(path));
        }
        if let Some(n) = self.random_cubic {
            return Ok(GraphSource::RandomCubic(n));
        }
        if let Some(d) = self.kernel {
            return Ok(GraphSource::Kernel(parse_degree_sequence(&d)?));
        }
        let text = self.kernel_multinomial.expect("clap requires one source");
        let parsed = text
            .split_once(',')
            .and_then(|(v, t)| Some((v.trim().parse().ok()?, t.trim().parse().ok()?)));
        let (v, t) = parsed.ok_or_else(|| LabError::Usage(format!("expected V,T, got `{text}`")))?;
        Ok(GraphSource::KernelMultinomial { v, t })
    }
}

fn run(cli: Cli) -> Result<Output> {
    let c = cli.common;
    match cli.command {
        Command::Constants => constants::run(&constants::ConstantsConfig {
            samples: c.samples.unwrap_or(1_000_000),
            seed: c.seed,
            deterministic: c.deterministic,
        }),
        Command::EtMc { tree } => et_mc::run(&et_mc::EtMcConfig {
            tree,
            samples: c.samples.unwrap_or(1_000_000),
            replicas: c.replicas.unwrap_or(8),
            seed: c.seed,
            deterministic: c.deterministic,
        }),
        Command::OptimizeBias { tree, restarts } => optimize_bias::run(&optimize_bias::OptimizeConfig {
            tree,
            samples: c.samples.unwrap_or(200_000),
            restarts,
            seed: c.seed,
            deterministic: c.deterministic,
        }),
        Command::VerifyBound {
            source,
            tree,
            k,
            weight_factor,
            max_nodes,
        } => verify_bound::run(&verify_bound::VerifyConfig {
            source: source.resolve()?,
            tree,
            k,
            replicas: c.replicas.unwrap_or(100),
            seed: c.seed,
            weight_factor,
            max_nodes,
            deterministic: c.deterministic,
        }),
        Command::GnmSuite {
            n,
            s,
            tree,
            k,
            max_nodes,
        } => gnm_suite::run(&gnm_suite::GnmSuiteConfig {
            n,
            s: s.unwrap_or_else(|| gnm_suite::default_s(n)),
            replicas: c.replicas.unwrap_or(20),
            seed: c.seed,
            tree,
            k,
            max_nodes,
            deterministic: c.deterministic,
        }),
        Command::CompositionStats { total, parts } => composition_stats::run(&composition_stats::CompositionConfig {
            total,
            parts,
            samples: c.samples.unwrap_or(100_000),
            replicas: c.replicas.unwrap_or(8),
            seed: c.seed,
            deterministic: c.deterministic,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.common.out.clone();
    let output = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match out {
        Some(dir) => {
            if let Err(e) = output.write_to(&dir) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            for v in &output.report.verdicts {
                let status = if v.passed { "PASS" } else { "FAIL" };
                let gate = if v.gating { "" } else { " (informational)" };
                println!("{status} {}{gate}: {}", v.name, v.detail);
            }
        }
        None => print!("{}", output.json()),
    }
    if output.report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
