//! Versioned JSON reports and CSV tables.

use std::path::Path;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{LabError, Result};

pub const SCHEMA: &str = "cycle-bound-lab/report-v1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    /// Gating verdicts decide the exit code: soundness and golden constants.
    /// Statistical hypotheses are reported but do not gate.
    pub gating: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WallClock {
    pub started_unix_seconds: f64,
    pub elapsed_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Versions {
    #[serde(rename = "cycle-bound-core")]
    pub core: &'static str,
    #[serde(rename = "cycle-bound-lab")]
    pub lab: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub seed: u64,
    pub config: Value,
    /// SHA-256 of the compact JSON of `config`.
    pub config_hash: String,
    pub versions: Versions,
    /// Absent in deterministic mode so identical runs give identical bytes.
    pub wall_clock: Option<WallClock>,
    pub passed: bool,
    pub verdicts: Vec<Verdict>,
    pub results: Value,
}

/// Hex SHA-256 of the compact JSON encoding of `config`.
pub fn config_hash<C: Serialize>(config: &C) -> String {
    let bytes = serde_json::to_vec(config).expect("configs serialize");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Collects verdicts and results for one command run.
pub struct ReportBuilder {
    command: String,
    seed: u64,
    config: Value,
    config_hash: String,
    started: SystemTime,
    timer: Instant,
    verdicts: Vec<Verdict>,
}

impl ReportBuilder {
    pub fn new<C: Serialize>(command: &str, seed: u64, config: &C) -> Self {
        Self {
            command: command.to_string(),
            seed,
            config: serde_json::to_value(config).expect("configs serialize"),
            config_hash: config_hash(config),
            started: SystemTime::now(),
            timer: Instant::now(),
            verdicts: Vec::new(),
        }
    }

    pub fn verdict(&mut self, name: &str, passed: bool, gating: bool, detail: impl Into<String>) {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            passed,
            gating,
            detail: detail.into(),
        });
    }

    pub fn finish<R: Serialize>(self, results: &R, deterministic: bool) -> Report {
        let wall_clock = (!deterministic).then(|| WallClock {
            started_unix_seconds: self
                .started
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs_f64())
                .unwrap_or(0.0),
            elapsed_seconds: self.timer.elapsed().as_secs_f64(),
        });
        Report {
            schema: SCHEMA,
            command: self.command,
            seed: self.seed,
            config: self.config,
            config_hash: self.config_hash,
            versions: Versions {
                core: cycle_bound_core::VERSION,
                lab: env!("CARGO_PKG_VERSION"),
            },
            wall_clock,
            passed: self.verdicts.iter().all(|v| v.passed || !v.gating),
            verdicts: self.verdicts,
            results: serde_json::to_value(results).expect("results serialize"),
        }
    }
}

/// A finished run: the JSON report and an optional per-replica CSV table.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub report: Report,
    pub csv: Option<String>,
}

impl Output {
    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Writes `<command>.json` and, when present, `<command>.csv` into `dir`.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| LabError::Io { path, source }
        };
        std::fs::create_dir_all(dir).map_err(io(dir))?;
        let json = dir.join(format!("{}.json", self.report.command));
        std::fs::write(&json, self.json()).map_err(io(&json))?;
        if let Some(csv) = &self.csv {
            let path = dir.join(format!("{}.csv", self.report.command));
            std::fs::write(&path, csv).map_err(io(&path))?;
        }
        Ok(())
    }
}

/// Serializes rows with a header taken from the row type's field names.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| LabError::Usage(format!("csv flush: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}
