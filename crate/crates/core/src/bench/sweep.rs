//! Over-relaxation sweeps: one run per `theta`, penalty re-derived for each.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{BetaChoice, RunConfigFile};
use super::io::fmt_real;
use super::run::{execute_with_instance, ExitStatus, RunArtifacts};
use crate::error::{Error, Result};

/// Environment variable holding the number of sweep workers.
pub const WORKERS_ENV: &str = "PADMM_WORKERS";

pub const SWEEP_HEADER: &str =
    "theta,beta,exit_code,status,iterations,res_primal,res_dual_y,res_dual_x,delta1,delta2,certificate_pass,checks_failed,message";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub theta: f64,
    pub beta: Option<f64>,
    pub status: ExitStatus,
    pub iterations: usize,
    pub residuals: Option<[f64; 3]>,
    pub delta1: Option<f64>,
    pub delta2: Option<f64>,
    pub certificate_pass: Option<bool>,
    pub checks_failed: usize,
    pub message: String,
}

impl SweepRow {
    fn from_artifacts(theta: f64, a: &RunArtifacts) -> Self {
        let r = &a.report;
        Self {
            theta,
            beta: r.beta,
            status: r.status,
            iterations: r.iterations,
            residuals: r.final_residuals.map(|f| [f.primal, f.dual_y, f.dual_x]),
            delta1: r.constants.as_ref().map(|c| c.delta1),
            delta2: r.constants.as_ref().map(|c| c.delta2),
            certificate_pass: a.certificate.as_ref().map(|c| c.all_pass()),
            checks_failed: a.certificate.as_ref().map_or(0, |c| c.failures.len()),
            message: r.error.clone().or_else(|| r.warnings.first().cloned()).unwrap_or_default(),
        }
    }

    pub fn to_csv_line(&self) -> String {
        let opt = |v: Option<f64>| v.map(fmt_real).unwrap_or_default();
        let res = |i: usize| opt(self.residuals.map(|r| r[i]));
        let status = serde_json::to_value(self.status)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            fmt_real(self.theta),
            opt(self.beta),
            self.status.code(),
            status,
            self.iterations,
            res(0),
            res(1),
            res(2),
            opt(self.delta1),
            opt(self.delta2),
            self.certificate_pass.map(|b| b.to_string()).unwrap_or_default(),
            self.checks_failed,
            // keep the column count fixed
            self.message.replace([',', '\n'], ";"),
        )
    }
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(out, "{}", r.to_csv_line());
    }
    out
}

/// Worker count from [`WORKERS_ENV`], defaulting to the available parallelism.
pub fn workers_from_env() -> Result<usize> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(Error::Config(format!("{WORKERS_ENV} must be a positive integer, got '{v}'"))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

/// Label inserted into per-run output file names.
pub fn theta_suffix(theta: f64) -> String {
    format!("_theta{theta}")
}

/// Runs `base` once per `theta` with `beta = "auto"`, writing per-run
/// artifacts with a `_theta<value>` suffix. Rows are sorted by `theta`; a
/// failing run is recorded in its row and the sweep continues.
pub fn theta_sweep(base: &RunConfigFile, thetas: &[f64], workers: usize) -> Result<Vec<SweepRow>> {
    if thetas.is_empty() {
        return Err(Error::Config("theta list is empty".into()));
    }
    let inst = base.instance.build()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Config(format!("cannot start {workers} workers: {e}")))?;
    let mut sorted = thetas.to_vec();
    sorted.sort_by(f64::total_cmp);
    let rows: Vec<Result<SweepRow>> = pool.install(|| {
        sorted
            .par_iter()
            .map(|&theta| {
                let mut cfg = base.clone();
                cfg.solver.theta = theta;
                cfg.solver.beta = BetaChoice::AUTO;
                cfg.outputs = base.outputs.with_suffix(&theta_suffix(theta));
                let artifacts = execute_with_instance(&cfg, &inst);
                artifacts.write(&cfg.outputs)?;
                Ok(SweepRow::from_artifacts(theta, &artifacts))
            })
            .collect()
    });
    rows.into_iter().collect()
}

/// The least favourable status of the rows.
pub fn sweep_status(rows: &[SweepRow]) -> ExitStatus {
    rows.iter().map(|r| r.status).max().unwrap_or(ExitStatus::Success)
}
