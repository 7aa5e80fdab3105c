//! Run orchestration, reports and exit codes.

use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::config::{Outputs, RunConfigFile};
use super::io::{self, TraceRow};
use crate::certify::{names, Certificate, CheckResult, Certifier, MERIT_TOL};
use crate::error::{Error, Result};
use crate::params::{DerivedConstants, Eta0Case};
use crate::problem::ProblemInstance;
use crate::solver::{RunOutcome, Solver};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExitStatus {
    /// Converged and every check passed.
    Success,
    /// A certificate check failed.
    CheckFailed,
    /// Stopped at `max_iters` with a passing certificate.
    IterationCap,
    /// Invalid configuration, failed assumption, inadmissible parameters or divergence.
    Configuration,
    /// Inner solver failure or non-finite arithmetic.
    Numerical,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::CheckFailed => 2,
            ExitStatus::IterationCap => 3,
            ExitStatus::Configuration => 4,
            ExitStatus::Numerical => 5,
        }
    }

    pub fn from_error(e: &Error) -> Self {
        if e.is_configuration() {
            ExitStatus::Configuration
        } else {
            ExitStatus::Numerical
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    pub primal: f64,
    pub dual_y: f64,
    pub dual_x: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub checks_run: usize,
    pub checks_passed: usize,
    pub checks_failed: usize,
    /// Smallest `slack + tolerance` over all checks (negative means failure).
    pub worst_margin: Option<f64>,
    pub worst_check: Option<String>,
    pub failed_names: Vec<String>,
}

impl From<&Certificate> for CertificateSummary {
    fn from(c: &Certificate) -> Self {
        let failed = c.failures.len();
        let worst = c.worst();
        Self {
            checks_run: c.evaluated(),
            checks_passed: c.evaluated() - failed,
            checks_failed: failed,
            worst_margin: worst.map(|w| w.1),
            worst_check: worst.map(|w| w.0.to_string()),
            failed_names: c.failed_names().into_iter().map(String::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub exit_code: i32,
    pub status: ExitStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<RunOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub warnings: Vec<String>,
    pub theta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    pub tau: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constants: Option<DerivedConstants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta0_case: Option<Eta0Case>,
    pub iterations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_residuals: Option<Residuals>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateSummary>,
    pub wall_time_s: f64,
}

/// Everything a run produces.
#[derive(Debug, Clone)]
pub struct RunArtifacts {
    pub report: RunReport,
    pub trace: Vec<TraceRow>,
    pub certificate: Option<Certificate>,
}

impl RunArtifacts {
    pub fn status(&self) -> ExitStatus {
        self.report.status
    }

    pub fn write(&self, outputs: &Outputs) -> Result<()> {
        if let Some(p) = &outputs.trace {
            io::write_text(p, &io::trace_csv(&self.trace))?;
        }
        if let (Some(p), Some(c)) = (&outputs.certificate, &self.certificate) {
            io::write_json(p, c)?;
        }
        if let Some(p) = &outputs.report {
            io::write_json(p, &self.report)?;
        }
        Ok(())
    }
}

fn failed_before_start(cfg: &RunConfigFile, e: Error, warnings: Vec<String>, t0: Instant) -> RunArtifacts {
    let status = ExitStatus::from_error(&e);
    RunArtifacts {
        report: RunReport {
            exit_code: status.code(),
            status,
            outcome: None,
            error: Some(e.to_string()),
            warnings,
            theta: cfg.solver.theta,
            beta: match cfg.solver.beta {
                super::config::BetaChoice::Fixed(b) => Some(b),
                _ => None,
            },
            tau: cfg.solver.tau,
            constants: None,
            eta0_case: None,
            iterations: 0,
            final_residuals: None,
            certificate: None,
            wall_time_s: t0.elapsed().as_secs_f64(),
        },
        trace: Vec::new(),
        certificate: None,
    }
}

/// Builds the instance and runs the config; never fails, errors land in the report.
pub fn execute(cfg: &RunConfigFile) -> RunArtifacts {
    match cfg.instance.build() {
        Ok(inst) => execute_with_instance(cfg, &inst),
        Err(e) => failed_before_start(cfg, e, Vec::new(), Instant::now()),
    }
}

/// Runs `cfg` on an already built instance.
pub fn execute_with_instance(cfg: &RunConfigFile, inst: &ProblemInstance) -> RunArtifacts {
    let t0 = Instant::now();
    let mut warnings = Vec::new();
    let prepared = (|| {
        let config = cfg.solver.resolve(inst)?;
        let (start, warning) = cfg.start.build(inst)?;
        warnings.extend(warning);
        Solver::new(inst, config, start)
    })();
    let solver = match prepared {
        Ok(s) => s,
        Err(e) => return failed_before_start(cfg, e, warnings, t0),
    };

    let mut trace = Vec::new();
    let mut last = None;
    let mut certifier = if solver.config().certify {
        match Certifier::new(&solver) {
            Ok(c) => Some(c),
            Err(e) => return failed_before_start(cfg, e, warnings, t0),
        }
    } else {
        None
    };
    let mut cert_error = None;
    let outcome = solver.run_streaming(|rec| {
        trace.push(TraceRow::from(rec));
        last = Some((rec.k, rec.res_primal, rec.res_dual_y, rec.res_dual_x));
        if let Some(c) = certifier.as_mut() {
            if cert_error.is_none() {
                if let Err(e) = c.observe(rec) {
                    cert_error = Some(e);
                }
            }
        }
    });
    let outcome = match (outcome, cert_error) {
        (Ok(o), None) => Ok(o),
        (Err(e), _) | (Ok(_), Some(e)) => Err(e),
    };
    let certificate = certifier.map(Certifier::finish);
    let cert_ok = certificate.as_ref().is_none_or(|c| c.all_pass());

    let (status, error, outcome) = match outcome {
        Ok(o) => {
            let status = match (o, cert_ok) {
                (_, false) => ExitStatus::CheckFailed,
                (RunOutcome::Converged { .. }, true) => ExitStatus::Success,
                (RunOutcome::IterationCap { .. }, true) => ExitStatus::IterationCap,
            };
            (status, None, Some(o))
        }
        Err(e) => (ExitStatus::from_error(&e), Some(e.to_string()), None),
    };
    let c = solver.constants();
    RunArtifacts {
        report: RunReport {
            exit_code: status.code(),
            status,
            outcome,
            error,
            warnings,
            theta: c.theta,
            beta: Some(c.beta),
            tau: c.tau,
            constants: Some(c.clone()),
            eta0_case: Some(solver.seed().case),
            iterations: last.map_or(0, |l| l.0),
            final_residuals: last.filter(|l| l.0 > 0).map(|l| Residuals {
                primal: l.1,
                dual_y: l.2,
                dual_x: l.3,
            }),
            certificate: certificate.as_ref().map(CertificateSummary::from),
            wall_time_s: t0.elapsed().as_secs_f64(),
        },
        trace,
        certificate,
    }
}

/// Loads, runs and writes the artifacts named in the config.
pub fn run_config(path: impl AsRef<Path>) -> Result<RunArtifacts> {
    let cfg = RunConfigFile::load(path)?;
    let artifacts = execute(&cfg);
    artifacts.write(&cfg.outputs)?;
    Ok(artifacts)
}

/// Result of checking a trace file against its configuration.
#[derive(Debug, Clone)]
pub struct TraceCertification {
    pub artifacts: RunArtifacts,
    /// First difference between the file and the re-run, if any.
    pub mismatch: Option<String>,
    pub status: ExitStatus,
}

/// Checks on the scalar columns alone: merit nonincreasing and nonnegative.
pub fn trace_merit_checks(rows: &[TraceRow]) -> Vec<CheckResult> {
    let Some(first) = rows.first() else {
        return Vec::new();
    };
    let tol = MERIT_TOL * (1.0 + first.merit.abs());
    let mut out = Vec::with_capacity(2 * rows.len());
    for w in rows.windows(2) {
        let k = Some(w[1].k);
        out.push(CheckResult::le("trace_merit_nonincreasing", k, w[1].merit, w[0].merit, tol));
        out.push(CheckResult::le(names::MERIT_NONNEGATIVE, k, 0.0, w[1].merit, tol));
    }
    out
}

/// Re-runs `cfg`, requires the trace file to match the re-run exactly, and
/// certifies the run. Writes the certificate and report named in the config.
pub fn certify_trace_file(trace_path: impl AsRef<Path>, cfg: &RunConfigFile) -> Result<TraceCertification> {
    let rows = io::read_trace(trace_path.as_ref())?;
    let mut cfg = cfg.clone();
    cfg.solver.certify = true;
    let mut artifacts = execute(&cfg);
    if artifacts.report.error.is_some() && artifacts.trace.is_empty() {
        let status = artifacts.status();
        return Ok(TraceCertification {
            artifacts,
            mismatch: None,
            status,
        });
    }
    let mismatch = if rows.len() != artifacts.trace.len() {
        Some(format!(
            "trace has {} rows but the configuration produces {}",
            rows.len(),
            artifacts.trace.len()
        ))
    } else {
        rows.iter()
            .zip(&artifacts.trace)
            .find(|(a, b)| a.to_csv_line() != b.to_csv_line())
            .map(|(a, _)| format!("row k = {} differs from the re-run", a.k))
    };
    if let Some(cert) = artifacts.certificate.as_mut() {
        for r in trace_merit_checks(&rows) {
            cert.add(r);
        }
        artifacts.report.certificate = Some(CertificateSummary::from(&*cert));
    }
    let cert_ok = artifacts.certificate.as_ref().is_none_or(|c| c.all_pass());
    let status = if mismatch.is_some() || !cert_ok {
        ExitStatus::CheckFailed
    } else {
        artifacts.status()
    };
    artifacts.report.status = status;
    artifacts.report.exit_code = status.code();
    let outputs = Outputs {
        trace: None,
        ..cfg.outputs.clone()
    };
    artifacts.write(&outputs)?;
    Ok(TraceCertification {
        artifacts,
        mismatch,
        status,
    })
}
