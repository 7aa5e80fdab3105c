//! JSON run configuration.
//!
//! ```json
//! {
//!   "instance": { "generator": { "family": "quad-quad", "n": 5, "p": 5, "l": 5, "seed": 1 } },
//!   "solver": { "theta": 1.5, "beta": "auto", "tau": 0.0, "rho": 1e-6, "max_iters": 5000 },
//!   "start": "consistent-multiplier",
//!   "outputs": { "trace": "trace.csv", "certificate": "cert.json", "report": "report.json" }
//! }
//! ```
//!
//! `instance` may instead be `{"inline": <instance>}` or `{"file": "instance.json"}`;
//! `start` may be `"zeros"`, `"consistent-multiplier"` or `{"x0": .., "y0": .., "lambda0": ..}`.
//! Relative paths are resolved against the working directory.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::generate::GeneratorSpec;
use crate::error::{Error, Result};
use crate::problem::{ProblemInstance, DEFAULT_VALIDATION_SAMPLES, DEFAULT_VALIDATION_TOL};
use crate::solver::{auto_beta, GSpec, SolverConfig, StartPoint};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum InstanceSpec {
    Generator(GeneratorSpec),
    Inline(Box<ProblemInstance>),
    File(PathBuf),
}

impl InstanceSpec {
    pub fn build(&self) -> Result<ProblemInstance> {
        match self {
            InstanceSpec::Generator(g) => g.generate(),
            InstanceSpec::Inline(inst) => {
                inst.check()?;
                Ok((**inst).clone())
            }
            InstanceSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
                ProblemInstance::from_json(&text)
            }
        }
    }
}

/// A fixed penalty or `"auto"`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BetaChoice {
    Fixed(f64),
    Auto(AutoTag),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutoTag {
    Auto,
}

impl BetaChoice {
    pub const AUTO: BetaChoice = BetaChoice::Auto(AutoTag::Auto);

    pub fn is_auto(&self) -> bool {
        matches!(self, BetaChoice::Auto(_))
    }
}

impl Default for BetaChoice {
    fn default() -> Self {
        BetaChoice::AUTO
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverSection {
    pub theta: f64,
    pub beta: BetaChoice,
    /// Factor applied to the smallest admissible penalty when `beta` is `"auto"`.
    pub beta_margin: f64,
    pub tau: f64,
    #[serde(rename = "G")]
    pub g_spec: GSpec,
    pub rho: f64,
    pub max_iters: usize,
    pub certify: bool,
    pub inner_tol: f64,
    pub validation_samples: usize,
    pub validation_tol: f64,
}

impl Default for SolverSection {
    fn default() -> Self {
        let d = SolverConfig::default();
        Self {
            theta: d.theta,
            beta: BetaChoice::AUTO,
            beta_margin: 1.1,
            tau: d.tau,
            g_spec: d.g_spec,
            rho: d.rho,
            max_iters: d.max_iters,
            certify: d.certify,
            inner_tol: d.inner_tol,
            validation_samples: DEFAULT_VALIDATION_SAMPLES,
            validation_tol: DEFAULT_VALIDATION_TOL,
        }
    }
}

impl SolverSection {
    /// Resolves `"auto"` against the instance.
    pub fn resolve(&self, inst: &ProblemInstance) -> Result<SolverConfig> {
        let beta = match self.beta {
            BetaChoice::Fixed(b) => b,
            BetaChoice::Auto(_) => {
                if !(self.beta_margin >= 1.0) {
                    return Err(Error::Config(format!("beta_margin must be at least 1, got {}", self.beta_margin)));
                }
                auto_beta(inst, self.theta, self.tau, self.beta_margin)?
            }
        };
        Ok(SolverConfig {
            theta: self.theta,
            beta,
            tau: self.tau,
            g_spec: self.g_spec.clone(),
            rho: self.rho,
            max_iters: self.max_iters,
            certify: self.certify,
            inner_tol: self.inner_tol,
            validation_samples: self.validation_samples,
            validation_tol: self.validation_tol,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StartPolicy {
    Zeros,
    ConsistentMultiplier,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StartSpec {
    Policy(StartPolicy),
    Explicit(StartPoint),
}

impl Default for StartSpec {
    fn default() -> Self {
        StartSpec::Policy(StartPolicy::Zeros)
    }
}

/// Relative residual above which the consistent-multiplier start is reported
/// as inexact (the run then relies on the general `eta0` program).
pub const CONSISTENT_MULTIPLIER_TOL: f64 = 1e-8;

impl StartSpec {
    /// The start point and, if any, a warning to surface to the user.
    pub fn build(&self, inst: &ProblemInstance) -> Result<(StartPoint, Option<String>)> {
        match self {
            StartSpec::Policy(StartPolicy::Zeros) => Ok((StartPoint::zeros(inst)?, None)),
            StartSpec::Policy(StartPolicy::ConsistentMultiplier) => {
                let (start, resid) = StartPoint::consistent_multiplier(inst)?;
                let warning = (resid > CONSISTENT_MULTIPLIER_TOL).then(|| {
                    format!(
                        "B^T lambda0 = grad g(y0) has no exact solution (relative residual {resid:.3e}); \
                         using the least-squares multiplier"
                    )
                });
                Ok((start, warning))
            }
            StartSpec::Explicit(s) => Ok((s.clone(), None)),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Outputs {
    pub trace: Option<PathBuf>,
    pub certificate: Option<PathBuf>,
    pub report: Option<PathBuf>,
}

impl Outputs {
    /// Same outputs with `suffix` inserted before each file extension.
    pub fn with_suffix(&self, suffix: &str) -> Self {
        let f = |p: &Option<PathBuf>| p.as_ref().map(|p| suffixed(p, suffix));
        Self {
            trace: f(&self.trace),
            certificate: f(&self.certificate),
            report: f(&self.report),
        }
    }
}

fn suffixed(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}{suffix}.{}", ext.to_string_lossy()),
        None => format!("{stem}{suffix}"),
    };
    path.with_file_name(name)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfigFile {
    pub instance: InstanceSpec,
    #[serde(default)]
    pub solver: SolverSection,
    #[serde(default)]
    pub start: StartSpec,
    #[serde(default)]
    pub outputs: Outputs,
}

impl RunConfigFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid config: {e}")))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}
