//! The proximal ADMM iteration:
//!
//! 1. `x_k` minimizes `L_beta(x, y_{k-1}, lambda_{k-1}) + 1/2 |x - x_{k-1}|_G^2`;
//! 2. `y_k` minimizes `L_beta(x_k, y, lambda_{k-1}) + tau/2 |y - y_{k-1}|^2`;
//! 3. `lambda_k = lambda_{k-1} - theta beta (A x_k + B y_k - b)`.
//!
//! Stationarity is reported at the auxiliary multiplier
//! `lambda_hat_k = lambda_{k-1} - beta (A x_k + B y_{k-1} - b)`.

use nalgebra::Cholesky;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, symmetric_extremes, Matrix, Vector};
use crate::params::{self, DerivedConstants, Eta0Solution};
use crate::problem::{
    aug_lagrangian, validate_assumptions, ProblemInstance, DEFAULT_VALIDATION_SAMPLES,
    DEFAULT_VALIDATION_TOL,
};

/// Proximal metric `G` of the x-subproblem.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GSpec {
    #[default]
    Zero,
    Explicit {
        #[serde(with = "linalg::serde_matrix")]
        matrix: Matrix,
    },
    /// `G = alpha I - beta A^T A`, which turns the x-subproblem into a prox
    /// step of `f`. `alpha` defaults to `1.01 beta lambda_max(A^T A)`.
    Linearized {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<f64>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SolverConfig {
    pub theta: f64,
    pub beta: f64,
    pub tau: f64,
    #[serde(rename = "G")]
    pub g_spec: GSpec,
    /// Stop once all three residuals are at most `rho`.
    pub rho: f64,
    pub max_iters: usize,
    pub certify: bool,
    /// Relative gradient tolerance of the y-subproblem solver.
    pub inner_tol: f64,
    pub validation_samples: usize,
    pub validation_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            theta: 1.0,
            beta: 1.0,
            tau: 0.0,
            g_spec: GSpec::Zero,
            rho: 1e-6,
            max_iters: 10_000,
            certify: true,
            inner_tol: 1e-12,
            validation_samples: DEFAULT_VALIDATION_SAMPLES,
            validation_tol: DEFAULT_VALIDATION_TOL,
        }
    }
}

/// `(x0, y0, lambda0)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StartPoint {
    #[serde(with = "linalg::serde_vector")]
    pub x0: Vector,
    #[serde(with = "linalg::serde_vector")]
    pub y0: Vector,
    #[serde(rename = "lambda0", with = "linalg::serde_vector")]
    pub lambda0: Vector,
}

impl StartPoint {
    pub fn new(x0: Vector, y0: Vector, lambda0: Vector) -> Self {
        Self { x0, y0, lambda0 }
    }

    /// `y0 = 0`, `lambda0 = 0`, and `x0 = 0` moved into `dom f` by the prox
    /// when the origin is not in it.
    pub fn zeros(inst: &ProblemInstance) -> Result<Self> {
        let origin = Vector::zeros(inst.n());
        let x0 = if inst.f.value(&origin).is_finite() {
            origin
        } else {
            inst.f.scaled_prox(&origin, 1.0)?
        };
        Ok(Self::new(x0, Vector::zeros(inst.p()), Vector::zeros(inst.l())))
    }

    /// Like [`StartPoint::zeros`] but with `lambda0` the minimum-norm least
    /// squares solution of `B^T lambda0 = grad g(y0)`. Returns the start and
    /// the relative residual of that system.
    pub fn consistent_multiplier(inst: &ProblemInstance) -> Result<(Self, f64)> {
        let mut start = Self::zeros(inst)?;
        let grad = inst.g.gradient(&start.y0);
        let svd = linalg::reduced_svd(&inst.b_mat);
        // B = U S V^T, so the min-norm solution of B^T l = g is U S^-1 V^T g.
        let coeffs = (svd.right.transpose() * &grad).component_div(&svd.values);
        let lambda0 = &svd.left * coeffs;
        let resid = (inst.b_mat.transpose() * &lambda0 - &grad).norm() / grad.norm().max(1.0);
        start.lambda0 = lambda0;
        Ok((start, resid))
    }

    fn check(&self, inst: &ProblemInstance) -> Result<()> {
        if self.x0.len() != inst.n() {
            return Err(Error::dim("x0", inst.n(), self.x0.len()));
        }
        if self.y0.len() != inst.p() {
            return Err(Error::dim("y0", inst.p(), self.y0.len()));
        }
        if self.lambda0.len() != inst.l() {
            return Err(Error::dim("lambda0", inst.l(), self.lambda0.len()));
        }
        Ok(())
    }
}

/// Everything recorded about one iteration. `k = 0` holds the start point,
/// with `dy` and `dlambda` set from the `eta0` seed.
#[derive(Debug, Clone, PartialEq)]
pub struct IterateRecord {
    pub k: usize,
    pub x: Vector,
    pub y: Vector,
    pub lambda: Vector,
    pub lambda_hat: Vector,
    pub dx: Vector,
    pub dy: Vector,
    pub dlambda: Vector,
    /// `B^T dlambda`.
    pub bt_dlambda: Vector,
    /// `grad g(y)`.
    pub grad_g: Vector,
    pub l_beta: f64,
    /// Magnitude of the summands of `l_beta`.
    pub l_beta_magnitude: f64,
    pub delta_k: f64,
    pub eta_k: f64,
    /// `|A x + B y - b|`.
    pub res_primal: f64,
    /// `|grad g(y) - B^T lambda_hat|`.
    pub res_dual_y: f64,
    /// `|G dx|`.
    pub res_dual_x: f64,
    /// `|dx|_G^2`.
    pub dx_g_sq: f64,
    /// Gradient norm of the y-subproblem objective at the returned `y`.
    pub inner_residual: f64,
}

impl IterateRecord {
    pub fn merit(&self) -> f64 {
        self.delta_k + self.eta_k
    }

    pub fn max_residual(&self) -> f64 {
        self.res_primal.max(self.res_dual_y).max(self.res_dual_x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum RunOutcome {
    Converged { iterations: usize },
    IterationCap { iterations: usize },
}

impl RunOutcome {
    pub fn iterations(&self) -> usize {
        match self {
            RunOutcome::Converged { iterations } | RunOutcome::IterationCap { iterations } => {
                *iterations
            }
        }
    }

    pub fn converged(&self) -> bool {
        matches!(self, RunOutcome::Converged { .. })
    }
}

/// Resolved `G` as a dense symmetric matrix.
#[derive(Debug, Clone)]
pub struct ProximalMetric {
    g: Option<Matrix>,
}

impl ProximalMetric {
    pub fn zero() -> Self {
        Self { g: None }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        match &self.g {
            Some(g) => g * v,
            None => Vector::zeros(v.len()),
        }
    }

    pub fn norm_sq(&self, v: &Vector) -> f64 {
        match &self.g {
            Some(g) => v.dot(&(g * v)),
            None => 0.0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.g.is_none()
    }

    pub fn matrix(&self, n: usize) -> Matrix {
        self.g.clone().unwrap_or_else(|| Matrix::zeros(n, n))
    }
}

enum XSolver {
    /// Quadratic `f`: `x = -(P + G + beta A^T A)^{-1} (d + q)`.
    Linear { factor: Cholesky<f64, nalgebra::Dyn>, q: Vector },
    /// `G + beta A^T A = alpha I`: `x = prox_{f, alpha}(-d / alpha)`.
    Prox { alpha: f64 },
}

enum YSolver {
    /// Quadratic `g`: one solve with `Q + beta B^T B + tau I`.
    Linear { factor: Cholesky<f64, nalgebra::Dyn> },
    /// Damped Newton on the strongly convex subproblem.
    Newton { base: Matrix },
}

const NEWTON_MAX_ITERS: usize = 100;
const DIVERGENCE_FACTOR: f64 = 1e12;

/// A prepared run: validated data, derived constants and factorized
/// subproblem operators.
pub struct Solver<'a> {
    inst: &'a ProblemInstance,
    config: SolverConfig,
    start: StartPoint,
    constants: DerivedConstants,
    seed: Eta0Solution,
    metric: ProximalMetric,
    x_solver: XSolver,
    y_solver: YSolver,
    norm_b: f64,
}

impl<'a> Solver<'a> {
    pub fn new(inst: &'a ProblemInstance, config: SolverConfig, start: StartPoint) -> Result<Self> {
        inst.check()?;
        start.check(inst)?;
        if !(config.rho > 0.0) {
            return Err(Error::Config(format!("rho must be positive, got {}", config.rho)));
        }
        if !(config.inner_tol > 0.0) {
            return Err(Error::Config("inner_tol must be positive".into()));
        }
        if config.validation_samples > 0 {
            let report = validate_assumptions(inst, config.validation_samples, config.validation_tol);
            if let Some(bad) = report.failures().first() {
                return Err(Error::Assumption {
                    assumption: match bad.name.as_str() {
                        "A0" => "A0",
                        "A1" => "A1",
                        "A2" => "A2",
                        "A3" => "A3",
                        "A4" => "A4",
                        _ => "gradient",
                    },
                    detail: format!("{} (worst = {:.3e})", bad.detail, bad.worst),
                });
            }
        }
        let (constants, seed) = DerivedConstants::compute(
            inst,
            config.theta,
            config.beta,
            config.tau,
            (&start.x0, &start.y0, &start.lambda0),
        )?;
        let beta = config.beta;
        let n = inst.n();
        let ata = inst.a.transpose() * &inst.a;

        let g_matrix = match &config.g_spec {
            GSpec::Zero => None,
            GSpec::Explicit { matrix } => {
                if matrix.shape() != (n, n) {
                    return Err(Error::dim("explicit G", n, matrix.nrows()));
                }
                if !linalg::is_symmetric(matrix, 1e-12) {
                    return Err(Error::Config("G must be symmetric".into()));
                }
                Some(matrix.clone())
            }
            GSpec::Linearized { alpha } => {
                let (_, lmax) = symmetric_extremes(&ata);
                let alpha = match alpha {
                    Some(a) => *a,
                    None if lmax > 0.0 => 1.01 * beta * lmax,
                    None => beta,
                };
                if !(alpha > 0.0 && alpha.is_finite()) {
                    return Err(Error::Config(format!("linearization alpha must be positive, got {alpha}")));
                }
                Some(Matrix::identity(n, n) * alpha - &ata * beta)
            }
        };
        if let Some(g) = &g_matrix {
            let (lo, hi) = symmetric_extremes(g);
            if lo < -1e-10 * hi.abs().max(1.0) {
                return Err(Error::Config(format!(
                    "G must be positive semidefinite (lambda_min = {lo:.3e})"
                )));
            }
        }
        let metric = ProximalMetric { g: g_matrix };

        let x_metric = metric.matrix(n) + &ata * beta;
        let x_solver = if let Some((p, q)) = inst.f.as_quadratic() {
            let factor = (p + &x_metric).cholesky().ok_or_else(|| {
                Error::Config("x-subproblem is not strongly convex: P + G + beta A^T A is singular".into())
            })?;
            XSolver::Linear { factor, q: q.clone() }
        } else {
            let alpha = x_metric.trace() / n as f64;
            let off = (&x_metric - Matrix::identity(n, n) * alpha).amax();
            if !(alpha > 0.0) || off > 1e-12 * alpha {
                return Err(Error::Config(format!(
                    "f family '{}' has only a scaled prox: use G = linearized, or data with G + beta A^T A a multiple of I",
                    inst.f.family()
                )));
            }
            XSolver::Prox { alpha }
        };

        let btb = inst.b_mat.transpose() * &inst.b_mat;
        let p = inst.p();
        let base = &btb * beta + Matrix::identity(p, p) * config.tau;
        let y_solver = match &inst.g.term {
            crate::problem::SmoothTerm::Quadratic { q, .. } => {
                let factor = (q + &base).cholesky().ok_or_else(|| {
                    Error::Config("y-subproblem is not strongly convex: Q + beta B^T B + tau I is not positive definite".into())
                })?;
                YSolver::Linear { factor }
            }
            _ => YSolver::Newton { base },
        };

        Ok(Self {
            inst,
            norm_b: constants.spectral.norm_btb.sqrt(),
            config,
            start,
            constants,
            seed,
            metric,
            x_solver,
            y_solver,
        })
    }

    pub fn instance(&self) -> &ProblemInstance {
        self.inst
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    pub fn constants(&self) -> &DerivedConstants {
        &self.constants
    }

    pub fn seed(&self) -> &Eta0Solution {
        &self.seed
    }

    pub fn metric(&self) -> &ProximalMetric {
        &self.metric
    }

    pub fn start(&self) -> &StartPoint {
        &self.start
    }

    /// Prox weight under which `x_k` is a fixed point certifying the
    /// subgradient inclusion.
    pub fn stationarity_weight(&self) -> f64 {
        match self.x_solver {
            XSolver::Prox { alpha } => alpha,
            XSolver::Linear { .. } => 1.0,
        }
    }

    /// Global minimizer of the x-subproblem.
    pub fn x_step(&self, x_prev: &Vector, y_prev: &Vector, lambda_prev: &Vector) -> Result<Vector> {
        let inst = self.inst;
        let beta = self.config.beta;
        let shifted = &inst.b_mat * y_prev - &inst.b;
        // linear coefficient d of the subproblem f(x) + <d, x> + 1/2 x^T (G + beta A^T A) x
        let d = inst.a.transpose() * (shifted * beta - lambda_prev) - self.metric.apply(x_prev);
        match &self.x_solver {
            XSolver::Linear { factor, q } => Ok(factor.solve(&(-(d + q)))),
            XSolver::Prox { alpha } => inst.f.scaled_prox(&(-d / *alpha), *alpha),
        }
    }

    fn y_objective_gradient(&self, y: &Vector, fixed: &Vector, lambda_prev: &Vector, y_prev: &Vector) -> Vector {
        let inst = self.inst;
        let r = fixed + &inst.b_mat * y;
        inst.g.gradient(y) - inst.b_mat.transpose() * (lambda_prev - r * self.config.beta)
            + (y - y_prev) * self.config.tau
    }

    fn y_objective_value(&self, y: &Vector, fixed: &Vector, lambda_prev: &Vector, y_prev: &Vector) -> f64 {
        let inst = self.inst;
        let r = fixed + &inst.b_mat * y;
        inst.g.value(y) - lambda_prev.dot(&r)
            + 0.5 * self.config.beta * r.norm_squared()
            + 0.5 * self.config.tau * (y - y_prev).norm_squared()
    }

    /// Rounding floor for the y-subproblem gradient at `y`.
    fn y_gradient_floor(&self, y: &Vector, fixed: &Vector, lambda_prev: &Vector, y_prev: &Vector) -> f64 {
        let nb = self.norm_b;
        let mag = self.inst.g.gradient(y).norm()
            + nb * lambda_prev.norm()
            + self.config.beta * nb * (fixed.norm() + nb * y.norm())
            + self.config.tau * (y.norm() + y_prev.norm());
        64.0 * f64::EPSILON * mag
    }

    /// Unique minimizer of the y-subproblem and the gradient norm reached.
    pub fn y_step(&self, x_next: &Vector, y_prev: &Vector, lambda_prev: &Vector) -> Result<(Vector, f64)> {
        let inst = self.inst;
        let beta = self.config.beta;
        let fixed = &inst.a * x_next - &inst.b;
        match &self.y_solver {
            YSolver::Linear { factor } => {
                let c = match &inst.g.term {
                    crate::problem::SmoothTerm::Quadratic { c, .. } => c,
                    _ => unreachable!("linear y-solver is only built for quadratic g"),
                };
                let rhs = inst.b_mat.transpose() * (lambda_prev - &fixed * beta) - c
                    + y_prev * self.config.tau;
                let y = factor.solve(&rhs);
                let res = self.y_objective_gradient(&y, &fixed, lambda_prev, y_prev).norm();
                Ok((y, res))
            }
            YSolver::Newton { base } => {
                let mut y = y_prev.clone();
                let mut grad = self.y_objective_gradient(&y, &fixed, lambda_prev, y_prev);
                let target = self.config.inner_tol * grad.norm().max(1.0);
                let mut value = self.y_objective_value(&y, &fixed, lambda_prev, y_prev);
                let mut iters = 0;
                loop {
                    let gnorm = grad.norm();
                    let floor = self.y_gradient_floor(&y, &fixed, lambda_prev, y_prev);
                    if gnorm <= target + floor {
                        return Ok((y, gnorm));
                    }
                    if iters == NEWTON_MAX_ITERS {
                        return Err(Error::InnerSolver {
                            grad_norm: gnorm,
                            target: target + floor,
                            iters,
                        });
                    }
                    iters += 1;
                    let hess = inst.g.hessian(&y) + base;
                    let step = match hess.cholesky() {
                        Some(ch) => ch.solve(&(-&grad)),
                        None => -&grad,
                    };
                    let slope = grad.dot(&step);
                    // Armijo on the value, or a decrease of the gradient norm once value
                    // differences drown in rounding
                    let mut t = 1.0;
                    let mut accepted = None;
                    while t > 1e-12 {
                        let trial = &y + &step * t;
                        let tv = self.y_objective_value(&trial, &fixed, lambda_prev, y_prev);
                        let tg = self.y_objective_gradient(&trial, &fixed, lambda_prev, y_prev);
                        if tv <= value + 1e-4 * t * slope || tg.norm() <= (1.0 - 1e-4 * t) * gnorm {
                            accepted = Some((trial, tv, tg));
                            break;
                        }
                        t *= 0.5;
                    }
                    let Some((trial, tv, tg)) = accepted else {
                        return Err(Error::InnerSolver {
                            grad_norm: gnorm,
                            target: target + floor,
                            iters,
                        });
                    };
                    y = trial;
                    value = tv;
                    grad = tg;
                }
            }
        }
    }

    /// The `k = 0` record built from the start point and the `eta0` seed.
    pub fn initial_record(&self) -> Result<IterateRecord> {
        let inst = self.inst;
        let s = &self.start;
        let beta = self.config.beta;
        let parts = crate::problem::aug_lagrangian_parts(inst, beta, &s.x0, &s.y0, &s.lambda0)?;
        // any dlambda with B^T dlambda = w0 realizes the seed; take the min-norm one
        let svd = linalg::reduced_svd(&inst.b_mat);
        let coeffs = (svd.right.transpose() * &self.seed.w0).component_div(&svd.values);
        let dlambda0 = &svd.left * coeffs;
        Ok(IterateRecord {
            k: 0,
            x: s.x0.clone(),
            y: s.y0.clone(),
            lambda: s.lambda0.clone(),
            lambda_hat: s.lambda0.clone(),
            dx: Vector::zeros(inst.n()),
            dy: self.seed.dy0.clone(),
            dlambda: dlambda0,
            bt_dlambda: self.seed.w0.clone(),
            grad_g: inst.g.gradient(&s.y0),
            l_beta: parts.value,
            l_beta_magnitude: parts.magnitude,
            delta_k: self.constants.delta0,
            eta_k: self.constants.eta0,
            res_primal: inst.residual(&s.x0, &s.y0).norm(),
            res_dual_y: (inst.g.gradient(&s.y0) - inst.b_mat.transpose() * &s.lambda0).norm(),
            res_dual_x: 0.0,
            dx_g_sq: 0.0,
            inner_residual: 0.0,
        })
    }

    /// One full iteration from `prev`.
    pub fn step(&self, prev: &IterateRecord) -> Result<IterateRecord> {
        let inst = self.inst;
        let (theta, beta) = (self.config.theta, self.config.beta);
        let c = &self.constants;

        let x = self.x_step(&prev.x, &prev.y, &prev.lambda)?;
        let lambda_hat = lambda_hat(&prev.lambda, beta, &x, &prev.y, inst);
        let (y, inner_residual) = self.y_step(&x, &prev.y, &prev.lambda)?;
        let r = inst.residual(&x, &y);
        let lambda = lambda_step(&prev.lambda, theta, beta, &r);

        let dx = &x - &prev.x;
        let dy = &y - &prev.y;
        let dlambda = &lambda - &prev.lambda;
        let bt_dlambda = inst.b_mat.transpose() * &dlambda;
        let grad_g = inst.g.gradient(&y);
        let parts = crate::problem::aug_lagrangian_parts(inst, beta, &x, &y, &lambda)?;
        let eta_k = 0.5 * c.c1 * bt_dlambda.norm_squared() + c.kappa * dy.norm_squared();
        let res_dual_y = (&grad_g - inst.b_mat.transpose() * &lambda_hat).norm();
        let g_dx = self.metric.apply(&dx);
        let dx_g_sq = dx.dot(&g_dx);

        let record = IterateRecord {
            k: prev.k + 1,
            res_primal: r.norm(),
            res_dual_y,
            res_dual_x: g_dx.norm(),
            dx_g_sq,
            x,
            y,
            lambda,
            lambda_hat,
            dx,
            dy,
            dlambda,
            bt_dlambda,
            grad_g,
            l_beta: parts.value,
            l_beta_magnitude: parts.magnitude,
            delta_k: parts.value - inst.l_bar_lower,
            eta_k,
            inner_residual,
        };
        if !(record.x.iter().chain(record.y.iter()).chain(record.lambda.iter()).all(|v| v.is_finite())
            && record.l_beta.is_finite())
        {
            return Err(Error::NonFinite("iterate"));
        }
        let lambda_norm = record.lambda.norm();
        if lambda_norm > DIVERGENCE_FACTOR * (1.0 + self.start.lambda0.norm()) {
            return Err(Error::Divergence {
                k: record.k,
                norm: lambda_norm,
            });
        }
        Ok(record)
    }

    /// Iterates until the residual test passes or `max_iters` is reached,
    /// handing every record (including `k = 0`) to `sink`.
    pub fn run_streaming(&self, mut sink: impl FnMut(&IterateRecord)) -> Result<RunOutcome> {
        let mut prev = self.initial_record()?;
        sink(&prev);
        for _ in 0..self.config.max_iters {
            let cur = self.step(&prev)?;
            sink(&cur);
            let done = cur.max_residual() <= self.config.rho;
            prev = cur;
            if done {
                return Ok(RunOutcome::Converged { iterations: prev.k });
            }
        }
        Ok(RunOutcome::IterationCap { iterations: prev.k })
    }

    /// Runs to completion and keeps the whole trace (`records[0]` is `k = 0`).
    pub fn run(&self) -> Result<(Vec<IterateRecord>, RunOutcome)> {
        let mut records = Vec::new();
        let outcome = self.run_streaming(|r| records.push(r.clone()))?;
        Ok((records, outcome))
    }
}

/// `lambda_k = lambda_{k-1} - theta beta (A x_k + B y_k - b)`.
pub fn lambda_step(lambda_prev: &Vector, theta: f64, beta: f64, residual: &Vector) -> Vector {
    lambda_prev - residual * (theta * beta)
}

/// `lambda_hat_k = lambda_{k-1} - beta (A x_k + B y_{k-1} - b)`.
pub fn lambda_hat(
    lambda_prev: &Vector,
    beta: f64,
    x_next: &Vector,
    y_prev: &Vector,
    inst: &ProblemInstance,
) -> Vector {
    lambda_prev - inst.residual(x_next, y_prev) * beta
}

/// `margin * max(beta_bar, beta*)` for this instance.
pub fn auto_beta(inst: &ProblemInstance, theta: f64, tau: f64, margin: f64) -> Result<f64> {
    let s = linalg::spectral_summary(&inst.b_mat)?;
    params::min_admissible_beta(
        theta,
        tau,
        inst.g.weak_convexity,
        inst.g.lipschitz,
        s.sigma_b,
        s.sigma_b_plus,
        inst.beta_bar,
        margin,
    )
}

/// Convenience wrapper: prepare and run.
pub fn run(
    inst: &ProblemInstance,
    config: SolverConfig,
    start: StartPoint,
) -> Result<(Vec<IterateRecord>, RunOutcome)> {
    Solver::new(inst, config, start)?.run()
}

/// Checks used in tests that the value of `L_beta` is what the record claims.
pub fn recompute_l_beta(inst: &ProblemInstance, beta: f64, r: &IterateRecord) -> Result<f64> {
    aug_lagrangian(inst, beta, &r.x, &r.y, &r.lambda)
}
