//! Runtime certificate: every per-iteration inequality and identity of the
//! convergence analysis, evaluated on the actual iterates.
//!
//! Inequalities `lhs <= rhs` pass when `rhs - lhs >= -tol`; identities pass
//! when `|lhs - rhs| <= tol`. The default tolerance is
//! `1e-10 + (1e-8 + 10 inner_tol) * scale`, where `scale` sums the magnitudes
//! of the quantities that enter the comparison. Merit checks use
//! `1e-8 (1 + |merit_0|)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::Vector;
use crate::params;
use crate::problem::aug_lagrangian_parts;
use crate::solver::{IterateRecord, Solver};

pub const ABS_TOL: f64 = 1e-10;
pub const REL_TOL: f64 = 1e-8;
pub const MERIT_TOL: f64 = 1e-8;
pub const STATIONARITY_TOL: f64 = 1e-9;

/// Names of every check the certifier can emit.
pub mod names {
    pub const DESCENT_X: &str = "descent_x";
    pub const DESCENT_Y: &str = "descent_y";
    pub const MULTIPLIER_IDENTITY: &str = "multiplier_identity";
    pub const DUAL_RECURSION: &str = "dual_recursion";
    pub const THETA1_BOUND: &str = "theta1_bound";
    pub const U_BOUND: &str = "u_bound";
    pub const MERIT_THETA: &str = "merit_theta_bound";
    pub const MERIT_DECREASE: &str = "merit_decrease";
    pub const MERIT_NONNEGATIVE: &str = "merit_nonnegative";
    pub const STATIONARITY_X: &str = "stationarity_x";
    pub const IDENTITY_PRIMAL: &str = "identity_primal";
    pub const IDENTITY_DUAL_Y: &str = "identity_dual_y";
    pub const CUMULATIVE_BOUND: &str = "cumulative_bound";
    pub const RATE_DX: &str = "rate_dx";
    pub const RATE_DUAL_Y: &str = "rate_dual_y";
    pub const RATE_PRIMAL: &str = "rate_primal";
    pub const COROLLARY_DELTA0: &str = "corollary_delta0_nonnegative";
    pub const COROLLARY_ETA0: &str = "corollary_eta0_zero";
    pub const COROLLARY_DELTA1: &str = "corollary_delta1_sandwich";
    pub const COROLLARY_DELTA2: &str = "corollary_delta2_sandwich";
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    /// `None` for run-level checks.
    pub iteration: Option<usize>,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs` for inequalities, `-|lhs - rhs|` for identities.
    pub slack: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckResult {
    pub fn le(name: &str, iteration: Option<usize>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::from_slack(name, iteration, lhs, rhs, rhs - lhs, tolerance)
    }

    pub fn eq(name: &str, iteration: Option<usize>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::from_slack(name, iteration, lhs, rhs, -(lhs - rhs).abs(), tolerance)
    }

    /// Vector identity `lhs = rhs`, reported through `|lhs - rhs|`.
    pub fn eq_vec(name: &str, iteration: Option<usize>, lhs: &Vector, rhs: &Vector, tolerance: f64) -> Self {
        let gap = (lhs - rhs).norm();
        Self::from_slack(name, iteration, gap, 0.0, -gap, tolerance)
    }

    fn from_slack(name: &str, iteration: Option<usize>, lhs: f64, rhs: f64, slack: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            iteration,
            lhs,
            rhs,
            slack,
            tolerance,
            // NaN slack fails
            pass: slack >= -tolerance,
        }
    }
}

fn tol(solver: &Solver<'_>, scale: f64) -> f64 {
    ABS_TOL + (REL_TOL + 10.0 * solver.config().inner_tol) * scale
}

fn merit_tol(merit0: f64) -> f64 {
    MERIT_TOL * (1.0 + merit0.abs())
}

/// Lagrangian-based quantities of one transition `k-1 -> k`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeritState {
    pub delta_k: f64,
    pub eta_k: f64,
    pub merit: f64,
    /// `grad g(y_k) - grad g(y_{k-1}) + tau (dy_k - dy_{k-1})`.
    pub u: Vector,
    /// `|dlambda_k|^2/(beta theta) + c1/2 (|w_k|^2 - |w_{k-1}|^2)` with `w = B^T dlambda`.
    pub theta1: f64,
    /// `-kappa (|dy_k|^2 + |dy_{k-1}|^2)`; nonpositive since `kappa > 0`.
    pub theta2: f64,
}

pub fn merit_state(solver: &Solver<'_>, prev: &IterateRecord, cur: &IterateRecord) -> MeritState {
    let c = solver.constants();
    let u = &cur.grad_g - &prev.grad_g + (&cur.dy - &prev.dy) * c.tau;
    let theta1 = cur.dlambda.norm_squared() / (c.beta * c.theta)
        + 0.5 * c.c1 * (cur.bt_dlambda.norm_squared() - prev.bt_dlambda.norm_squared());
    let theta2 = -c.kappa * (cur.dy.norm_squared() + prev.dy.norm_squared());
    MeritState {
        delta_k: cur.delta_k,
        eta_k: cur.eta_k,
        merit: cur.merit(),
        u,
        theta1,
        theta2,
    }
}

/// Changes of `L_beta` over the x-, y- and multiplier updates.
pub fn check_descent_parts(
    solver: &Solver<'_>,
    prev: &IterateRecord,
    cur: &IterateRecord,
) -> Result<[CheckResult; 3]> {
    let inst = solver.instance();
    let c = solver.constants();
    let k = Some(cur.k);
    let after_x = aug_lagrangian_parts(inst, c.beta, &cur.x, &prev.y, &prev.lambda)?;
    let after_y = aug_lagrangian_parts(inst, c.beta, &cur.x, &cur.y, &prev.lambda)?;
    let mags = |a: f64, b: f64| a + b;

    let rhs_x = -0.5 * cur.dx_g_sq;
    let descent_x = CheckResult::le(
        names::DESCENT_X,
        k,
        after_x.value - prev.l_beta,
        rhs_x,
        tol(solver, mags(after_x.magnitude, prev.l_beta_magnitude) + rhs_x.abs()),
    );

    let rhs_y = 0.5 * (c.weak_convexity - c.beta * c.spectral.sigma_b - c.tau) * cur.dy.norm_squared();
    let descent_y = CheckResult::le(
        names::DESCENT_Y,
        k,
        after_y.value - after_x.value,
        rhs_y,
        tol(solver, mags(after_y.magnitude, after_x.magnitude) + rhs_y.abs()),
    );

    let rhs_l = cur.dlambda.norm_squared() / (c.theta * c.beta);
    let multiplier = CheckResult::eq(
        names::MULTIPLIER_IDENTITY,
        k,
        cur.l_beta - after_y.value,
        rhs_l,
        tol(solver, mags(cur.l_beta_magnitude, after_y.magnitude) + rhs_l),
    );
    Ok([descent_x, descent_y, multiplier])
}

/// `B^T dlambda_k = (1 - theta) B^T dlambda_{k-1} + theta u_k`.
pub fn check_dual_recursion(solver: &Solver<'_>, prev: &IterateRecord, cur: &IterateRecord, state: &MeritState) -> CheckResult {
    let c = solver.constants();
    let bt = solver.instance().b_mat.transpose();
    let rhs = &prev.bt_dlambda * (1.0 - c.theta) + &state.u * c.theta;
    let scale = cur.bt_dlambda.norm()
        + (1.0 - c.theta).abs() * prev.bt_dlambda.norm()
        + c.theta * state.u.norm()
        + (&bt * &cur.lambda).norm()
        + (&bt * &prev.lambda).norm()
        + cur.grad_g.norm()
        + prev.grad_g.norm()
        + c.tau * (cur.dy.norm() + prev.dy.norm());
    let tolerance = tol(solver, scale) + 10.0 * c.theta * (cur.inner_residual + prev.inner_residual);
    CheckResult::eq_vec(names::DUAL_RECURSION, Some(cur.k), &cur.bt_dlambda, &rhs, tolerance)
}

/// `theta1_k <= gamma/(beta sigma_B^+) |u_k|^2` and
/// `|u_k|^2 <= 3 (L^2 + tau^2)(|dy_k|^2 + |dy_{k-1}|^2)`.
pub fn check_theta_bounds(
    solver: &Solver<'_>,
    prev: &IterateRecord,
    cur: &IterateRecord,
    state: &MeritState,
) -> [CheckResult; 2] {
    let c = solver.constants();
    let k = Some(cur.k);
    let u_sq = state.u.norm_squared();
    let rhs1 = c.gamma / (c.beta * c.spectral.sigma_b_plus) * u_sq;
    let scale1 = cur.dlambda.norm_squared() / (c.beta * c.theta)
        + 0.5 * c.c1 * (cur.bt_dlambda.norm_squared() + prev.bt_dlambda.norm_squared())
        + rhs1;
    let theta1 = CheckResult::le(names::THETA1_BOUND, k, state.theta1, rhs1, tol(solver, scale1));

    let rhs2 = 3.0 * (c.lipschitz.powi(2) + c.tau.powi(2)) * (cur.dy.norm_squared() + prev.dy.norm_squared());
    let u_bound = CheckResult::le(names::U_BOUND, k, u_sq, rhs2, tol(solver, u_sq + rhs2));
    [theta1, u_bound]
}

/// `merit_k - merit_{k-1} <= -1/2 |dx_k|_G^2 + theta1_k + theta2_k`, the sum
/// of the three descent parts before `theta1` is bounded.
pub fn check_merit_theta(solver: &Solver<'_>, prev: &IterateRecord, cur: &IterateRecord, state: &MeritState) -> CheckResult {
    let c = solver.constants();
    let rhs = -0.5 * cur.dx_g_sq + state.theta1 + state.theta2;
    let scale = cur.l_beta_magnitude
        + prev.l_beta_magnitude
        + cur.eta_k
        + prev.eta_k
        + 0.5 * cur.dx_g_sq
        + cur.dlambda.norm_squared() / (c.beta * c.theta)
        + 0.5 * c.c1 * (cur.bt_dlambda.norm_squared() + prev.bt_dlambda.norm_squared())
        + state.theta2.abs();
    CheckResult::le(names::MERIT_THETA, Some(cur.k), state.merit - prev.merit(), rhs, tol(solver, scale))
}

/// `merit_k - merit_{k-1} <= -1/2 |dx_k|_G^2 - delta1 (|dy_k|^2 + |dy_{k-1}|^2)` and `merit_k >= 0`.
pub fn check_merit(solver: &Solver<'_>, prev: &IterateRecord, cur: &IterateRecord, merit0: f64) -> [CheckResult; 2] {
    let c = solver.constants();
    let k = Some(cur.k);
    let t = merit_tol(merit0);
    let rhs = -0.5 * cur.dx_g_sq - c.delta1 * (cur.dy.norm_squared() + prev.dy.norm_squared());
    [
        CheckResult::le(names::MERIT_DECREASE, k, cur.merit() - prev.merit(), rhs, t),
        CheckResult::le(names::MERIT_NONNEGATIVE, k, 0.0, cur.merit(), t),
    ]
}

/// Merit checks over a whole trace (`records[0]` is the start).
pub fn check_merit_monotone(solver: &Solver<'_>, records: &[IterateRecord]) -> Vec<CheckResult> {
    let Some(first) = records.first() else {
        return Vec::new();
    };
    let merit0 = first.merit();
    records
        .windows(2)
        .flat_map(|w| check_merit(solver, &w[0], &w[1], merit0))
        .collect()
}

/// `-G dx_k + A^T lambda_hat_k` lies in the subdifferential of `f` at `x_k`,
/// tested as a fixed point of the scaled prox. Also the two residual identities.
pub fn check_stationarity(solver: &Solver<'_>, cur: &IterateRecord) -> Result<[CheckResult; 3]> {
    let inst = solver.instance();
    let c = solver.constants();
    let k = Some(cur.k);
    let weight = solver.stationarity_weight();
    let v = inst.a.transpose() * &cur.lambda_hat - solver.metric().apply(&cur.dx);
    let gap = inst.f.prox_fixed_point_gap(&cur.x, &v, weight)?;
    let stat_tol = STATIONARITY_TOL * (1.0 + cur.x.norm() + v.norm() / weight);
    let stationarity = CheckResult::le(names::STATIONARITY_X, k, gap, 0.0, stat_tol);

    let from_lambda = cur.dlambda.norm() / (c.beta * c.theta);
    let primal = CheckResult::eq(
        names::IDENTITY_PRIMAL,
        k,
        cur.res_primal,
        from_lambda,
        tol(solver, cur.res_primal + from_lambda),
    );

    let bt = inst.b_mat.transpose();
    let dual = &cur.grad_g - &bt * &cur.lambda_hat;
    let predicted = -((&bt * (&inst.b_mat * &cur.dy)) * c.beta + &cur.dy * c.tau);
    let scale = cur.grad_g.norm() + (&bt * &cur.lambda_hat).norm() + predicted.norm();
    let dual_y = CheckResult::eq_vec(
        names::IDENTITY_DUAL_Y,
        k,
        &dual,
        &predicted,
        tol(solver, scale) + 10.0 * cur.inner_residual,
    );
    Ok([stationarity, primal, dual_y])
}

/// Per-iteration weighted progress `1/2 |dx|_G^2 + delta1 |dy|^2 + delta2 |dlambda|^2`.
pub fn progress_term(solver: &Solver<'_>, rec: &IterateRecord) -> f64 {
    let c = solver.constants();
    0.5 * rec.dx_g_sq + c.delta1 * rec.dy.norm_squared() + c.delta2 * rec.dlambda.norm_squared()
}

#[derive(Debug, Clone, Copy)]
struct BestTerm {
    value: f64,
    dx_g: f64,
    res_dual_y: f64,
    res_primal: f64,
}

impl BestTerm {
    fn of(solver: &Solver<'_>, rec: &IterateRecord) -> Self {
        Self {
            value: progress_term(solver, rec),
            dx_g: rec.dx_g_sq.max(0.0).sqrt(),
            res_dual_y: rec.res_dual_y,
            res_primal: rec.res_primal,
        }
    }
}

fn rate_checks(solver: &Solver<'_>, k: usize, sum: f64, best: &BestTerm, merit0: f64) -> [CheckResult; 4] {
    let c = solver.constants();
    let m = c.rate_constant();
    let kf = k as f64;
    let at = Some(k);
    let bound_dx = (6.0 * m / kf).sqrt();
    let bound_y = (c.beta * c.spectral.norm_btb + c.tau) * (3.0 * m / (c.delta1 * kf)).sqrt();
    let bound_r = (3.0 * m / (c.delta2 * kf)).sqrt() / (c.beta * c.theta);
    [
        CheckResult::le(
            names::CUMULATIVE_BOUND,
            at,
            sum,
            3.0 * m,
            merit_tol(merit0) + tol(solver, sum + 3.0 * m),
        ),
        CheckResult::le(names::RATE_DX, at, best.dx_g, bound_dx, tol(solver, best.dx_g + bound_dx)),
        CheckResult::le(names::RATE_DUAL_Y, at, best.res_dual_y, bound_y, tol(solver, best.res_dual_y + bound_y)),
        CheckResult::le(names::RATE_PRIMAL, at, best.res_primal, bound_r, tol(solver, best.res_primal + bound_r)),
    ]
}

/// Rate bounds at iteration `k` from a full trace (`records[0]` is the
/// start). The residuals are read at the first index minimizing the
/// weighted progress term over `1..=k`.
pub fn check_rate_bounds(solver: &Solver<'_>, records: &[IterateRecord], k: usize) -> Vec<CheckResult> {
    if k == 0 || k >= records.len() {
        return Vec::new();
    }
    let mut sum = 0.0;
    let mut best: Option<BestTerm> = None;
    for rec in &records[1..=k] {
        let term = BestTerm::of(solver, rec);
        sum += term.value;
        if best.is_none_or(|b| term.value < b.value) {
            best = Some(term);
        }
    }
    rate_checks(solver, k, sum, &best.expect("k >= 1"), records[0].merit()).to_vec()
}

/// Checks that only apply to standard ADMM (`G = 0`, `tau = 0`, invertible
/// `B`, and `beta` meeting the stronger penalty condition). Empty otherwise.
pub fn check_corollary_regime(solver: &Solver<'_>) -> Result<Vec<CheckResult>> {
    let c = solver.constants();
    if !(solver.metric().is_zero() && c.tau == 0.0 && c.spectral.sigma_b > 0.0) {
        return Ok(Vec::new());
    }
    let cond = params::corollary_beta_check(c.beta, c.spectral.sigma_b, c.weak_convexity, c.gamma, c.lipschitz)?;
    if !cond.pass {
        return Ok(Vec::new());
    }
    let rel = |x: f64| 1e-12 * x.abs().max(1.0);
    let mut out = vec![CheckResult::le(names::COROLLARY_DELTA0, None, 0.0, c.delta0, tol(solver, c.delta0.abs()))];
    if solver.seed().case == params::Eta0Case::ConsistentMultiplier {
        out.push(CheckResult::eq(names::COROLLARY_ETA0, None, c.eta0, 0.0, ABS_TOL));
    }
    // two-sided bounds reported as the worse side
    let d1_lo = c.delta1 - cond.delta1_lower;
    let d1_hi = cond.delta1_upper - c.delta1;
    let d1 = if d1_lo <= d1_hi {
        CheckResult::le(names::COROLLARY_DELTA1, None, cond.delta1_lower, c.delta1, rel(c.delta1))
    } else {
        CheckResult::le(names::COROLLARY_DELTA1, None, c.delta1, cond.delta1_upper, rel(c.delta1))
    };
    out.push(d1);
    let inv = 1.0 / c.delta2;
    let lo = c.beta * c.theta;
    let hi = 3.0 * c.beta * c.theta;
    let d2 = if inv - lo <= hi - inv {
        CheckResult::le(names::COROLLARY_DELTA2, None, lo, inv, rel(inv))
    } else {
        CheckResult::le(names::COROLLARY_DELTA2, None, inv, hi, rel(inv))
    };
    out.push(d2);
    Ok(out)
}

/// Pass counts and the worst result for one check name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub evaluated: usize,
    pub failed: usize,
    /// Smallest `slack + tolerance` seen, with its iteration.
    pub worst_margin: f64,
    pub worst_iteration: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub iterations: usize,
    pub merit0: f64,
    pub rate_constant: f64,
    pub summary: BTreeMap<String, CheckSummary>,
    /// Every failing result, in evaluation order.
    pub failures: Vec<CheckResult>,
    /// Every result in evaluation order, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub results: Option<Vec<CheckResult>>,
}

impl Certificate {
    pub fn empty(rate_constant: f64) -> Self {
        Self {
            iterations: 0,
            merit0: f64::NAN,
            rate_constant,
            summary: BTreeMap::new(),
            failures: Vec::new(),
            results: None,
        }
    }

    pub fn add(&mut self, r: CheckResult) {
        let margin = r.slack + r.tolerance;
        let entry = self.summary.entry(r.name.clone()).or_insert(CheckSummary {
            evaluated: 0,
            failed: 0,
            worst_margin: f64::INFINITY,
            worst_iteration: None,
        });
        entry.evaluated += 1;
        if !(margin >= entry.worst_margin) {
            entry.worst_margin = margin;
            entry.worst_iteration = r.iteration;
        }
        if !r.pass {
            entry.failed += 1;
            self.failures.push(r.clone());
        }
        if let Some(all) = &mut self.results {
            all.push(r);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn evaluated(&self) -> usize {
        self.summary.values().map(|s| s.evaluated).sum()
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.summary
            .iter()
            .filter(|(_, s)| s.failed > 0)
            .map(|(n, _)| n.as_str())
            .collect()
    }

    /// Name and margin (`slack + tolerance`) of the tightest check.
    pub fn worst(&self) -> Option<(&str, f64)> {
        self.summary
            .iter()
            .min_by(|a, b| a.1.worst_margin.total_cmp(&b.1.worst_margin))
            .map(|(n, s)| (n.as_str(), s.worst_margin))
    }
}

/// Streaming certifier: feed it the records of a run in order.
pub struct Certifier<'s, 'a> {
    solver: &'s Solver<'a>,
    prev: Option<IterateRecord>,
    sum: f64,
    best: Option<BestTerm>,
    cert: Certificate,
}

impl<'s, 'a> Certifier<'s, 'a> {
    pub fn new(solver: &'s Solver<'a>) -> Result<Self> {
        let mut cert = Certificate::empty(solver.constants().rate_constant());
        for r in check_corollary_regime(solver)? {
            cert.add(r);
        }
        Ok(Self {
            solver,
            prev: None,
            sum: 0.0,
            best: None,
            cert,
        })
    }

    /// Also keep every individual result (memory grows with the run length).
    pub fn keep_all(mut self) -> Self {
        self.cert.results.get_or_insert_with(Vec::new);
        self
    }

    fn push(&mut self, r: CheckResult) {
        self.cert.add(r);
    }

    /// Evaluates every check of the transition ending at `rec`.
    pub fn observe(&mut self, rec: &IterateRecord) -> Result<()> {
        let Some(prev) = self.prev.take() else {
            self.cert.merit0 = rec.merit();
            self.prev = Some(rec.clone());
            return Ok(());
        };
        let s = self.solver;
        let merit0 = self.cert.merit0;
        for r in check_descent_parts(s, &prev, rec)? {
            self.push(r);
        }
        let state = merit_state(s, &prev, rec);
        self.push(check_dual_recursion(s, &prev, rec, &state));
        self.push(check_merit_theta(s, &prev, rec, &state));
        for r in check_theta_bounds(s, &prev, rec, &state) {
            self.push(r);
        }
        for r in check_merit(s, &prev, rec, merit0) {
            self.push(r);
        }
        for r in check_stationarity(s, rec)? {
            self.push(r);
        }
        let term = BestTerm::of(s, rec);
        self.sum += term.value;
        if self.best.is_none_or(|b| term.value < b.value) {
            self.best = Some(term);
        }
        let best = self.best.expect("set above");
        for r in rate_checks(s, rec.k, self.sum, &best, merit0) {
            self.push(r);
        }
        self.cert.iterations = rec.k;
        self.prev = Some(rec.clone());
        Ok(())
    }

    pub fn results(&self) -> Option<&[CheckResult]> {
        self.cert.results.as_deref()
    }

    pub fn failures(&self) -> &[CheckResult] {
        &self.cert.failures
    }

    pub fn finish(self) -> Certificate {
        self.cert
    }
}

/// Certifies a finished trace (`records[0]` is the start).
pub fn certify_trace(solver: &Solver<'_>, records: &[IterateRecord]) -> Result<Certificate> {
    let mut c = Certifier::new(solver)?;
    for r in records {
        c.observe(r)?;
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::tests::scalar_instance;
    use crate::solver::{SolverConfig, StartPoint};

    fn v(x: f64) -> Vector {
        Vector::from_element(1, x)
    }

    fn scalar_solver(inst: &crate::problem::ProblemInstance) -> Solver<'_> {
        let config = SolverConfig {
            beta: 4.0,
            ..SolverConfig::default()
        };
        Solver::new(inst, config, StartPoint::new(v(0.0), v(1.0), v(1.0))).unwrap()
    }

    #[test]
    fn scalar_trace_is_certified() {
        let inst = scalar_instance();
        let solver = scalar_solver(&inst);
        let (records, _) = solver.run().unwrap();
        let cert = certify_trace(&solver, &records).unwrap();
        assert!(cert.all_pass(), "{:?}", cert.failures);
        assert!(cert.summary.contains_key(names::DUAL_RECURSION));
    }

    #[test]
    fn scalar_first_transition_values() {
        let inst = scalar_instance();
        let solver = scalar_solver(&inst);
        let r0 = solver.initial_record().unwrap();
        let r1 = solver.step(&r0).unwrap();
        let [dx, dy, dl] = check_descent_parts(&solver, &r0, &r1).unwrap();
        // L(x0,y0,l0) = 1.5, L(x1,y0,l0) = 0.6, L(x1,y1,l0) = 0.344, L(x1,y1,l1) = 0.3696
        assert!((dx.lhs + 0.9).abs() < 1e-14);
        assert!((dy.lhs + 0.256).abs() < 1e-14);
        assert!((dl.lhs - 0.0256).abs() < 1e-14);
        assert!((dl.rhs - 0.0256).abs() < 1e-14);
        assert!(dx.pass && dy.pass && dl.pass);
        let state = merit_state(&solver, &r0, &r1);
        // u_1 = grad g(y1) - grad g(y0) = 0.68 - 1
        assert!((state.u[0] + 0.32).abs() < 1e-14);
        assert!((state.merit - (0.3696 + 0.1024)).abs() < 1e-14);
        let kappa = solver.constants().kappa;
        let expect = -kappa * (0.32f64.powi(2) + r0.dy.norm_squared());
        assert!(state.theta2 <= 0.0 && (state.theta2 - expect).abs() < 1e-14);
        assert!(check_merit_theta(&solver, &r0, &r1, &state).pass);
    }

    #[test]
    fn streaming_and_slice_rate_checks_agree() {
        let inst = scalar_instance();
        let solver = scalar_solver(&inst);
        let (records, _) = solver.run().unwrap();
        let mut cert = Certifier::new(&solver).unwrap().keep_all();
        for r in &records {
            cert.observe(r).unwrap();
        }
        let kept = cert.results().unwrap().to_vec();
        for k in 1..records.len() {
            let direct = check_rate_bounds(&solver, &records, k);
            for d in direct {
                let s = kept
                    .iter()
                    .find(|r| r.name == d.name && r.iteration == Some(k))
                    .unwrap();
                assert_eq!(s.lhs, d.lhs);
                assert!((s.rhs - d.rhs).abs() <= 1e-15 * d.rhs.abs());
            }
        }
    }

    #[test]
    fn corrupted_record_fails_checks() {
        let inst = scalar_instance();
        let solver = scalar_solver(&inst);
        let r0 = solver.initial_record().unwrap();
        let mut r1 = solver.step(&r0).unwrap();
        r1.bt_dlambda[0] += 1e-3;
        let state = merit_state(&solver, &r0, &r1);
        assert!(!check_dual_recursion(&solver, &r0, &r1, &state).pass);
        let mut r1 = solver.step(&r0).unwrap();
        r1.delta_k += 1.5;
        assert!(!check_merit(&solver, &r0, &r1, r0.merit())[0].pass);
    }

    #[test]
    fn nan_never_passes() {
        assert!(!CheckResult::le("x", None, f64::NAN, 0.0, 1.0).pass);
        assert!(!CheckResult::eq("x", None, 0.0, f64::NAN, 1.0).pass);
    }

    #[test]
    fn corollary_checks_apply_to_standard_admm() {
        let inst = scalar_instance();
        // g = y^2/2 has L = 1, m = 0, so the condition reads beta^2 >= 24
        let solver = scalar_solver(&inst);
        assert!(check_corollary_regime(&solver).unwrap().is_empty());
        let config = SolverConfig {
            beta: 10.0,
            ..SolverConfig::default()
        };
        let solver = Solver::new(&inst, config, StartPoint::new(v(0.0), v(1.0), v(1.0))).unwrap();
        let checks = check_corollary_regime(&solver).unwrap();
        assert_eq!(checks.len(), 4);
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
    }
}
