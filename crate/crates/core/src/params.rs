//! Constants fixed before the first iteration: the stepsize factor `gamma`,
//! the admissibility margin `delta1`, the dual weight `delta2`, the weight `c1`
//! of the multiplier term in the merit function, and the seeding program for
//! `eta0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{reduced_svd, spectral_summary, Matrix, SpectralSummary, Vector};
use crate::problem::{delta0, ProblemInstance};

/// Relative tolerance for deciding that the `eta0` constraint can be met.
pub const ETA0_FEAS_TOL: f64 = 1e-9;

fn check_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < 2.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("theta must lie in (0, 2), got {theta}")))
    }
}

/// `gamma = theta / (1 - |theta - 1|)^2`.
pub fn gamma(theta: f64) -> Result<f64> {
    check_theta(theta)?;
    let gap = 1.0 - (theta - 1.0).abs();
    Ok(theta / (gap * gap))
}

/// `c1 = 2|theta - 1| / (beta theta (1 - |theta - 1|) sigma_B^+)`.
pub fn c1(theta: f64, beta: f64, sigma_b_plus: f64) -> Result<f64> {
    check_theta(theta)?;
    if !(beta > 0.0) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    if !(sigma_b_plus > 0.0) {
        return Err(Error::Domain(format!("sigma_B^+ must be positive, got {sigma_b_plus}")));
    }
    let dev = (theta - 1.0).abs();
    Ok(2.0 * dev / (beta * theta * (1.0 - dev) * sigma_b_plus))
}

/// `delta1 = (beta sigma_B + tau - m)/4 - 3 gamma (L^2 + tau^2) / (beta sigma_B^+)`.
///
/// Not sign-checked; a configuration is admissible iff this is positive.
pub fn delta1(
    beta: f64,
    tau: f64,
    m: f64,
    lipschitz: f64,
    gamma: f64,
    sigma_b: f64,
    sigma_b_plus: f64,
) -> f64 {
    (beta * sigma_b + tau - m) / 4.0
        - 3.0 * gamma * (lipschitz * lipschitz + tau * tau) / (beta * sigma_b_plus)
}

/// `delta2 = (beta theta + 6 theta gamma (L^2 + tau^2) / (sigma_B^+ delta1))^-1`.
pub fn delta2(
    beta: f64,
    theta: f64,
    gamma: f64,
    lipschitz: f64,
    tau: f64,
    sigma_b_plus: f64,
    delta1: f64,
) -> Result<f64> {
    if !(delta1 > 0.0) {
        return Err(Error::Inadmissible { delta1 });
    }
    let denom = beta * theta
        + 6.0 * theta * gamma * (lipschitz * lipschitz + tau * tau) / (sigma_b_plus * delta1);
    Ok(1.0 / denom)
}

/// Smallest admissible penalty scaled by `margin`:
/// `margin * max(beta_bar, beta*)` where `beta*` is where `delta1` changes sign.
#[allow(clippy::too_many_arguments)]
pub fn min_admissible_beta(
    theta: f64,
    tau: f64,
    m: f64,
    lipschitz: f64,
    sigma_b: f64,
    sigma_b_plus: f64,
    beta_bar: f64,
    margin: f64,
) -> Result<f64> {
    let gamma = gamma(theta)?;
    if !(margin > 1.0) {
        return Err(Error::Domain(format!("beta margin must exceed 1, got {margin}")));
    }
    if !(sigma_b_plus > 0.0) {
        return Err(Error::Domain("sigma_B^+ must be positive".into()));
    }
    let k = 12.0 * gamma * (lipschitz * lipschitz + tau * tau);
    let beta_star = if sigma_b > 0.0 {
        // sigma_B sigma_B^+ beta^2 + (tau - m) sigma_B^+ beta - k = 0
        let qa = sigma_b * sigma_b_plus;
        let qb = (tau - m) * sigma_b_plus;
        let disc = qb * qb + 4.0 * qa * k;
        // numerically stable positive root
        if qb >= 0.0 {
            2.0 * k / (qb + disc.sqrt())
        } else {
            (-qb + disc.sqrt()) / (2.0 * qa)
        }
    } else if tau > m {
        k / ((tau - m) * sigma_b_plus)
    } else {
        return Err(Error::NoAdmissibleBeta(format!(
            "sigma_B = 0 requires tau > m (tau = {tau}, m = {m})"
        )));
    };
    let beta = margin * beta_bar.max(beta_star);
    if !(beta > 0.0) {
        return Err(Error::NoAdmissibleBeta(format!(
            "degenerate data gives beta* = {beta_star}; supply beta explicitly"
        )));
    }
    Ok(beta)
}

/// Outcome of the standard-ADMM penalty condition
/// `(beta sigma_B - 2m)/8 >= 3 gamma L^2 / (beta sigma_B)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorollaryCheck {
    pub pass: bool,
    pub slack: f64,
    /// `beta sigma_B / 8`, a lower bound on `delta1` (with `tau = 0`) when the check passes.
    pub delta1_lower: f64,
    /// `beta sigma_B / 4`, an upper bound on `delta1` when the check passes.
    pub delta1_upper: f64,
}

pub fn corollary_beta_check(
    beta: f64,
    sigma_b: f64,
    m: f64,
    gamma: f64,
    lipschitz: f64,
) -> Result<CorollaryCheck> {
    if !(sigma_b > 0.0) {
        return Err(Error::Domain("the standard-ADMM condition needs an invertible B (sigma_B > 0)".into()));
    }
    let slack = (beta * sigma_b - 2.0 * m) / 8.0 - 3.0 * gamma * lipschitz * lipschitz / (beta * sigma_b);
    Ok(CorollaryCheck {
        pass: slack >= 0.0,
        slack,
        delta1_lower: beta * sigma_b / 8.0,
        delta1_upper: beta * sigma_b / 4.0,
    })
}

/// Smallest `beta` meeting the standard-ADMM condition (its positive root).
pub fn corollary_min_beta(sigma_b: f64, m: f64, gamma: f64, lipschitz: f64) -> Result<f64> {
    if !(sigma_b > 0.0) {
        return Err(Error::Domain("the standard-ADMM condition needs sigma_B > 0".into()));
    }
    Ok((m + (m * m + 24.0 * gamma * lipschitz * lipschitz).sqrt()) / sigma_b)
}

/// Which feasibility regime the `eta0` program fell into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Eta0Case {
    /// `tau = 0` and `B^T lambda0 = grad g(y0)`: value 0.
    ConsistentMultiplier,
    /// `tau = 0`, `theta != 1`, right-hand side in `Im(B^T)`.
    RangeOnly,
    /// `tau > 0`: always feasible.
    ProximalY,
    Infeasible,
}

/// Optimal value and minimizer of the seeding program
///
/// `min (c1/2)|w|^2 + kappa |dy|^2  s.t.  tau dy + (1 - 1/theta) w = B^T lambda0 - grad g(y0)`,
///
/// solved in the reduced variable `w = B^T dlambda` restricted to `Im(B^T)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eta0Solution {
    pub value: f64,
    pub dy0: Vector,
    pub w0: Vector,
    pub case: Eta0Case,
    /// Norm of the right-hand side component that no feasible point can match.
    pub infeasibility: f64,
}

impl Eta0Solution {
    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }

    pub fn remediation_hint(&self) -> &'static str {
        "set tau > 0, or choose lambda0 with B^T lambda0 = grad g(y0) (e.g. the consistent-multiplier start)"
    }
}

#[allow(clippy::too_many_arguments)]
pub fn eta0(
    b_mat: &Matrix,
    lambda0: &Vector,
    grad_g_y0: &Vector,
    theta: f64,
    tau: f64,
    beta: f64,
    m: f64,
) -> Result<Eta0Solution> {
    let p = b_mat.ncols();
    if lambda0.len() != b_mat.nrows() {
        return Err(Error::dim("eta0 lambda0", b_mat.nrows(), lambda0.len()));
    }
    if grad_g_y0.len() != p {
        return Err(Error::dim("eta0 grad g(y0)", p, grad_g_y0.len()));
    }
    if !(tau >= 0.0) {
        return Err(Error::Domain(format!("tau must be nonnegative, got {tau}")));
    }
    let svd = reduced_svd(b_mat);
    if svd.rank() == 0 {
        return Err(Error::Assumption {
            assumption: "A1",
            detail: "B must be nonzero".into(),
        });
    }
    let s_min = svd.values[svd.rank() - 1];
    let s_max = svd.values[0];
    let sigma_b_plus = s_min * s_min;
    let sigma_b = if svd.rank() == p { sigma_b_plus } else { 0.0 };
    let kappa = (beta * sigma_b + tau - m) / 4.0;
    if !(kappa > 0.0) {
        return Err(Error::Domain(format!(
            "eta0 needs beta sigma_B + tau - m > 0, got 4 kappa = {}",
            4.0 * kappa
        )));
    }
    let c1 = c1(theta, beta, sigma_b_plus)?;

    let bt_lambda = b_mat.transpose() * lambda0;
    let v = &bt_lambda - grad_g_y0;
    let row = &svd.right;
    let v_range = row * (row.transpose() * &v);
    let v_null = &v - &v_range;
    let tol = ETA0_FEAS_TOL * (1.0 + bt_lambda.norm() + grad_g_y0.norm()) * (1.0 + s_max);
    let s = 1.0 - 1.0 / theta;
    let zeros = Vector::zeros(p);

    let infeasible = |gap: f64| Eta0Solution {
        value: f64::INFINITY,
        dy0: zeros.clone(),
        w0: zeros.clone(),
        case: Eta0Case::Infeasible,
        infeasibility: gap,
    };

    if tau > 0.0 {
        if s == 0.0 {
            let dy0 = &v / tau;
            let value = kappa * dy0.norm_squared();
            return Ok(Eta0Solution {
                value,
                dy0,
                w0: zeros,
                case: Eta0Case::ProximalY,
                infeasibility: 0.0,
            });
        }
        // Minimize (c1/2)|w|^2 + (kappa/tau^2)|v - s w|^2 over w in Im(B^T).
        let t2 = tau * tau;
        let coef = (2.0 * kappa * s / t2) / (c1 + 2.0 * kappa * s * s / t2);
        let w0 = &v_range * coef;
        let dy0 = (&v - &w0 * s) / tau;
        let value = 0.5 * c1 * w0.norm_squared() + kappa * dy0.norm_squared();
        return Ok(Eta0Solution {
            value,
            dy0,
            w0,
            case: Eta0Case::ProximalY,
            infeasibility: 0.0,
        });
    }

    if s == 0.0 {
        let gap = v.norm();
        if gap <= tol {
            return Ok(Eta0Solution {
                value: 0.0,
                dy0: zeros.clone(),
                w0: zeros,
                case: Eta0Case::ConsistentMultiplier,
                infeasibility: gap,
            });
        }
        return Ok(infeasible(gap));
    }
    let gap = v_null.norm();
    if gap > tol {
        return Ok(infeasible(gap));
    }
    let w0 = &v_range / s;
    let value = 0.5 * c1 * w0.norm_squared();
    let case = if v.norm() <= tol {
        Eta0Case::ConsistentMultiplier
    } else {
        Eta0Case::RangeOnly
    };
    Ok(Eta0Solution {
        value,
        dy0: zeros,
        w0,
        case,
        infeasibility: gap,
    })
}

/// Every constant fixed at step zero, for one instance, parameter choice and start.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DerivedConstants {
    pub theta: f64,
    pub beta: f64,
    pub tau: f64,
    pub gamma: f64,
    pub c1: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub eta0: f64,
    pub delta0: f64,
    /// Weight `(beta sigma_B + tau - m)/4` of `|dy|^2` in the merit term.
    pub kappa: f64,
    pub lipschitz: f64,
    pub weak_convexity: f64,
    pub spectral: SpectralSummary,
}

impl DerivedConstants {
    /// `max(eta0, delta0)`, the constant in the rate bounds.
    pub fn rate_constant(&self) -> f64 {
        self.eta0.max(self.delta0)
    }

    /// Computes every constant and the `eta0` seed. Fails if `delta1 <= 0`,
    /// `beta < beta_bar`, or `eta0` is infinite.
    pub fn compute(
        inst: &ProblemInstance,
        theta: f64,
        beta: f64,
        tau: f64,
        start: (&Vector, &Vector, &Vector),
    ) -> Result<(Self, Eta0Solution)> {
        let (x0, y0, lambda0) = start;
        let gamma = gamma(theta)?;
        if !(tau >= 0.0 && tau.is_finite()) {
            return Err(Error::Domain(format!("tau must be finite and nonnegative, got {tau}")));
        }
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::Domain(format!("beta must be finite and positive, got {beta}")));
        }
        if beta < inst.beta_bar {
            return Err(Error::Domain(format!(
                "beta = {beta} is below beta_bar = {}",
                inst.beta_bar
            )));
        }
        let spectral = spectral_summary(&inst.b_mat)?;
        let (lip, m) = (inst.g.lipschitz, inst.g.weak_convexity);
        let d1 = delta1(beta, tau, m, lip, gamma, spectral.sigma_b, spectral.sigma_b_plus);
        if !(d1 > 0.0) {
            return Err(Error::Inadmissible { delta1: d1 });
        }
        let d2 = delta2(beta, theta, gamma, lip, tau, spectral.sigma_b_plus, d1)?;
        let c1 = c1(theta, beta, spectral.sigma_b_plus)?;
        let seed = eta0(&inst.b_mat, lambda0, &inst.g.gradient(y0), theta, tau, beta, m)?;
        if !seed.is_finite() {
            return Err(Error::Eta0Infeasible {
                hint: format!(
                    "constraint residual {:.3e} cannot be matched; {}",
                    seed.infeasibility,
                    seed.remediation_hint()
                ),
            });
        }
        let d0 = delta0(inst, beta, x0, y0, lambda0)?;
        if !d0.is_finite() {
            return Err(Error::Config(
                "initial x0 lies outside dom f, so the initial gap is infinite".into(),
            ));
        }
        let constants = Self {
            theta,
            beta,
            tau,
            gamma,
            c1,
            delta1: d1,
            delta2: d2,
            eta0: seed.value,
            delta0: d0,
            kappa: (beta * spectral.sigma_b + tau - m) / 4.0,
            lipschitz: lip,
            weak_convexity: m,
            spectral,
        };
        Ok((constants, seed))
    }
}
