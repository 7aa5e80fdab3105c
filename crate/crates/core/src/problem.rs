//! The linearly constrained problem `min f(x) + g(y)  s.t.  A x + B y = b`.
//!
//! `f` is a proper lower semicontinuous term handled only through its value and
//! an exact (global) proximal map. `g` is smooth with a Lipschitz gradient
//! constant `L` and a weak convexity constant `m` (so that `g + m/2 |.|^2` is
//! convex). The built-in families all admit exact subproblem solutions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    self, is_symmetric, range_inclusion_gap, symmetric_extremes, Matrix, RangeProjector, Vector,
};

/// Radius tolerance for membership in the unit sphere.
const SPHERE_TOL: f64 = 1e-10;

/// Nonsmooth term `f`. Each family has an exact global proximal map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum NonsmoothTerm {
    /// `1/2 x^T P x + q^T x` with `P` symmetric positive semidefinite.
    Quadratic {
        #[serde(rename = "P", with = "linalg::serde_matrix")]
        p: Matrix,
        #[serde(with = "linalg::serde_vector")]
        q: Vector,
    },
    /// Indicator of the box `lower <= x <= upper`.
    Box {
        #[serde(with = "linalg::serde_vector")]
        lower: Vector,
        #[serde(with = "linalg::serde_vector")]
        upper: Vector,
    },
    /// `mu * |x|_0`.
    L0 { mu: f64 },
    /// Indicator of the Euclidean unit sphere.
    Sphere,
}

impl NonsmoothTerm {
    pub fn value(&self, x: &Vector) -> f64 {
        match self {
            Self::Quadratic { p, q } => 0.5 * x.dot(&(p * x)) + q.dot(x),
            Self::Box { lower, upper } => {
                let inside = x
                    .iter()
                    .zip(lower.iter().zip(upper.iter()))
                    .all(|(v, (lo, hi))| *lo <= *v && *v <= *hi);
                if inside {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
            Self::L0 { mu } => *mu * x.iter().filter(|v| **v != 0.0).count() as f64,
            Self::Sphere => {
                if (x.norm() - 1.0).abs() <= SPHERE_TOL {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
        }
    }

    /// A global minimizer of `f(x) + (weight/2) |x - center|^2`.
    ///
    /// Ties are broken deterministically: the l0 prox zeroes a coordinate that
    /// sits exactly on the threshold, and the sphere prox maps the origin to
    /// the first basis vector.
    pub fn scaled_prox(&self, center: &Vector, weight: f64) -> Result<Vector> {
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::Domain(format!("prox weight must be positive, got {weight}")));
        }
        match self {
            Self::Quadratic { p, q } => {
                let n = center.len();
                let lhs = p + Matrix::identity(n, n) * weight;
                let rhs = center * weight - q;
                solve_spd(lhs, &rhs, "quadratic prox")
            }
            Self::Box { lower, upper } => Ok(Vector::from_fn(center.len(), |i, _| {
                center[i].clamp(lower[i], upper[i])
            })),
            Self::L0 { mu } => {
                let threshold = 2.0 * mu / weight;
                Ok(center.map(|c| if c * c > threshold { c } else { 0.0 }))
            }
            Self::Sphere => {
                let norm = center.norm();
                if norm > 0.0 {
                    Ok(center / norm)
                } else {
                    let mut e = Vector::zeros(center.len());
                    if !e.is_empty() {
                        e[0] = 1.0;
                    }
                    Ok(e)
                }
            }
        }
    }

    /// `(P, q)` when `f` is the convex quadratic family.
    pub fn as_quadratic(&self) -> Option<(&Matrix, &Vector)> {
        match self {
            Self::Quadratic { p, q } => Some((p, q)),
            _ => None,
        }
    }

    /// Global minimizer of `f(x) + <linear, x> + 1/2 x^T metric x`, available
    /// for the quadratic family (requires `P + metric` positive definite).
    pub fn metric_prox(&self, linear: &Vector, metric: &Matrix) -> Option<Result<Vector>> {
        let (p, q) = self.as_quadratic()?;
        Some(solve_spd(p + metric, &(-(linear + q)), "quadratic metric prox"))
    }

    /// Distance between `x` and the prox evaluated at `x + v / weight`.
    ///
    /// Zero means `x` is a global minimizer of `f + (weight/2)|. - (x + v/weight)|^2`,
    /// which certifies `v` as a subgradient of `f` at `x`.
    pub fn prox_fixed_point_gap(&self, x: &Vector, v: &Vector, weight: f64) -> Result<f64> {
        let center = x + v / weight;
        Ok((self.scaled_prox(&center, weight)? - x).norm())
    }

    pub fn family(&self) -> &'static str {
        match self {
            Self::Quadratic { .. } => "quadratic",
            Self::Box { .. } => "box",
            Self::L0 { .. } => "l0",
            Self::Sphere => "sphere",
        }
    }

    fn check_dims(&self, n: usize) -> Result<()> {
        match self {
            Self::Quadratic { p, q } => {
                if p.shape() != (n, n) {
                    return Err(Error::dim("f quadratic matrix P", n, p.nrows()));
                }
                if q.len() != n {
                    return Err(Error::dim("f linear term q", n, q.len()));
                }
                if !is_symmetric(p, 1e-12) {
                    return Err(Error::Config("f quadratic matrix P must be symmetric".into()));
                }
                let (lo, hi) = symmetric_extremes(p);
                if lo < -1e-10 * (1.0 + hi.abs()) {
                    return Err(Error::Config(format!(
                        "f quadratic matrix P must be positive semidefinite (lambda_min = {lo:.3e})"
                    )));
                }
            }
            Self::Box { lower, upper } => {
                if lower.len() != n || upper.len() != n {
                    return Err(Error::dim("f box bounds", n, lower.len().min(upper.len())));
                }
                if lower.iter().zip(upper.iter()).any(|(lo, hi)| lo > hi) {
                    return Err(Error::Config("box lower bound exceeds upper bound".into()));
                }
            }
            Self::L0 { mu } => {
                if !(*mu >= 0.0 && mu.is_finite()) {
                    return Err(Error::Config(format!("l0 weight must be nonnegative, got {mu}")));
                }
            }
            Self::Sphere => {
                if n == 0 {
                    return Err(Error::Config("sphere indicator needs n >= 1".into()));
                }
            }
        }
        Ok(())
    }
}

/// Smooth term `g`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum SmoothTerm {
    /// `1/2 y^T Q y + c^T y + constant`, `Q` symmetric (possibly indefinite).
    Quadratic {
        #[serde(rename = "Q", with = "linalg::serde_matrix")]
        q: Matrix,
        #[serde(with = "linalg::serde_vector")]
        c: Vector,
        #[serde(default)]
        constant: f64,
    },
    /// `1/2 |y|^2 + a * sum_i cos(y_i)`.
    CosinePerturbed { a: f64 },
}

impl SmoothTerm {
    pub fn value(&self, y: &Vector) -> f64 {
        match self {
            Self::Quadratic { q, c, constant } => 0.5 * y.dot(&(q * y)) + c.dot(y) + constant,
            Self::CosinePerturbed { a } => {
                0.5 * y.norm_squared() + a * y.iter().map(|v| v.cos()).sum::<f64>()
            }
        }
    }

    pub fn gradient(&self, y: &Vector) -> Vector {
        match self {
            Self::Quadratic { q, c, .. } => q * y + c,
            Self::CosinePerturbed { a } => y.map(|v| v - a * v.sin()),
        }
    }

    pub fn hessian(&self, y: &Vector) -> Matrix {
        match self {
            Self::Quadratic { q, .. } => q.clone(),
            Self::CosinePerturbed { a } => {
                Matrix::from_diagonal(&y.map(|v| 1.0 - a * v.cos()))
            }
        }
    }

    pub fn is_quadratic(&self) -> bool {
        matches!(self, Self::Quadratic { .. })
    }

    /// Exact `(L, m)` for the family: gradient Lipschitz constant and weak
    /// convexity modulus.
    pub fn exact_constants(&self) -> (f64, f64) {
        match self {
            Self::Quadratic { q, .. } => {
                let (lo, hi) = symmetric_extremes(q);
                (lo.abs().max(hi.abs()), (-lo).max(0.0))
            }
            Self::CosinePerturbed { a } => (1.0 + a.abs(), (a.abs() - 1.0).max(0.0)),
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            Self::Quadratic { .. } => "quadratic",
            Self::CosinePerturbed { .. } => "cosine-perturbed",
        }
    }

    fn check_dims(&self, p: usize) -> Result<()> {
        match self {
            Self::Quadratic { q, c, constant } => {
                if q.shape() != (p, p) {
                    return Err(Error::dim("g quadratic matrix Q", p, q.nrows()));
                }
                if c.len() != p {
                    return Err(Error::dim("g linear term c", p, c.len()));
                }
                if !constant.is_finite() {
                    return Err(Error::NonFinite("g constant"));
                }
                if !is_symmetric(q, 1e-12) {
                    return Err(Error::Config("g quadratic matrix Q must be symmetric".into()));
                }
            }
            Self::CosinePerturbed { a } => {
                if !a.is_finite() {
                    return Err(Error::NonFinite("cosine amplitude"));
                }
            }
        }
        Ok(())
    }
}

/// `g` together with its declared constants `L > 0` and `m >= 0`.
///
/// When the constants are omitted in JSON they are computed exactly from the
/// family data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSmooth", into = "RawSmooth")]
pub struct SmoothOracle {
    pub term: SmoothTerm,
    pub lipschitz: f64,
    pub weak_convexity: f64,
}

#[derive(Serialize, Deserialize)]
struct RawSmooth {
    #[serde(flatten)]
    term: SmoothTerm,
    #[serde(default, rename = "L", skip_serializing_if = "Option::is_none")]
    lipschitz: Option<f64>,
    #[serde(default, rename = "m", skip_serializing_if = "Option::is_none")]
    weak_convexity: Option<f64>,
}

impl TryFrom<RawSmooth> for SmoothOracle {
    type Error = Error;

    fn try_from(raw: RawSmooth) -> Result<Self> {
        let (l, m) = raw.term.exact_constants();
        Self::with_constants(raw.term, raw.lipschitz.unwrap_or(l), raw.weak_convexity.unwrap_or(m))
    }
}

impl From<SmoothOracle> for RawSmooth {
    fn from(g: SmoothOracle) -> Self {
        RawSmooth {
            term: g.term,
            lipschitz: Some(g.lipschitz),
            weak_convexity: Some(g.weak_convexity),
        }
    }
}

impl SmoothOracle {
    pub fn new(term: SmoothTerm) -> Self {
        let (l, m) = term.exact_constants();
        // Degenerate g = const has L = 0; any positive L is valid for it.
        let l = if l > 0.0 { l } else { f64::MIN_POSITIVE.sqrt() };
        Self {
            term,
            lipschitz: l,
            weak_convexity: m,
        }
    }

    pub fn with_constants(term: SmoothTerm, lipschitz: f64, weak_convexity: f64) -> Result<Self> {
        if !(lipschitz > 0.0 && lipschitz.is_finite()) {
            return Err(Error::Config(format!("L must be positive, got {lipschitz}")));
        }
        if !(weak_convexity >= 0.0 && weak_convexity.is_finite()) {
            return Err(Error::Config(format!("m must be nonnegative, got {weak_convexity}")));
        }
        Ok(Self {
            term,
            lipschitz,
            weak_convexity,
        })
    }

    pub fn value(&self, y: &Vector) -> f64 {
        self.term.value(y)
    }

    pub fn gradient(&self, y: &Vector) -> Vector {
        self.term.gradient(y)
    }

    pub fn hessian(&self, y: &Vector) -> Matrix {
        self.term.hessian(y)
    }
}

/// One instance of `min f(x) + g(y) s.t. A x + B y = b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemInstance {
    #[serde(rename = "A", with = "linalg::serde_matrix")]
    pub a: Matrix,
    #[serde(rename = "B", with = "linalg::serde_matrix")]
    pub b_mat: Matrix,
    #[serde(with = "linalg::serde_vector")]
    pub b: Vector,
    pub f: NonsmoothTerm,
    pub g: SmoothOracle,
    /// Penalty level at which the infimum of `f + g + (beta_bar/2)|Ax+By-b|^2` is finite.
    pub beta_bar: f64,
    /// A lower bound on that infimum.
    #[serde(rename = "L_bar_lower")]
    pub l_bar_lower: f64,
}

impl ProblemInstance {
    pub fn new(
        a: Matrix,
        b_mat: Matrix,
        b: Vector,
        f: NonsmoothTerm,
        g: SmoothOracle,
        beta_bar: f64,
        l_bar_lower: f64,
    ) -> Result<Self> {
        let inst = Self {
            a,
            b_mat,
            b,
            f,
            g,
            beta_bar,
            l_bar_lower,
        };
        inst.check()?;
        Ok(inst)
    }

    /// Structural checks: shapes, finiteness and family data.
    pub fn check(&self) -> Result<()> {
        let l = self.b.len();
        if self.a.nrows() != l {
            return Err(Error::dim("rows of A", l, self.a.nrows()));
        }
        if self.b_mat.nrows() != l {
            return Err(Error::dim("rows of B", l, self.b_mat.nrows()));
        }
        if self.n() == 0 || self.p() == 0 || l == 0 {
            return Err(Error::Config("dimensions n, p, l must all be at least 1".into()));
        }
        if !linalg::all_finite(self.a.as_slice())
            || !linalg::all_finite(self.b_mat.as_slice())
            || !linalg::all_finite(self.b.as_slice())
        {
            return Err(Error::NonFinite("problem data"));
        }
        if !(self.beta_bar >= 0.0 && self.beta_bar.is_finite()) {
            return Err(Error::Config(format!("beta_bar must be finite and >= 0, got {}", self.beta_bar)));
        }
        if !self.l_bar_lower.is_finite() {
            return Err(Error::Config("L_bar_lower must be finite".into()));
        }
        self.f.check_dims(self.n())?;
        self.g.term.check_dims(self.p())?;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.a.ncols()
    }

    pub fn p(&self) -> usize {
        self.b_mat.ncols()
    }

    pub fn l(&self) -> usize {
        self.b.len()
    }

    pub fn residual(&self, x: &Vector, y: &Vector) -> Vector {
        &self.a * x + &self.b_mat * y - &self.b
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let inst: Self = serde_json::from_str(text)?;
        inst.check()?;
        Ok(inst)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Augmented Lagrangian value together with the magnitude of its summands,
/// which sets the floating-point scale when comparing two values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagrangianValue {
    pub value: f64,
    pub magnitude: f64,
}

pub fn aug_lagrangian_parts(
    inst: &ProblemInstance,
    beta: f64,
    x: &Vector,
    y: &Vector,
    lambda: &Vector,
) -> Result<LagrangianValue> {
    check_len("x", inst.n(), x)?;
    check_len("y", inst.p(), y)?;
    check_len("lambda", inst.l(), lambda)?;
    let fx = inst.f.value(x);
    let gy = inst.g.value(y);
    if !gy.is_finite() {
        return Err(Error::NonFinite("g value"));
    }
    let r = inst.residual(x, y);
    let coupling = lambda.dot(&r);
    let penalty = 0.5 * beta * r.norm_squared();
    Ok(LagrangianValue {
        value: fx + gy - coupling + penalty,
        magnitude: fx.abs() + gy.abs() + coupling.abs() + penalty,
    })
}

/// `L_beta(x, y, lambda) = f(x) + g(y) - <lambda, Ax+By-b> + (beta/2)|Ax+By-b|^2`.
///
/// Returns `+inf` when `x` is outside `dom f`.
pub fn aug_lagrangian(
    inst: &ProblemInstance,
    beta: f64,
    x: &Vector,
    y: &Vector,
    lambda: &Vector,
) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    Ok(aug_lagrangian_parts(inst, beta, x, y, lambda)?.value)
}

/// Initial gap `L_beta(x0, y0, lambda0) - L_bar_lower`; `+inf` if `x0` is outside `dom f`.
pub fn delta0(
    inst: &ProblemInstance,
    beta: f64,
    x0: &Vector,
    y0: &Vector,
    lambda0: &Vector,
) -> Result<f64> {
    if beta < inst.beta_bar {
        return Err(Error::Domain(format!(
            "beta = {beta} is below beta_bar = {}",
            inst.beta_bar
        )));
    }
    Ok(aug_lagrangian(inst, beta, x0, y0, lambda0)? - inst.l_bar_lower)
}

fn check_len(what: &'static str, expected: usize, v: &Vector) -> Result<()> {
    if v.len() != expected {
        return Err(Error::dim(what, expected, v.len()));
    }
    Ok(())
}

pub(crate) fn solve_spd(m: Matrix, rhs: &Vector, what: &'static str) -> Result<Vector> {
    match m.cholesky() {
        Some(ch) => Ok(ch.solve(rhs)),
        None => Err(Error::Config(format!("{what}: system matrix is not positive definite"))),
    }
}

/// Pass/fail for one assumption with the quantity it was judged on.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssumptionCheck {
    pub name: String,
    pub pass: bool,
    /// Worst observed value of the tested quantity; its meaning is per assumption.
    pub worst: f64,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<AssumptionCheck>,
    pub a1_gap: f64,
    pub lipschitz: f64,
    pub weak_convexity: f64,
    pub beta_bar: f64,
    pub l_bar_lower: f64,
    pub samples: usize,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&AssumptionCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&AssumptionCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

pub const DEFAULT_VALIDATION_SAMPLES: usize = 200;
pub const DEFAULT_VALIDATION_TOL: f64 = 1e-6;
pub const A1_GAP_TOL: f64 = 1e-8;
const VALIDATION_SEED: u64 = 0x0a11_ce55;

/// Checks the standing assumptions on `samples` random points:
/// A0 `f` is proper; A1 `B != 0` and `Im(B)` contains `b` and `Im(A)`;
/// A2 the projected gradient of `g` is `L`-Lipschitz; A3 `g + m/2 |.|^2` is
/// convex; A4 the declared lower bound on the penalized objective holds.
///
/// A2 and A3 are universally quantified, so sampling can only falsify them.
/// Each sampled violation is normalized by the magnitude of the quantities
/// involved; an assumption fails when the worst normalized violation exceeds
/// `tol`.
pub fn validate_assumptions(inst: &ProblemInstance, samples: usize, tol: f64) -> ValidationReport {
    validate_assumptions_seeded(inst, samples, tol, VALIDATION_SEED)
}

pub fn validate_assumptions_seeded(
    inst: &ProblemInstance,
    samples: usize,
    tol: f64,
    seed: u64,
) -> ValidationReport {
    let samples = samples.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let (n, p) = (inst.n(), inst.p());
    let lip = inst.g.lipschitz;
    let m = inst.g.weak_convexity;

    // A0: f proper, witnessed by a finite value at a prox point.
    let witness = inst.f.scaled_prox(&Vector::zeros(n), 1.0);
    let f_witness = witness.as_ref().map(|x| inst.f.value(x)).unwrap_or(f64::INFINITY);
    checks.push(AssumptionCheck {
        name: "A0".into(),
        pass: f_witness.is_finite(),
        worst: f_witness,
        detail: "f value at prox_f(0)".into(),
    });

    // A1: B != 0 and Im(B) contains b and Im(A).
    let b_nonzero = inst.b_mat.amax() > 0.0;
    let a1_gap = range_inclusion_gap(&inst.b_mat, &inst.a, &inst.b).unwrap_or(f64::INFINITY);
    checks.push(AssumptionCheck {
        name: "A1".into(),
        pass: b_nonzero && a1_gap <= A1_GAP_TOL,
        worst: a1_gap,
        detail: if b_nonzero {
            "relative distance of b and columns of A from Im(B)".into()
        } else {
            "B is the zero matrix".into()
        },
    });

    let row_space = RangeProjector::row_space(&inst.b_mat);
    let mut a2_worst = f64::NEG_INFINITY;
    let mut a3_worst = f64::NEG_INFINITY;
    let mut grad_worst = f64::NEG_INFINITY;
    let mut a4_worst = f64::NEG_INFINITY;
    let scales = [0.1, 1.0, 10.0];
    for s in 0..samples {
        let scale = scales[s % scales.len()];
        let y = random_vector(&mut rng, p, scale);
        let step = scales[(s / scales.len()) % scales.len()];
        let y2 = &y + random_vector(&mut rng, p, step);
        let d = &y2 - &y;
        let g1 = inst.g.gradient(&y);
        let g2 = inst.g.gradient(&y2);

        // A2 on the projected gradient difference.
        let dg = &g2 - &g1;
        let proj = row_space.project(&dg).unwrap_or(dg);
        let lhs = proj.norm();
        let rhs = lip * d.norm();
        let denom = (lhs + rhs).max(f64::MIN_POSITIVE);
        a2_worst = a2_worst.max((lhs - rhs) / denom);

        // A3 lower curvature.
        let v1 = inst.g.value(&y);
        let v2 = inst.g.value(&y2);
        let lin = g1.dot(&d);
        let curv = 0.5 * m * d.norm_squared();
        let gap = v2 - v1 - lin + curv;
        let mag = v1.abs() + v2.abs() + lin.abs() + curv + d.norm_squared();
        a3_worst = a3_worst.max(-gap / mag.max(f64::MIN_POSITIVE));

        // Gradient against central differences, on a subset of samples.
        if s < 20 {
            let h = 1e-5 * (1.0 + y.amax());
            let mut fd = Vector::zeros(p);
            for i in 0..p {
                let mut yp = y.clone();
                let mut ym = y.clone();
                yp[i] += h;
                ym[i] -= h;
                fd[i] = (inst.g.value(&yp) - inst.g.value(&ym)) / (2.0 * h);
            }
            let err = (&fd - &g1).norm();
            let allowed = (1e-6f64).max(1e-4 * g1.norm());
            grad_worst = grad_worst.max(err / allowed);
        }

        // A4: the declared lower bound must not be beaten by a sampled point.
        let xc = random_vector(&mut rng, n, scale);
        if let Ok(x) = inst.f.scaled_prox(&xc, 1.0) {
            let fx = inst.f.value(&x);
            if fx.is_finite() {
                let r = inst.residual(&x, &y);
                let obj = fx + v1 + 0.5 * inst.beta_bar * r.norm_squared();
                let mag = 1.0 + fx.abs() + v1.abs() + inst.l_bar_lower.abs();
                a4_worst = a4_worst.max((inst.l_bar_lower - obj) / mag);
            }
        }
    }

    checks.push(AssumptionCheck {
        name: "A2".into(),
        pass: a2_worst <= tol,
        worst: a2_worst,
        detail: format!("worst relative excess of |P(grad g(y') - grad g(y))| over L|y'-y|, L = {lip}"),
    });
    checks.push(AssumptionCheck {
        name: "A3".into(),
        pass: a3_worst <= tol,
        worst: a3_worst,
        detail: format!("worst relative violation of the lower curvature bound, m = {m}"),
    });
    checks.push(AssumptionCheck {
        name: "gradient".into(),
        pass: grad_worst <= 1.0,
        worst: grad_worst,
        detail: "central-difference error over max(1e-6, 1e-4|grad g|)".into(),
    });
    let a4_ok = inst.beta_bar >= 0.0 && inst.beta_bar.is_finite() && inst.l_bar_lower.is_finite();
    checks.push(AssumptionCheck {
        name: "A4".into(),
        pass: a4_ok && a4_worst <= tol,
        worst: a4_worst,
        detail: "worst relative amount by which a sampled point undercuts L_bar_lower".into(),
    });

    ValidationReport {
        checks,
        a1_gap,
        lipschitz: lip,
        weak_convexity: m,
        beta_bar: inst.beta_bar,
        l_bar_lower: inst.l_bar_lower,
        samples,
    }
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize, scale: f64) -> Vector {
    Vector::from_fn(len, |_, _| scale * rng.sample::<f64, _>(StandardNormal))
}
