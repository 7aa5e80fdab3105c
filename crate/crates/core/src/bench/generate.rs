//! Seeded instance families. Every family builds `A = B C` and `b = B d`, so
//! the range inclusion holds by construction, and supplies a lower bound on
//! the infimum of `f + g + beta_bar/2 |Ax + By - b|^2`.

use std::fmt;
use std::str::FromStr;

use nalgebra::SymmetricEigen;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vector};
use crate::problem::{
    validate_assumptions, NonsmoothTerm, ProblemInstance, SmoothOracle, SmoothTerm,
    DEFAULT_VALIDATION_SAMPLES, DEFAULT_VALIDATION_TOL,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Convex quadratic `f`, quadratic `g` with negative curvature.
    QuadQuad,
    /// `f = mu |x|_0`, `g = 1/2 |D y - e|^2`.
    L0Ls,
    /// `f` = box indicator, `g` = cosine-perturbed quadratic.
    BoxCos,
    /// `f` = unit-sphere indicator, `g` quadratic with negative curvature.
    SphereQuad,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::QuadQuad, Family::L0Ls, Family::BoxCos, Family::SphereQuad];

    pub fn name(self) -> &'static str {
        match self {
            Family::QuadQuad => "quad-quad",
            Family::L0Ls => "l0-ls",
            Family::BoxCos => "box-cos",
            Family::SphereQuad => "sphere-quad",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown family '{s}' (expected quad-quad, l0-ls, box-cos or sphere-quad)")))
    }
}

/// Family knobs; each family reads the ones it needs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GeneratorParams {
    /// Rank of `B`; defaults to `min(l, p)`.
    pub rank: Option<usize>,
    /// Spectral norm of `C` in `A = B C`.
    pub coupling: f64,
    /// Magnitude of the most negative eigenvalue of `Q` (quadratic `g`).
    pub neg_curvature: f64,
    /// Largest eigenvalue of `Q` before the null-space correction.
    pub pos_curvature: f64,
    /// `l0` weight.
    pub mu: f64,
    /// Rows of `D` in `l0-ls`; defaults to `p + 2`.
    pub rows: Option<usize>,
    /// Cosine amplitude.
    pub a: f64,
    pub lower: f64,
    pub upper: f64,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        Self {
            rank: None,
            coupling: 0.5,
            neg_curvature: 0.5,
            pos_curvature: 2.0,
            mu: 0.1,
            rows: None,
            a: 2.0,
            lower: -1.0,
            upper: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub p: usize,
    pub l: usize,
    pub seed: u64,
    #[serde(default)]
    pub params: GeneratorParams,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, p: usize, l: usize, seed: u64) -> Self {
        Self {
            family,
            n,
            p,
            l,
            seed,
            params: GeneratorParams::default(),
        }
    }

    pub fn generate(&self) -> Result<ProblemInstance> {
        generate_instance(self.family, (self.n, self.p, self.l), self.seed, &self.params)
    }
}

/// Builds a validated instance of `family` with dimensions `(n, p, l)`.
pub fn generate_instance(
    family: Family,
    dims: (usize, usize, usize),
    seed: u64,
    params: &GeneratorParams,
) -> Result<ProblemInstance> {
    let (n, p, l) = dims;
    if n == 0 || p == 0 || l == 0 {
        return Err(Error::Generator(format!("dimensions must be at least 1, got ({n}, {p}, {l})")));
    }
    let rank = params.rank.unwrap_or(p.min(l));
    if rank == 0 || rank > p.min(l) {
        return Err(Error::Generator(format!("rank of B must be in 1..={}, got {rank}", p.min(l))));
    }
    if !(params.coupling >= 0.0 && params.neg_curvature >= 0.0 && params.pos_curvature > 0.0) {
        return Err(Error::Generator("coupling, neg_curvature must be >= 0 and pos_curvature > 0".into()));
    }
    let inst = match family {
        Family::QuadQuad if n == 1 && p == 1 && l == 1 => scalar_fixture(),
        Family::QuadQuad => quad_quad(n, p, l, rank, seed, params)?,
        Family::L0Ls => l0_ls(n, p, l, rank, seed, params)?,
        Family::BoxCos => box_cos(n, p, l, rank, seed, params)?,
        Family::SphereQuad => sphere_quad(n, p, l, rank, seed, params)?,
    };
    let report = validate_assumptions(&inst, DEFAULT_VALIDATION_SAMPLES, DEFAULT_VALIDATION_TOL);
    if let Some(bad) = report.failures().first() {
        return Err(Error::Generator(format!(
            "{family} instance fails {}: {}",
            bad.name, bad.detail
        )));
    }
    Ok(inst)
}

/// `A = B = 1`, `b = 0`, `f = x^2/2`, `g = y^2/2`, `beta_bar = 0`, infimum 0.
pub fn scalar_fixture() -> ProblemInstance {
    ProblemInstance::new(
        Matrix::from_element(1, 1, 1.0),
        Matrix::from_element(1, 1, 1.0),
        Vector::zeros(1),
        NonsmoothTerm::Quadratic {
            p: Matrix::from_element(1, 1, 1.0),
            q: Vector::zeros(1),
        },
        SmoothOracle::new(SmoothTerm::Quadratic {
            q: Matrix::from_element(1, 1, 1.0),
            c: Vector::zeros(1),
            constant: 0.0,
        }),
        0.0,
        0.0,
    )
    .expect("fixture is well formed")
}

struct Coupled {
    b_mat: Matrix,
    a: Matrix,
    b: Vector,
    /// Orthonormal basis of `ker B`.
    null: Matrix,
}

fn gaussian(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.sample::<f64, _>(StandardNormal))
}

fn gaussian_vec(rng: &mut ChaCha8Rng, len: usize) -> Vector {
    Vector::from_fn(len, |_, _| rng.sample::<f64, _>(StandardNormal))
}

/// `rows x cols` matrix with orthonormal columns.
fn orthonormal(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    let q = gaussian(rng, rows, cols).qr().q();
    q.columns(0, cols).into_owned()
}

/// `B = U diag(s) V^T` with singular values in `[0.5, 2]`, `A = B C`,
/// `|C| = coupling`, `b = B d`.
fn coupled(rng: &mut ChaCha8Rng, n: usize, p: usize, l: usize, rank: usize, coupling: f64) -> Coupled {
    let u = orthonormal(rng, l, rank);
    let v = orthonormal(rng, p, rank);
    let s = Vector::from_fn(rank, |_, _| rng.random_range(0.5..2.0));
    let b_mat = &u * Matrix::from_diagonal(&s) * v.transpose();
    let mut c = gaussian(rng, p, n);
    let spec = linalg::reduced_svd(&c).values.max();
    if spec > 0.0 {
        c *= coupling / spec;
    }
    let a = &b_mat * c;
    let d = gaussian_vec(rng, p);
    let b = &b_mat * d;
    let null = null_basis(&b_mat);
    Coupled { b_mat, a, b, null }
}

fn null_basis(b_mat: &Matrix) -> Matrix {
    let p = b_mat.ncols();
    let eig = SymmetricEigen::new(b_mat.transpose() * b_mat);
    let top = eig.eigenvalues.amax();
    let cols: Vec<Vector> = (0..p)
        .filter(|&i| eig.eigenvalues[i] <= linalg::RANK_TOL * top.max(1.0))
        .map(|i| eig.eigenvectors.column(i).into_owned())
        .collect();
    if cols.is_empty() {
        Matrix::zeros(p, 0)
    } else {
        Matrix::from_columns(&cols)
    }
}

/// Symmetric `Q` with spectrum in `[-neg, pos]` (both ends attained), then
/// lifted by `(neg + 1) N N^T` on `ker B` so the penalty controls every
/// direction.
fn indefinite_q(rng: &mut ChaCha8Rng, p: usize, params: &GeneratorParams, null: &Matrix) -> Matrix {
    let w = orthonormal(rng, p, p);
    let mut eig = Vector::from_fn(p, |_, _| rng.random_range(-params.neg_curvature..=params.pos_curvature));
    eig[0] = params.pos_curvature;
    if p > 1 {
        eig[p - 1] = -params.neg_curvature;
    }
    let q = &w * Matrix::from_diagonal(&eig) * w.transpose();
    let lifted = q + null * null.transpose() * (params.neg_curvature + 1.0);
    symmetrize(lifted)
}

fn symmetrize(m: Matrix) -> Matrix {
    (&m + m.transpose()) * 0.5
}

/// Smallest eigenvalue of a symmetric matrix.
fn min_eig(m: &Matrix) -> f64 {
    linalg::symmetric_extremes(m).0
}

/// Smallest `beta_bar` on the doubling grid `0, 1e-2, 2e-2, ...` making
/// `base + beta_bar * pen` positive definite, then doubled once for margin.
fn penalty_threshold(base: &Matrix, pen: &Matrix) -> Result<f64> {
    let scale = |m: &Matrix| m.amax().max(1.0);
    let pd = |beta: f64| {
        let m = base + pen * beta;
        min_eig(&m) > 1e-8 * scale(&m)
    };
    if pd(0.0) {
        return Ok(0.0);
    }
    let mut beta = 1e-2;
    while beta < 1e12 {
        if pd(beta) {
            return Ok(2.0 * beta);
        }
        beta *= 2.0;
    }
    Err(Error::Generator(
        "no penalty makes the penalized objective bounded below (g is unbounded below along ker of the penalty)".into(),
    ))
}

fn quad_quad(n: usize, p: usize, l: usize, rank: usize, seed: u64, params: &GeneratorParams) -> Result<ProblemInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cp = coupled(&mut rng, n, p, l, rank, params.coupling);
    let m = gaussian(&mut rng, n, n);
    let pm = symmetrize(m.transpose() * &m / n as f64 + Matrix::identity(n, n) * (1.0 + params.neg_curvature));
    let qv = gaussian_vec(&mut rng, n);
    let q = indefinite_q(&mut rng, p, params, &cp.null);
    let c = gaussian_vec(&mut rng, p);

    // joint Hessian of f + g + beta_bar/2 |Ax + By - b|^2 in z = (x, y)
    let mut base = Matrix::zeros(n + p, n + p);
    base.view_mut((0, 0), (n, n)).copy_from(&pm);
    base.view_mut((n, n), (p, p)).copy_from(&q);
    let mut ab = Matrix::zeros(l, n + p);
    ab.view_mut((0, 0), (l, n)).copy_from(&cp.a);
    ab.view_mut((0, n), (l, p)).copy_from(&cp.b_mat);
    let pen = ab.transpose() * &ab;
    let beta_bar = penalty_threshold(&base, &pen)?;

    let k = base + &pen * beta_bar;
    let mut h = Vector::zeros(n + p);
    h.rows_mut(0, n).copy_from(&qv);
    h.rows_mut(n, p).copy_from(&c);
    h -= ab.transpose() * &cp.b * beta_bar;
    let chol = k
        .cholesky()
        .ok_or_else(|| Error::Generator("joint Hessian lost definiteness".into()))?;
    // min 1/2 z^T K z + h^T z + beta_bar/2 |b|^2 = beta_bar/2 |b|^2 - 1/2 h^T K^-1 h
    let l_bar = 0.5 * beta_bar * cp.b.norm_squared() - 0.5 * h.dot(&chol.solve(&h));

    ProblemInstance::new(
        cp.a,
        cp.b_mat,
        cp.b,
        NonsmoothTerm::Quadratic { p: pm, q: qv },
        SmoothOracle::new(SmoothTerm::Quadratic { q, c, constant: 0.0 }),
        beta_bar,
        l_bar,
    )
}

fn l0_ls(n: usize, p: usize, l: usize, rank: usize, seed: u64, params: &GeneratorParams) -> Result<ProblemInstance> {
    if !(params.mu >= 0.0) {
        return Err(Error::Generator("mu must be nonnegative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cp = coupled(&mut rng, n, p, l, rank, params.coupling);
    let rows = params.rows.unwrap_or(p + 2);
    if rows == 0 {
        return Err(Error::Generator("rows of D must be at least 1".into()));
    }
    let d = gaussian(&mut rng, rows, p) / (rows as f64).sqrt();
    let e = gaussian_vec(&mut rng, rows);
    // g(y) = 1/2 |D y - e|^2 as 1/2 y^T D^T D y - (D^T e)^T y + 1/2 |e|^2
    let q = symmetrize(d.transpose() * &d);
    let c = -(d.transpose() * &e);
    let constant = 0.5 * e.norm_squared();
    // inf f + g = least-squares residual (f >= 0 with f(0) = 0)
    let y_star = linalg::reduced_svd(&d).solve_min_norm(&e)?;
    let ls = 0.5 * (&d * y_star - &e).norm_squared();
    let l_bar = ls - 1e-12 * (1.0 + constant);

    ProblemInstance::new(
        cp.a,
        cp.b_mat,
        cp.b,
        NonsmoothTerm::L0 { mu: params.mu },
        SmoothOracle::new(SmoothTerm::Quadratic { q, c, constant }),
        0.0,
        l_bar,
    )
}

/// `min_t 1/2 t^2 + a cos t`, accurate to rounding.
pub fn cosine_scalar_min(a: f64) -> f64 {
    let phi = |t: f64| 0.5 * t * t + a * t.cos();
    if a <= 1.0 {
        // convex for |a| <= 1, and for a < -1 the origin is still the global minimizer
        return phi(0.0);
    }
    // minimizers solve t = a sin t with |t| <= a; grid then Newton
    let hi = a + 1.0;
    let steps = 4096;
    let mut best_t = 0.0;
    let mut best = phi(0.0);
    for i in 1..=steps {
        let t = hi * i as f64 / steps as f64;
        if phi(t) < best {
            best = phi(t);
            best_t = t;
        }
    }
    let mut t = best_t;
    for _ in 0..50 {
        let g = t - a * t.sin();
        let h = 1.0 - a * t.cos();
        if h <= 0.0 {
            break;
        }
        let next = t - g / h;
        if (next - t).abs() <= 1e-15 * t.abs().max(1.0) {
            t = next;
            break;
        }
        t = next;
    }
    best.min(phi(t))
}

fn box_cos(n: usize, p: usize, l: usize, rank: usize, seed: u64, params: &GeneratorParams) -> Result<ProblemInstance> {
    if !(params.lower <= params.upper) {
        return Err(Error::Generator("box lower bound exceeds upper bound".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cp = coupled(&mut rng, n, p, l, rank, params.coupling);
    let per = cosine_scalar_min(params.a);
    let l_bar = p as f64 * per - 1e-12 * (1.0 + (p as f64 * per).abs());
    ProblemInstance::new(
        cp.a,
        cp.b_mat,
        cp.b,
        NonsmoothTerm::Box {
            lower: Vector::from_element(n, params.lower),
            upper: Vector::from_element(n, params.upper),
        },
        SmoothOracle::new(SmoothTerm::CosinePerturbed { a: params.a }),
        0.0,
        l_bar,
    )
}

fn sphere_quad(n: usize, p: usize, l: usize, rank: usize, seed: u64, params: &GeneratorParams) -> Result<ProblemInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cp = coupled(&mut rng, n, p, l, rank, params.coupling);
    let q = indefinite_q(&mut rng, p, params, &cp.null);
    let c = gaussian_vec(&mut rng, p);
    let btb = cp.b_mat.transpose() * &cp.b_mat;
    let beta_bar = penalty_threshold(&q, &btb)?;

    // Minimizing over y for fixed x leaves phi(x) = 1/2 x^T S x + s^T x + s0;
    // on the sphere phi >= lambda_min(S)/2 - |s| + s0.
    let h_mat = &q + &btb * beta_bar;
    let chol = h_mat
        .cholesky()
        .ok_or_else(|| Error::Generator("y-Hessian lost definiteness".into()))?;
    let j = cp.b_mat.transpose() * &cp.a * beta_bar;
    let h0 = &c - cp.b_mat.transpose() * &cp.b * beta_bar;
    let hinv_j = chol.solve(&j);
    let hinv_h0 = chol.solve(&h0);
    let s_mat = symmetrize(cp.a.transpose() * &cp.a * beta_bar - j.transpose() * &hinv_j);
    let s_vec = -(cp.a.transpose() * &cp.b * beta_bar) - j.transpose() * &hinv_h0;
    let s0 = 0.5 * beta_bar * cp.b.norm_squared() - 0.5 * h0.dot(&hinv_h0);
    let bound = 0.5 * min_eig(&s_mat) - s_vec.norm() + s0;
    let l_bar = bound - 1e-10 * (1.0 + bound.abs());

    ProblemInstance::new(
        cp.a,
        cp.b_mat,
        cp.b,
        NonsmoothTerm::Sphere,
        SmoothOracle::new(SmoothTerm::Quadratic { q, c, constant: 0.0 }),
        beta_bar,
        l_bar,
    )
}
