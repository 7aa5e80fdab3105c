//! Independent oracles shared by the integration tests. Nothing here calls
//! into the closed-form code paths it is compared against.

#![allow(dead_code)]

use padmm::linalg::{Matrix, Vector};
use rand::Rng;
use rand_distr::StandardNormal;

pub fn gaussian_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.sample::<f64, _>(StandardNormal))
}

pub fn gaussian_vector<R: Rng>(rng: &mut R, len: usize) -> Vector {
    Vector::from_fn(len, |_, _| rng.sample::<f64, _>(StandardNormal))
}

/// `rows x cols` matrix of exact rank `rank` with singular values in `[lo, hi]`.
pub fn matrix_of_rank<R: Rng>(rng: &mut R, rows: usize, cols: usize, rank: usize, lo: f64, hi: f64) -> Matrix {
    let u = gaussian_matrix(rng, rows, rank).qr().q();
    let v = gaussian_matrix(rng, cols, rank).qr().q();
    let s = Matrix::from_diagonal(&Vector::from_fn(rank, |_, _| rng.random_range(lo..=hi)));
    u * s * v.transpose()
}

/// Pseudo-inverse of a symmetric matrix from its eigendecomposition.
pub fn symmetric_pinv(m: &Matrix) -> Matrix {
    let eig = m.clone().symmetric_eigen();
    let top = eig.eigenvalues.amax();
    let inv = eig.eigenvalues.map(|v| if v.abs() > 1e-10 * top { 1.0 / v } else { 0.0 });
    &eig.eigenvectors * Matrix::from_diagonal(&inv) * eig.eigenvectors.transpose()
}

/// The seeding program in its original variables `z = (dy0, dlambda0)`:
/// `min 1/2 z^T H z  s.t.  C z = v` with `H = diag(2 kappa I, c1 B B^T)` and
/// `C = [tau I, (1 - 1/theta) B^T]`.
pub struct Eta0Program {
    pub h: Matrix,
    pub c: Matrix,
    pub v: Vector,
}

impl Eta0Program {
    pub fn new(b_mat: &Matrix, v: &Vector, theta: f64, tau: f64, kappa: f64, c1: f64) -> Self {
        let (l, p) = b_mat.shape();
        let mut h = Matrix::zeros(p + l, p + l);
        h.view_mut((0, 0), (p, p)).fill_diagonal(2.0 * kappa);
        h.view_mut((p, p), (l, l)).copy_from(&(b_mat * b_mat.transpose() * c1));
        let mut c = Matrix::zeros(p, p + l);
        c.view_mut((0, 0), (p, p)).fill_diagonal(tau);
        c.view_mut((0, p), (p, l)).copy_from(&(b_mat.transpose() * (1.0 - 1.0 / theta)));
        Self { h, c, v: v.clone() }
    }

    pub fn value(&self, z: &Vector) -> f64 {
        0.5 * z.dot(&(&self.h * z))
    }

    fn scale(&self) -> f64 {
        1.0 + self.v.norm() + self.c.norm()
    }

    /// Dense pseudo-inverse solve of the KKT system; `None` when infeasible.
    pub fn kkt(&self) -> Option<f64> {
        let (p, nz) = self.c.shape();
        let mut k = Matrix::zeros(nz + p, nz + p);
        k.view_mut((0, 0), (nz, nz)).copy_from(&self.h);
        k.view_mut((0, nz), (nz, p)).copy_from(&self.c.transpose());
        k.view_mut((nz, 0), (p, nz)).copy_from(&self.c);
        let mut rhs = Vector::zeros(nz + p);
        rhs.rows_mut(nz, p).copy_from(&self.v);
        let sol = symmetric_pinv(&k) * &rhs;
        let z = sol.rows(0, nz).into_owned();
        let feas = (&self.c * &z - &self.v).norm();
        (feas <= 1e-9 * self.scale()).then(|| self.value(&z))
    }

    /// Best value of projected gradient descent (exact line search on the
    /// quadratic) over `starts` random starts; `None` when infeasible.
    pub fn projected_gradient<R: Rng>(&self, rng: &mut R, starts: usize, max_iters: usize) -> Option<f64> {
        let nz = self.c.ncols();
        let c_pinv = self.c.transpose() * symmetric_pinv(&(&self.c * self.c.transpose()));
        let null_proj = Matrix::identity(nz, nz) - &c_pinv * &self.c;
        let project = |z: &Vector| z - &c_pinv * (&self.c * z - &self.v);
        let mut best = f64::INFINITY;
        for _ in 0..starts {
            let mut z = project(&(gaussian_vector(rng, nz) * 3.0));
            if (&self.c * &z - &self.v).norm() > 1e-9 * self.scale() {
                return None;
            }
            for _ in 0..max_iters {
                let d = -(&null_proj * (&self.h * &z));
                let dd = d.norm_squared();
                let dhd = d.dot(&(&self.h * &d));
                if dd <= 1e-30 * (1.0 + z.norm_squared()) || dhd <= 0.0 {
                    break;
                }
                z += &d * (dd / dhd);
                // re-project to stop drift off the affine set
                z = project(&z);
            }
            best = best.min(self.value(&z));
        }
        Some(best)
    }
}
