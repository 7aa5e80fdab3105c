//! Dense linear algebra used by the solver and the certifier.
//!
//! Everything here is dense and sized for desk-scale problems (a few thousand
//! rows at most). The heavy lifting is done by `nalgebra`; this module adds the
//! rank conventions, spectral constants of the coupling matrix `B`, and the
//! range projections that the convergence analysis is phrased in.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

pub type Matrix = DMatrix<f64>;
pub type Vector = DVector<f64>;

/// Singular values at or below `RANK_TOL * sigma_max` count as zero.
pub const RANK_TOL: f64 = 1e-12;

/// `M = left * diag(values) * right^T` with only the strictly positive singular
/// values kept, largest first.
#[derive(Debug, Clone)]
pub struct ReducedSvd {
    pub left: Matrix,
    pub values: Vector,
    pub right: Matrix,
}

impl ReducedSvd {
    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn reconstruct(&self) -> Matrix {
        let mut scaled = self.left.clone();
        for (j, s) in self.values.iter().enumerate() {
            scaled.column_mut(j).scale_mut(*s);
        }
        scaled * self.right.transpose()
    }
}

/// Thin SVD truncated at `RANK_TOL * sigma_max`.
///
/// Backed by `faer`: the bidiagonal SVD in `nalgebra` 0.35 returns wrong
/// factors for a sizeable fraction of rank-deficient inputs.
pub fn reduced_svd(m: &Matrix) -> ReducedSvd {
    let (rows, cols) = m.shape();
    let empty = || ReducedSvd {
        left: Matrix::zeros(rows, 0),
        values: Vector::zeros(0),
        right: Matrix::zeros(cols, 0),
    };
    if rows == 0 || cols == 0 || m.amax() == 0.0 || !m.iter().all(|v| v.is_finite()) {
        return empty();
    }
    let fm = faer::Mat::<f64>::from_fn(rows, cols, |i, j| m[(i, j)]);
    let Ok(svd) = fm.thin_svd() else {
        return empty();
    };
    let (u, s, v) = (svd.U(), svd.S().column_vector(), svd.V());
    let mut order: Vec<usize> = (0..s.nrows()).collect();
    order.sort_by(|&a, &b| s[b].total_cmp(&s[a]));
    let sigma_max = s[order[0]];
    let rank = order.iter().take_while(|&&i| s[i] > RANK_TOL * sigma_max).count();
    if rank == 0 {
        return empty();
    }
    let keep = &order[..rank];
    ReducedSvd {
        left: Matrix::from_fn(rows, rank, |i, j| u[(i, keep[j])]),
        values: Vector::from_fn(rank, |j, _| s[keep[j]]),
        right: Matrix::from_fn(cols, rank, |i, j| v[(i, keep[j])]),
    }
}

impl ReducedSvd {
    /// Minimum-norm least-squares solution of `M z = rhs`.
    pub fn solve_min_norm(&self, rhs: &Vector) -> Result<Vector> {
        if rhs.len() != self.left.nrows() {
            return Err(Error::dim("min-norm solve", self.left.nrows(), rhs.len()));
        }
        let coef = (self.left.transpose() * rhs).component_div(&self.values);
        Ok(&self.right * coef)
    }
}

/// Eigenvalue summary of `B^T B`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SpectralSummary {
    /// Smallest eigenvalue of `B^T B`.
    pub sigma_b: f64,
    /// Smallest positive eigenvalue of `B^T B`.
    pub sigma_b_plus: f64,
    /// Largest eigenvalue of `B^T B` (operator 2-norm).
    pub norm_btb: f64,
    pub rank: usize,
}

pub fn spectral_summary(b: &Matrix) -> Result<SpectralSummary> {
    let svd = reduced_svd(b);
    if svd.rank() == 0 {
        return Err(Error::Assumption {
            assumption: "A1",
            detail: "B must be nonzero".into(),
        });
    }
    let rank = svd.rank();
    let s_max = svd.values[0];
    let s_min = svd.values[rank - 1];
    let sigma_b_plus = s_min * s_min;
    let sigma_b = if rank == b.ncols() { sigma_b_plus } else { 0.0 };
    Ok(SpectralSummary {
        sigma_b,
        sigma_b_plus,
        norm_btb: s_max * s_max,
        rank,
    })
}

/// Orthogonal projector onto `Im(S)`, built once and applied many times.
#[derive(Debug, Clone)]
pub struct RangeProjector {
    basis: Matrix,
}

impl RangeProjector {
    pub fn new(s: &Matrix) -> Self {
        Self {
            basis: reduced_svd(s).left,
        }
    }

    /// Projector onto `Im(S^T)`, the row space of `S`.
    pub fn row_space(s: &Matrix) -> Self {
        Self {
            basis: reduced_svd(s).right,
        }
    }

    pub fn from_svd_left(svd: &ReducedSvd) -> Self {
        Self {
            basis: svd.left.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn rank(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn project(&self, u: &Vector) -> Result<Vector> {
        if u.len() != self.dim() {
            return Err(Error::dim("range projection", self.dim(), u.len()));
        }
        Ok(&self.basis * (self.basis.transpose() * u))
    }

    /// Component of `u` orthogonal to the range.
    pub fn residual(&self, u: &Vector) -> Result<Vector> {
        Ok(u - self.project(u)?)
    }
}

pub fn project_onto_range(s: &Matrix, u: &Vector) -> Result<Vector> {
    if u.len() != s.nrows() {
        return Err(Error::dim("project_onto_range", s.nrows(), u.len()));
    }
    RangeProjector::new(s).project(u)
}

/// Worst relative distance of `b` and of the columns of `A` from `Im(B)`.
pub fn range_inclusion_gap(b_mat: &Matrix, a: &Matrix, b: &Vector) -> Result<f64> {
    if a.nrows() != b_mat.nrows() {
        return Err(Error::dim("range_inclusion_gap (rows of A)", b_mat.nrows(), a.nrows()));
    }
    if b.len() != b_mat.nrows() {
        return Err(Error::dim("range_inclusion_gap (length of b)", b_mat.nrows(), b.len()));
    }
    let proj = RangeProjector::new(b_mat);
    let rel_gap = |v: Vector| -> Result<f64> {
        let r = proj.residual(&v)?;
        Ok(r.norm() / v.norm().max(1.0))
    };
    let mut gap = rel_gap(b.clone())?;
    for col in a.column_iter() {
        gap = gap.max(rel_gap(col.into_owned())?);
    }
    Ok(gap)
}

/// `(lambda_min, lambda_max)` of a symmetric matrix.
pub fn symmetric_extremes(m: &Matrix) -> (f64, f64) {
    if m.nrows() == 0 {
        return (0.0, 0.0);
    }
    let eig = m.clone().symmetric_eigenvalues();
    (eig.min(), eig.max())
}

pub fn is_symmetric(m: &Matrix, tol: f64) -> bool {
    m.is_square() && (m - m.transpose()).amax() <= tol * (1.0 + m.amax())
}

pub fn all_finite(values: &[f64]) -> bool {
    values.iter().all(|v| v.is_finite())
}

/// Row-major nested-array conversions used by the JSON formats.
pub fn matrix_from_rows(rows: &[Vec<f64>]) -> Result<Matrix> {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    for row in rows {
        if row.len() != n_cols {
            return Err(Error::dim("matrix row", n_cols, row.len()));
        }
        if !all_finite(row) {
            return Err(Error::NonFinite("matrix entries"));
        }
    }
    Ok(Matrix::from_fn(n_rows, n_cols, |i, j| rows[i][j]))
}

pub fn matrix_to_rows(m: &Matrix) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

/// Serde adapter: `Matrix` as nested arrays, row-major.
pub mod serde_matrix {
    use super::{matrix_from_rows, matrix_to_rows, Matrix};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &Matrix, s: S) -> Result<S::Ok, S::Error> {
        matrix_to_rows(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Matrix, D::Error> {
        let rows = Vec::<Vec<f64>>::deserialize(d)?;
        matrix_from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: `Vector` as a flat array.
pub mod serde_vector {
    use super::Vector;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Vector, s: S) -> Result<S::Ok, S::Error> {
        v.as_slice().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vector, D::Error> {
        let v = Vec::<f64>::deserialize(d)?;
        if !super::all_finite(&v) {
            return Err(serde::de::Error::custom("non-finite vector entry"));
        }
        Ok(Vector::from_vec(v))
    }
}
