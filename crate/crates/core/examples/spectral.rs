//! Spectral constants of a coupling matrix and the row-space projection bound
//! `|P u| <= |S u| / sqrt(sigma+)` that the dual estimates rest on.
//!
//! `cargo run --example spectral`

use padmm::linalg::{reduced_svd, spectral_summary, Matrix, RangeProjector, Vector};

fn main() -> padmm::Result<()> {
    // rank 2 in R^{3 x 4}: the third row is the sum of the first two
    let s = Matrix::from_row_slice(3, 4, &[1.0, 2.0, 0.0, -1.0, 0.0, 1.0, 1.0, 3.0, 1.0, 3.0, 1.0, 2.0]);
    let summary = spectral_summary(&s)?;
    println!("{summary:?}");
    println!("singular values: {:?}", reduced_svd(&s).values.as_slice());

    let proj = RangeProjector::row_space(&s);
    for u in [
        Vector::from_vec(vec![1.0, 0.0, 0.0, 0.0]),
        Vector::from_vec(vec![0.3, -1.0, 2.0, 0.5]),
        // in the kernel of S: both sides vanish
        Vector::from_vec(vec![2.0, -1.0, 1.0, 0.0]) - proj.project(&Vector::from_vec(vec![2.0, -1.0, 1.0, 0.0]))?,
    ] {
        let lhs = proj.project(&u)?.norm();
        let rhs = (&s * &u).norm() / summary.sigma_b_plus.sqrt();
        println!("|P u| = {lhs:.6}  <=  |S u|/sqrt(sigma+) = {rhs:.6}");
    }
    Ok(())
}
