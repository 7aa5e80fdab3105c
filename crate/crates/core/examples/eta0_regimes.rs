//! The seeding constant `eta0` in each feasibility regime, on one instance
//! with invertible `B` and one with a rank-deficient `B`.
//!
//! `cargo run --example eta0_regimes`

use padmm::bench::generate::{Family, GeneratorParams, GeneratorSpec};
use padmm::params::eta0;
use padmm::problem::ProblemInstance;
use padmm::solver::{auto_beta, StartPoint};

fn show(label: &str, inst: &ProblemInstance, start: &StartPoint, theta: f64, tau: f64) -> padmm::Result<()> {
    let beta = auto_beta(inst, theta, tau, 1.5)?;
    let grad = inst.g.gradient(&start.y0);
    let m = inst.g.weak_convexity;
    let sol = eta0(&inst.b_mat, &start.lambda0, &grad, theta, tau, beta, m)?;
    print!("{label:<44} theta={theta:<4} tau={tau:<4} -> {:?} eta0={:.6e}", sol.case, sol.value);
    if sol.is_finite() {
        println!();
    } else {
        println!(" (residual {:.3e}; {})", sol.infeasibility, sol.remediation_hint());
    }
    Ok(())
}

fn main() -> padmm::Result<()> {
    let full = GeneratorSpec::new(Family::QuadQuad, 4, 4, 6, 3).generate()?;
    let consistent = StartPoint::consistent_multiplier(&full)?.0;
    let zeros = StartPoint::zeros(&full)?;
    show("invertible B, consistent multiplier", &full, &consistent, 1.0, 0.0)?;
    show("invertible B, consistent multiplier", &full, &consistent, 1.6, 0.0)?;
    show("invertible B, zero start", &full, &zeros, 1.6, 0.0)?;
    show("invertible B, zero start", &full, &zeros, 1.0, 0.0)?;
    show("invertible B, zero start, proximal y-step", &full, &zeros, 1.0, 0.5)?;

    let mut spec = GeneratorSpec::new(Family::QuadQuad, 4, 5, 6, 3);
    spec.params = GeneratorParams {
        rank: Some(2),
        ..GeneratorParams::default()
    };
    let deficient = spec.generate()?;
    let tau = deficient.g.weak_convexity + 0.5;
    let zeros = StartPoint::zeros(&deficient)?;
    show("rank-2 B, zero start, proximal y-step", &deficient, &zeros, 1.6, tau)?;
    // with the automatic penalty, theta and 2 - theta give the same value
    show("rank-2 B, zero start, proximal y-step", &deficient, &zeros, 0.4, tau)?;
    show("rank-2 B, zero start, proximal y-step", &deficient, &zeros, 0.7, tau)?;
    Ok(())
}
