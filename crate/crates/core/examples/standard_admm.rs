//! Standard ADMM (`G = 0`, `tau = 0`) with invertible `B`: once the penalty
//! clears the stronger threshold, `delta1` sits in `[beta sigma_B / 8,
//! beta sigma_B / 4]`, `1/delta2` in `[beta theta, 3 beta theta]`, and the
//! certificate adds those checks to the per-iteration ones.
//!
//! `cargo run --release --example standard_admm`

use padmm::bench::generate::{Family, GeneratorSpec};
use padmm::certify::certify_trace;
use padmm::linalg::spectral_summary;
use padmm::params::{corollary_min_beta, gamma};
use padmm::solver::{auto_beta, GSpec, Solver, SolverConfig, StartPoint};

fn main() -> padmm::Result<()> {
    let inst = GeneratorSpec::new(Family::QuadQuad, 6, 5, 7, 42).generate()?;
    let s = spectral_summary(&inst.b_mat)?;
    let (start, _) = StartPoint::consistent_multiplier(&inst)?;
    for theta in [0.8, 1.0, 1.5, 1.9] {
        let beta_c = corollary_min_beta(s.sigma_b, inst.g.weak_convexity, gamma(theta)?, inst.g.lipschitz)?;
        let beta = 1.1 * beta_c.max(auto_beta(&inst, theta, 0.0, 1.1)?);
        let config = SolverConfig {
            theta,
            beta,
            tau: 0.0,
            g_spec: GSpec::Zero,
            rho: 1e-8,
            max_iters: 100_000,
            ..SolverConfig::default()
        };
        let solver = Solver::new(&inst, config, start.clone())?;
        let c = solver.constants().clone();
        let (records, outcome) = solver.run()?;
        let cert = certify_trace(&solver, &records)?;
        println!(
            "theta={theta:<4} beta={beta:<9.3} delta1/(beta sigma_B)={:.4} 1/(delta2 beta theta)={:.4} delta0={:.3e} eta0={:.1e} {outcome:?} checks={} failed={}",
            c.delta1 / (beta * s.sigma_b),
            1.0 / (c.delta2 * beta * theta),
            c.delta0,
            c.eta0,
            cert.evaluated(),
            cert.failures.len()
        );
    }
    Ok(())
}
