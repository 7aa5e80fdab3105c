//! The one-dimensional instance `min x^2/2 + y^2/2 s.t. x + y = 0` with
//! `beta = 4`, `theta = 1` from `(x0, y0, lambda0) = (0, 1, 1)`. Every
//! quantity in the first rows can be checked by hand: `x1 = -0.6`,
//! `y1 = 0.68`, `lambda1 = 0.68`, `lambda_hat1 = -0.6`.
//!
//! `cargo run --example scalar_fixture`

use padmm::bench::generate::scalar_fixture;
use padmm::certify::certify_trace;
use padmm::linalg::Vector;
use padmm::solver::{GSpec, Solver, SolverConfig, StartPoint};

fn main() -> padmm::Result<()> {
    let inst = scalar_fixture();
    let config = SolverConfig {
        theta: 1.0,
        beta: 4.0,
        tau: 0.0,
        g_spec: GSpec::Zero,
        rho: 1e-10,
        ..SolverConfig::default()
    };
    let one = Vector::from_element(1, 1.0);
    let solver = Solver::new(&inst, config, StartPoint::new(Vector::zeros(1), one.clone(), one))?;
    let c = solver.constants();
    println!(
        "gamma={} delta1={} delta2={} eta0={} delta0={} M={}",
        c.gamma,
        c.delta1,
        c.delta2,
        c.eta0,
        c.delta0,
        c.rate_constant()
    );

    let (records, outcome) = solver.run()?;
    println!("{:>3} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}", "k", "x", "y", "lambda", "lam_hat", "L_beta", "merit");
    for r in records.iter().take(6) {
        println!(
            "{:>3} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            r.k,
            r.x[0],
            r.y[0],
            r.lambda[0],
            r.lambda_hat[0],
            r.l_beta,
            r.merit()
        );
    }
    let cert = certify_trace(&solver, &records)?;
    println!("{outcome:?}: {} checks, {} failed", cert.evaluated(), cert.failures.len());
    Ok(())
}
