//! Sweeps the over-relaxation stepsize on one seeded quad-quad instance and
//! prints the comparison table (CSV). The penalty is re-derived for each
//! theta, so the table also shows how `gamma` grows as theta approaches 2.
//!
//! `PADMM_WORKERS=4 cargo run --release --example theta_sweep`

use padmm::bench::config::{InstanceSpec, Outputs, RunConfigFile, SolverSection, StartPolicy, StartSpec};
use padmm::bench::generate::{Family, GeneratorSpec};
use padmm::bench::sweep::{sweep_csv, theta_sweep, workers_from_env};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base = RunConfigFile {
        instance: InstanceSpec::Generator(GeneratorSpec::new(Family::QuadQuad, 10, 10, 10, 1)),
        solver: SolverSection {
            rho: 1e-6,
            max_iters: 200_000,
            ..SolverSection::default()
        },
        start: StartSpec::Policy(StartPolicy::ConsistentMultiplier),
        outputs: Outputs::default(),
    };
    let thetas = [0.5, 1.0, 1.5, 1.618, 1.7, 1.9, 1.99];
    let rows = theta_sweep(&base, &thetas, workers_from_env()?)?;
    print!("{}", sweep_csv(&rows));
    Ok(())
}
