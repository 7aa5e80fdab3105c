//! One run per built-in family. The nonquadratic `f` families (hard
//! thresholding, box, sphere) use the linearized metric so each x-step is a
//! single prox evaluation; the cosine-perturbed `g` needs the Newton inner
//! solver.
//!
//! `cargo run --release --example nonconvex_families`

use padmm::bench::config::{InstanceSpec, Outputs, RunConfigFile, SolverSection, StartPolicy, StartSpec};
use padmm::bench::execute;
use padmm::bench::generate::{Family, GeneratorSpec};
use padmm::solver::GSpec;

fn main() {
    for family in Family::ALL {
        let g_spec = match family {
            Family::QuadQuad => GSpec::Zero,
            _ => GSpec::Linearized { alpha: None },
        };
        let cfg = RunConfigFile {
            instance: InstanceSpec::Generator(GeneratorSpec::new(family, 8, 6, 9, 7)),
            solver: SolverSection {
                theta: 1.5,
                g_spec,
                rho: 1e-7,
                max_iters: 20_000,
                ..SolverSection::default()
            },
            start: StartSpec::Policy(StartPolicy::ConsistentMultiplier),
            outputs: Outputs::default(),
        };
        let a = execute(&cfg);
        let r = &a.report;
        let cert = r.certificate.as_ref();
        println!(
            "{family:<12} exit={} k={:<6} beta={:<10.4} final merit={:<11.4e} checks={} failed={}{}",
            r.exit_code,
            r.iterations,
            r.beta.unwrap_or(f64::NAN),
            a.trace.last().map_or(f64::NAN, |t| t.merit),
            cert.map_or(0, |c| c.checks_run),
            cert.map_or(0, |c| c.checks_failed),
            r.error.as_deref().map(|e| format!(" error: {e}")).unwrap_or_default()
        );
    }
}
