//! Seeded certification campaigns over all four families.
//!
//! Each case draws dimensions, the rank of `B`, `theta` and a start policy.
//! When `B` has a nontrivial kernel (`sigma_B = 0`) the case uses
//! `tau = m + 1/2` with the family's curvature bound; otherwise `tau = 0`.
//! Nonquadratic `f` families use the linearized metric.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{InstanceSpec, Outputs, RunConfigFile, SolverSection, StartPolicy, StartSpec};
use super::generate::{Family, GeneratorParams, GeneratorSpec};
use crate::solver::GSpec;

pub const CAMPAIGN_THETAS: [f64; 8] = [0.3, 0.7, 1.0, 1.3, 1.618, 1.7, 1.8, 1.9];

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignCase {
    pub label: String,
    pub generator: GeneratorSpec,
    pub solver: SolverSection,
    pub start: StartSpec,
}

impl CampaignCase {
    pub fn config(&self) -> RunConfigFile {
        RunConfigFile {
            instance: InstanceSpec::Generator(self.generator.clone()),
            solver: self.solver.clone(),
            start: self.start.clone(),
            outputs: Outputs::default(),
        }
    }
}

/// Upper bound on `m` for a family with the given parameters.
fn curvature_bound(family: Family, params: &GeneratorParams) -> f64 {
    match family {
        Family::QuadQuad | Family::SphereQuad => params.neg_curvature,
        Family::L0Ls => 0.0,
        Family::BoxCos => (params.a.abs() - 1.0).max(0.0),
    }
}

/// `count` cases cycling through the families, dimensions in `1..=max_dim`.
pub fn campaign(count: usize, max_dim: usize, seed: u64, max_iters: usize, rho: f64) -> Vec<CampaignCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_dim = max_dim.max(1);
    (0..count)
        .map(|i| {
            let family = Family::ALL[i % Family::ALL.len()];
            let n = rng.random_range(1..=max_dim);
            let p = rng.random_range(1..=max_dim);
            let l = rng.random_range(1..=max_dim);
            let full = p.min(l);
            // a quarter of the cases get a rank-deficient B
            let rank = if full > 1 && rng.random_bool(0.25) {
                rng.random_range(1..full)
            } else {
                full
            };
            let mut params = GeneratorParams {
                rank: Some(rank),
                ..GeneratorParams::default()
            };
            if family == Family::BoxCos {
                params.a = rng.random_range(0.5..3.0);
            }
            if family == Family::QuadQuad || family == Family::SphereQuad {
                params.neg_curvature = rng.random_range(0.0..1.5);
            }
            let theta = CAMPAIGN_THETAS[rng.random_range(0..CAMPAIGN_THETAS.len())];
            let tau = if rank < p {
                curvature_bound(family, &params) + 0.5
            } else {
                0.0
            };
            let start = if tau == 0.0 && theta == 1.0 || rng.random_bool(0.5) {
                StartPolicy::ConsistentMultiplier
            } else {
                StartPolicy::Zeros
            };
            let g_spec = match family {
                Family::QuadQuad => GSpec::Zero,
                _ => GSpec::Linearized { alpha: None },
            };
            let case_seed = rng.random::<u64>();
            CampaignCase {
                label: format!("{family} n={n} p={p} l={l} rank={rank} theta={theta} tau={tau}"),
                generator: GeneratorSpec {
                    family,
                    n,
                    p,
                    l,
                    seed: case_seed,
                    params,
                },
                solver: SolverSection {
                    theta,
                    tau,
                    g_spec,
                    rho,
                    max_iters,
                    ..SolverSection::default()
                },
                start: StartSpec::Policy(start),
            }
        })
        .collect()
}
