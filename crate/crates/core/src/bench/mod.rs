//! Experiment harness: generators, configuration files, run orchestration,
//! sweeps and artifact IO.

pub mod campaign;
pub mod config;
pub mod generate;
pub mod io;
pub mod run;
pub mod sweep;

pub use config::{BetaChoice, InstanceSpec, Outputs, RunConfigFile, SolverSection, StartPolicy, StartSpec};
pub use generate::{generate_instance, Family, GeneratorParams, GeneratorSpec};
pub use run::{execute, run_config, ExitStatus, RunArtifacts, RunReport};
pub use sweep::{theta_sweep, SweepRow, WORKERS_ENV};
