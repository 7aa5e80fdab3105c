//! Command-line front end. Exit codes: 0 converged and certified, 2 a check
//! failed, 3 iteration cap, 4 configuration or assumption error, 5 numerical
//! failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use padmm::bench::generate::{Family, GeneratorParams, GeneratorSpec};
use padmm::bench::io::write_text;
use padmm::bench::run::{certify_trace_file, run_config, ExitStatus, RunReport};
use padmm::bench::sweep::{sweep_csv, sweep_status, theta_sweep, workers_from_env, WORKERS_ENV};
use padmm::bench::RunConfigFile;
use padmm::Error;

#[derive(Parser)]
#[command(name = "padmm", version, about = "Proximal ADMM with over-relaxation and a runtime certificate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one configuration and write its trace, certificate and report.
    Run { config: PathBuf },
    /// Run a configuration once per theta (penalty re-derived each time).
    #[command(after_help = format!("Worker threads: set {WORKERS_ENV} (default: all cores)."))]
    Sweep {
        config: PathBuf,
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        theta: Vec<f64>,
        /// Comparison table path; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a seeded instance and write it as JSON.
    Gen {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Family parameter, e.g. `--param mu=0.5` (repeatable).
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
    /// Check that a trace was produced by a configuration and certify the run.
    Certify { trace: PathBuf, config: PathBuf },
}

fn parse_params(pairs: &[String]) -> Result<GeneratorParams, Error> {
    let mut map = serde_json::Map::new();
    for pair in pairs {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("parameter '{pair}' is not KEY=VALUE")))?;
        let value = serde_json::from_str(v).unwrap_or_else(|_| serde_json::Value::String(v.to_string()));
        map.insert(k.to_string(), value);
    }
    serde_json::from_value(serde_json::Value::Object(map))
        .map_err(|e| Error::Config(format!("invalid generator parameters: {e}")))
}

fn summarize(report: &RunReport) {
    let res = report
        .final_residuals
        .map(|r| format!(" residuals=({:.3e}, {:.3e}, {:.3e})", r.primal, r.dual_y, r.dual_x))
        .unwrap_or_default();
    let cert = report
        .certificate
        .as_ref()
        .map(|c| format!(" checks={}/{}", c.checks_passed, c.checks_run))
        .unwrap_or_default();
    println!("exit={} iterations={}{res}{cert}", report.exit_code, report.iterations);
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    if let Some(e) = &report.error {
        eprintln!("error: {e}");
    }
}

fn execute(command: Command) -> Result<ExitStatus, Error> {
    match command {
        Command::Run { config } => {
            let artifacts = run_config(&config)?;
            summarize(&artifacts.report);
            if let Some(c) = &artifacts.certificate {
                for f in c.failures.iter().take(5) {
                    eprintln!("check failed: {} at k={:?} (slack {:.3e}, tol {:.3e})", f.name, f.iteration, f.slack, f.tolerance);
                }
            }
            Ok(artifacts.status())
        }
        Command::Sweep { config, theta, out } => {
            let cfg = RunConfigFile::load(&config)?;
            let rows = theta_sweep(&cfg, &theta, workers_from_env()?)?;
            let table = sweep_csv(&rows);
            match out {
                Some(path) => write_text(&path, &table)?,
                None => print!("{table}"),
            }
            for r in rows.iter().filter(|r| !r.message.is_empty()) {
                eprintln!("theta={}: {}", r.theta, r.message);
            }
            Ok(sweep_status(&rows))
        }
        Command::Gen {
            family,
            n,
            p,
            l,
            seed,
            out,
            params,
        } => {
            let spec = GeneratorSpec {
                family: family.parse::<Family>()?,
                n,
                p,
                l,
                seed,
                params: parse_params(&params)?,
            };
            let inst = spec.generate()?;
            let mut text = inst.to_json()?;
            text.push('\n');
            write_text(&out, &text)?;
            Ok(ExitStatus::Success)
        }
        Command::Certify { trace, config } => {
            let cfg = RunConfigFile::load(&config)?;
            let result = certify_trace_file(&trace, &cfg)?;
            summarize(&result.artifacts.report);
            if let Some(m) = &result.mismatch {
                eprintln!("trace mismatch: {m}");
            }
            Ok(result.status)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(ExitStatus::Configuration.code() as u8),
            };
        }
    };
    let status = execute(cli.command).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitStatus::from_error(&e)
    });
    ExitCode::from(status.code() as u8)
}
