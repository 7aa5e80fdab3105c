//! The file-based workflow: generate an instance, reference it from a run
//! configuration, run it, then certify the written trace against the same
//! configuration (a re-run must reproduce it exactly).
//!
//! `cargo run --release --example config_pipeline -- [output dir]`

use std::path::PathBuf;

use padmm::bench::generate::{Family, GeneratorSpec};
use padmm::bench::io::write_text;
use padmm::bench::run::{certify_trace_file, run_config};
use padmm::bench::RunConfigFile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map_or_else(|| std::env::temp_dir().join("padmm_pipeline"), PathBuf::from);
    let inst = GeneratorSpec::new(Family::SphereQuad, 5, 6, 8, 3).generate()?;
    let inst_path = dir.join("instance.json");
    write_text(&inst_path, &inst.to_json()?)?;

    let cfg_text = serde_json::json!({
        "instance": {"file": inst_path},
        "solver": {"theta": 1.8, "beta": "auto", "G": {"kind": "linearized"}, "rho": 1e-7, "max_iters": 50000},
        "start": "zeros",
        "outputs": {
            "trace": dir.join("trace.csv"),
            "certificate": dir.join("certificate.json"),
            "report": dir.join("report.json")
        }
    });
    let cfg_path = dir.join("run.json");
    write_text(&cfg_path, &serde_json::to_string_pretty(&cfg_text)?)?;

    let run = run_config(&cfg_path)?;
    println!("run: exit {} after {} iterations", run.report.exit_code, run.report.iterations);
    let cfg = RunConfigFile::load(&cfg_path)?;
    let check = certify_trace_file(dir.join("trace.csv"), &cfg)?;
    println!(
        "certify: exit {} mismatch={:?} checks={}",
        check.status.code(),
        check.mismatch,
        check.artifacts.certificate.as_ref().map_or(0, |c| c.evaluated())
    );
    println!("artifacts in {}", dir.display());
    Ok(())
}
