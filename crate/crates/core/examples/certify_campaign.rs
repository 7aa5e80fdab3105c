//! Runs a seeded campaign across all instance families and prints one line
//! per run plus the certificate totals.
//!
//! `cargo run --release --example certify_campaign -- [count] [max_dim]`

use padmm::bench::campaign::campaign;
use padmm::bench::run::execute;

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().map_or(40, |a| a.parse().expect("count"));
    let max_dim: usize = args.next().map_or(20, |a| a.parse().expect("max_dim"));

    let cases = campaign(count, max_dim, 2024, 2000, 1e-8);
    let (mut checks, mut failed) = (0, 0);
    for case in &cases {
        let a = execute(&case.config());
        let cert = a.certificate.as_ref();
        checks += cert.map_or(0, |c| c.evaluated());
        failed += cert.map_or(0, |c| c.failures.len());
        println!(
            "{:<60} exit={} k={:<5} failed={} {}",
            case.label,
            a.report.exit_code,
            a.report.iterations,
            cert.map_or(0, |c| c.failures.len()),
            a.report.error.as_deref().unwrap_or(""),
        );
        if let Some(c) = cert {
            for f in c.failures.iter().take(3) {
                println!("    {} at k={:?}: lhs={:.6e} rhs={:.6e} tol={:.3e}", f.name, f.iteration, f.lhs, f.rhs, f.tolerance);
            }
        }
    }
    println!("{} runs, {checks} checks, {failed} failures", cases.len());
}
