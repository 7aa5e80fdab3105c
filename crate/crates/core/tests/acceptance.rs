//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with the
//! tolerance it was judged at. Exits nonzero when any criterion fails.

mod support;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use padmm::bench::campaign::{campaign, CAMPAIGN_THETAS};
use padmm::bench::config::{InstanceSpec, Outputs, RunConfigFile, SolverSection, StartPolicy, StartSpec};
use padmm::bench::generate::{scalar_fixture, Family, GeneratorParams, GeneratorSpec};
use padmm::certify::{certify_trace, check_rate_bounds, names, Certificate, MERIT_TOL};
use padmm::linalg::{spectral_summary, Matrix, RangeProjector, Vector};
use padmm::params::{self, Eta0Case};
use padmm::problem::ProblemInstance;
use padmm::solver::{auto_beta, GSpec, IterateRecord, RunOutcome, Solver, SolverConfig, StartPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::{gaussian_vector, matrix_of_rank, Eta0Program};

// Pinned tolerances.
const SCALAR_TOL: f64 = 1e-12;
const SCALAR_BUDGET: Duration = Duration::from_secs(1);
const CAMPAIGN_RUNS: usize = 100;
const CAMPAIGN_MAX_DIM: usize = 50;
const CAMPAIGN_BUDGET: Duration = Duration::from_secs(120);
const ETA0_REL_TOL: f64 = 1e-6;
const ETA0_CONFIGS: usize = 120;
const ETA0_STARTS: usize = 50;
const ETA0_BUDGET: Duration = Duration::from_secs(30);
const COROLLARY_INSTANCES: usize = 24;
const INCLUSION_TOL: f64 = 1e-8;
const ETA0_ZERO_TOL: f64 = 1e-10;
const HIGH_THETA_RHO: f64 = 1e-6;
const PROJECTION_PAIRS: usize = 1000;
const PROJECTION_TOL: f64 = 1e-8;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn solver_for<'a>(cfg: &RunConfigFile, inst: &'a ProblemInstance) -> padmm::Result<Solver<'a>> {
    let config = cfg.solver.resolve(inst)?;
    let (start, _) = cfg.start.build(inst)?;
    Solver::new(inst, config, start)
}

fn criterion_1_scalar() -> Outcome {
    let t0 = Instant::now();
    let inst = scalar_fixture();
    let config = SolverConfig {
        theta: 1.0,
        beta: 4.0,
        tau: 0.0,
        g_spec: GSpec::Zero,
        rho: 1e-10,
        ..SolverConfig::default()
    };
    let start = StartPoint::new(Vector::zeros(1), Vector::from_element(1, 1.0), Vector::from_element(1, 1.0));
    let solver = match Solver::new(&inst, config, start) {
        Ok(s) => s,
        Err(e) => return Outcome::new(false, format!("solver setup failed: {e}")),
    };
    let (records, outcome) = match solver.run() {
        Ok(r) => r,
        Err(e) => return Outcome::new(false, format!("run failed: {e}")),
    };
    let cert = certify_trace(&solver, &records).expect("certificate");
    let elapsed = t0.elapsed();
    let r1 = &records[1];
    let got = [r1.x[0], r1.y[0], r1.lambda[0], r1.lambda_hat[0], r1.delta_k, r1.eta_k];
    let want = [-0.6, 0.68, 0.68, -0.6, 0.3696, 0.1024];
    let err = got.iter().zip(&want).map(|(g, w)| (g - w).abs()).fold(0.0, f64::max);
    let converged = matches!(outcome, RunOutcome::Converged { .. });
    Outcome::new(
        err <= SCALAR_TOL && elapsed < SCALAR_BUDGET && converged && cert.all_pass(),
        format!(
            "max |iterate 1 - hand value| = {err:.2e} (tol {SCALAR_TOL:.0e}), {} iterations, {} checks, {:.3}s (budget {}s)",
            records.len() - 1,
            cert.evaluated(),
            elapsed.as_secs_f64(),
            SCALAR_BUDGET.as_secs()
        ),
    )
}

/// Per-run data gathered once for criteria 2 to 4.
struct CampaignRun {
    label: String,
    cert: Certificate,
    rate_failures: Vec<String>,
    decay_ratio: Option<f64>,
    decay_ok: bool,
}

fn campaign_runs() -> (Vec<CampaignRun>, Vec<String>, Duration) {
    let t0 = Instant::now();
    let mut runs = Vec::new();
    let mut setup_failures = Vec::new();
    for case in campaign(CAMPAIGN_RUNS, CAMPAIGN_MAX_DIM, 2024, 2000, 1e-8) {
        let cfg = case.config();
        let inst = match cfg.instance.build() {
            Ok(i) => i,
            Err(e) => {
                setup_failures.push(format!("{}: {e}", case.label));
                continue;
            }
        };
        let solver = match solver_for(&cfg, &inst) {
            Ok(s) => s,
            Err(e) => {
                setup_failures.push(format!("{}: {e}", case.label));
                continue;
            }
        };
        let records: Vec<IterateRecord> = match solver.run() {
            Ok((r, _)) => r,
            Err(e) => {
                setup_failures.push(format!("{}: {e}", case.label));
                continue;
            }
        };
        let cert = match certify_trace(&solver, &records) {
            Ok(c) => c,
            Err(e) => {
                setup_failures.push(format!("{}: {e}", case.label));
                continue;
            }
        };
        let k_final = records.len() - 1;
        let mut rate_failures = Vec::new();
        for k in [1, 10, 100, k_final] {
            for r in check_rate_bounds(&solver, &records, k) {
                if !r.pass {
                    rate_failures.push(format!("{} at k={k}", r.name));
                }
            }
        }
        let (decay_ratio, decay_ok) = if k_final >= 100 {
            let checks = check_rate_bounds(&solver, &records, 100);
            let ratios: Vec<f64> = checks
                .iter()
                .filter(|r| r.name != names::CUMULATIVE_BOUND && r.lhs > 0.0)
                .map(|r| r.rhs / r.lhs)
                .collect();
            let ok = checks.iter().all(|r| r.rhs.is_finite() && r.lhs <= r.rhs + r.tolerance);
            (ratios.into_iter().reduce(f64::min), ok)
        } else {
            (None, true)
        };
        runs.push(CampaignRun {
            label: case.label,
            cert,
            rate_failures,
            decay_ratio,
            decay_ok,
        });
    }
    (runs, setup_failures, t0.elapsed())
}

fn count_failures(runs: &[CampaignRun], names: &[&str]) -> (usize, usize) {
    let mut evaluated = 0;
    let mut failed = 0;
    for run in runs {
        for name in names {
            if let Some(s) = run.cert.summary.get(*name) {
                evaluated += s.evaluated;
                failed += s.failed;
            }
        }
    }
    (evaluated, failed)
}

fn criterion_2_merit(runs: &[CampaignRun], setup: &[String], elapsed: Duration) -> Outcome {
    let families: std::collections::BTreeSet<&str> =
        runs.iter().filter_map(|r| r.label.split_whitespace().next()).collect();
    let (evaluated, failed) = count_failures(runs, &[names::MERIT_DECREASE, names::MERIT_NONNEGATIVE]);
    let pass = setup.is_empty()
        && runs.len() >= CAMPAIGN_RUNS
        && families.len() == Family::ALL.len()
        && evaluated > 0
        && failed == 0
        && elapsed < CAMPAIGN_BUDGET;
    let mut detail = format!(
        "{} admissible runs over {} families (dims <= {CAMPAIGN_MAX_DIM}), {evaluated} merit checks, {failed} violations at tol {MERIT_TOL:.0e}(1+|merit_0|), {:.1}s (budget {}s)",
        runs.len(),
        families.len(),
        elapsed.as_secs_f64(),
        CAMPAIGN_BUDGET.as_secs()
    );
    if let Some(first) = setup.first() {
        detail.push_str(&format!("; {} runs failed to start, first: {first}", setup.len()));
    }
    Outcome::new(pass, detail)
}

fn criterion_3_lemmas(runs: &[CampaignRun]) -> Outcome {
    let lemma_checks = [
        names::DESCENT_X,
        names::DESCENT_Y,
        names::MULTIPLIER_IDENTITY,
        names::DUAL_RECURSION,
        names::THETA1_BOUND,
        names::U_BOUND,
        names::MERIT_THETA,
        names::STATIONARITY_X,
        names::IDENTITY_PRIMAL,
        names::IDENTITY_DUAL_Y,
    ];
    let (evaluated, failed) = count_failures(runs, &lemma_checks);
    let total_failed: usize = runs.iter().map(|r| r.cert.failures.len()).sum();
    let first = runs
        .iter()
        .find_map(|r| r.cert.failures.first().map(|f| format!("; first: {} {} at k={:?}", r.label, f.name, f.iteration)))
        .unwrap_or_default();
    Outcome::new(
        evaluated > 0 && failed == 0 && total_failed == 0,
        format!(
            "{evaluated} per-iteration lemma checks, {failed} failures ({total_failed} over all checks) at tol 1e-10 + (1e-8 + 10 inner_tol) scale{first}"
        ),
    )
}

fn criterion_4_rates(runs: &[CampaignRun]) -> Outcome {
    let failures: Vec<String> = runs
        .iter()
        .flat_map(|r| r.rate_failures.iter().map(move |f| format!("{}: {f}", r.label)))
        .collect();
    let long: Vec<&CampaignRun> = runs.iter().filter(|r| r.decay_ratio.is_some() || !r.decay_ok).collect();
    let decay_ok = long.iter().all(|r| r.decay_ok && r.decay_ratio.is_some_and(f64::is_finite));
    let min_ratio = long.iter().filter_map(|r| r.decay_ratio).fold(f64::INFINITY, f64::min);
    let (streamed, streamed_failed) = count_failures(
        runs,
        &[names::CUMULATIVE_BOUND, names::RATE_DX, names::RATE_DUAL_Y, names::RATE_PRIMAL],
    );
    Outcome::new(
        failures.is_empty() && streamed_failed == 0 && !long.is_empty() && decay_ok,
        format!(
            "k in {{1, 10, 100, k_final}}: {} violations; every k: {streamed} checks, {streamed_failed} violations; {} runs reach k=100, smallest bound/observed ratio there {min_ratio:.3e}{}",
            failures.len(),
            long.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= ETA0_REL_TOL * a.abs().max(b.abs()) + 1e-12
}

fn criterion_5_eta0() -> Outcome {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let mut cases = [0usize; 3];
    let mut mismatches = Vec::new();

    // the hand-derived example: B = I (2x2), theta 1.5, tau 1, beta 2, v = (1, 0)
    let b = Matrix::identity(2, 2);
    let v = Vector::from_vec(vec![1.0, 0.0]);
    let lambda0 = v.clone();
    let hand = params::eta0(&b, &lambda0, &Vector::zeros(2), 1.5, 1.0, 2.0, 0.0).expect("eta0");
    let hand_ok = (hand.value - 0.6).abs() <= 1e-12
        && (&hand.w0 - &v * 0.6).norm() <= 1e-12
        && (&hand.dy0 - &v * 0.8).norm() <= 1e-12;
    if !hand_ok {
        mismatches.push(format!("hand example gave {}", hand.value));
    }
    let mut zero_exact = true;

    for i in 0..ETA0_CONFIGS {
        let case = i % 3;
        let p = rng.random_range(1..=5);
        let (l, rank) = match case {
            // B^T B invertible
            0 | 1 => (rng.random_range(p..=p + 3), p),
            _ => {
                let l = rng.random_range(1..=6);
                (l, rng.random_range(1..=l.min(p)))
            }
        };
        let b_mat = matrix_of_rank(&mut rng, l, p, rank, 0.3, 3.0);
        let theta = match case {
            0 if i % 2 == 0 => 1.0,
            _ => [0.3, 0.7, 1.3, 1.5, 1.618, 1.9][rng.random_range(0..6)],
        };
        let tau: f64 = if case == 2 { rng.random_range(0.1..3.0) } else { 0.0 };
        let m = rng.random_range(0.0..1.0);
        let s = spectral_summary(&b_mat).expect("nonzero B");
        let beta = if s.sigma_b > 0.0 {
            (m + 0.5) / s.sigma_b * rng.random_range(1.0..4.0)
        } else {
            rng.random_range(0.5..4.0)
        };
        let tau = if s.sigma_b == 0.0 { tau.max(m + 0.2) } else { tau };
        let lambda0 = gaussian_vector(&mut rng, l);
        let grad = if case == 0 {
            b_mat.transpose() * &lambda0
        } else {
            gaussian_vector(&mut rng, p)
        };
        let closed = match params::eta0(&b_mat, &lambda0, &grad, theta, tau, beta, m) {
            Ok(c) => c,
            Err(e) => {
                mismatches.push(format!("config {i}: {e}"));
                continue;
            }
        };
        cases[case] += 1;
        let kappa = (beta * s.sigma_b + tau - m) / 4.0;
        let c1 = params::c1(theta, beta, s.sigma_b_plus).expect("c1");
        let program = Eta0Program::new(&b_mat, &(b_mat.transpose() * &lambda0 - &grad), theta, tau, kappa, c1);
        let kkt = program.kkt();
        let pg = program.projected_gradient(&mut rng, ETA0_STARTS, 4000);
        match (kkt, pg) {
            (Some(k), Some(g)) if closed.is_finite() => {
                if !(rel_close(closed.value, k) && rel_close(closed.value, g)) {
                    mismatches.push(format!("config {i} (case {}): closed {} kkt {k} pg {g}", case + 1, closed.value));
                }
            }
            (None, None) if !closed.is_finite() => {}
            other => mismatches.push(format!("config {i}: feasibility disagrees ({other:?}, {:?})", closed.case)),
        }
        if case == 0 {
            zero_exact &= closed.value == 0.0 && closed.case == Eta0Case::ConsistentMultiplier;
        }
    }
    let elapsed = t0.elapsed();
    Outcome::new(
        mismatches.is_empty() && zero_exact && hand_ok && cases.iter().all(|&c| c >= 30) && elapsed < ETA0_BUDGET,
        format!(
            "{} configs (case i/ii/iii = {}/{}/{}), closed form vs KKT and {ETA0_STARTS}-start projected gradient within {ETA0_REL_TOL:.0e} rel, case i exactly 0: {zero_exact}, hand example 0.6: {hand_ok}, {:.1}s (budget {}s){}",
            cases.iter().sum::<usize>(),
            cases[0],
            cases[1],
            cases[2],
            elapsed.as_secs_f64(),
            ETA0_BUDGET.as_secs(),
            mismatches.first().map(|m| format!("; first mismatch: {m}")).unwrap_or_default()
        ),
    )
}

fn criterion_6_corollary() -> Outcome {
    let mut problems = Vec::new();
    let mut inclusion_worst: f64 = 0.0;
    let mut checks = 0;
    for i in 0..COROLLARY_INSTANCES {
        let (n, p) = (2 + i % 5, 1 + i % 4);
        let l = p + i % 3;
        let mut spec = GeneratorSpec::new(Family::QuadQuad, n, p, l, 300 + i as u64);
        spec.params = GeneratorParams {
            neg_curvature: 0.3 * (i % 4) as f64,
            ..GeneratorParams::default()
        };
        let inst = spec.generate().expect("generator");
        let theta = CAMPAIGN_THETAS[i % CAMPAIGN_THETAS.len()];
        let s = spectral_summary(&inst.b_mat).expect("spectral");
        let gamma = params::gamma(theta).expect("gamma");
        let beta_c = params::corollary_min_beta(s.sigma_b, inst.g.weak_convexity, gamma, inst.g.lipschitz).expect("beta");
        let beta = 1.1 * beta_c.max(auto_beta(&inst, theta, 0.0, 1.1).expect("auto beta"));
        let config = SolverConfig {
            theta,
            beta,
            tau: 0.0,
            g_spec: GSpec::Zero,
            rho: 1e-8,
            max_iters: 5000,
            ..SolverConfig::default()
        };
        let (start, _) = StartPoint::consistent_multiplier(&inst).expect("start");
        let solver = match Solver::new(&inst, config, start) {
            Ok(s) => s,
            Err(e) => {
                problems.push(format!("instance {i}: {e}"));
                continue;
            }
        };
        let c = solver.constants();
        let sandwich = c.delta0 >= 0.0
            && c.delta1 >= beta * s.sigma_b / 8.0 * (1.0 - 1e-12)
            && c.delta1 <= beta * s.sigma_b / 4.0 * (1.0 + 1e-12)
            && 1.0 / c.delta2 >= beta * theta * (1.0 - 1e-12)
            && 1.0 / c.delta2 <= 3.0 * beta * theta * (1.0 + 1e-12)
            && c.eta0.abs() <= ETA0_ZERO_TOL;
        if !sandwich {
            problems.push(format!(
                "instance {i}: eta0 {} delta0 {} delta1 {} in [{}, {}], 1/delta2 {} in [{}, {}]",
                c.eta0,
                c.delta0,
                c.delta1,
                beta * s.sigma_b / 8.0,
                beta * s.sigma_b / 4.0,
                1.0 / c.delta2,
                beta * theta,
                3.0 * beta * theta
            ));
        }
        let (records, _) = match solver.run() {
            Ok(r) => r,
            Err(e) => {
                problems.push(format!("instance {i}: {e}"));
                continue;
            }
        };
        let cert = certify_trace(&solver, &records).expect("certificate");
        checks += cert.evaluated();
        let corollary = [
            names::COROLLARY_DELTA0,
            names::COROLLARY_ETA0,
            names::COROLLARY_DELTA1,
            names::COROLLARY_DELTA2,
        ];
        if corollary.iter().any(|n| cert.summary.get(*n).is_none_or(|s| s.failed > 0)) || !cert.all_pass() {
            problems.push(format!("instance {i}: certificate failures {:?}", cert.failed_names()));
        }
        // direct check of P x + q - A^T lambda_hat = 0 (G = 0, quadratic f)
        let (pm, q) = inst.f.as_quadratic().expect("quadratic f");
        for r in &records[1..] {
            let g = pm * &r.x + q - inst.a.transpose() * &r.lambda_hat;
            let scale = 1.0 + (pm * &r.x).norm() + q.norm() + (inst.a.transpose() * &r.lambda_hat).norm();
            inclusion_worst = inclusion_worst.max(g.norm() / scale);
        }
    }
    Outcome::new(
        problems.is_empty() && inclusion_worst <= INCLUSION_TOL,
        format!(
            "{COROLLARY_INSTANCES} instances with invertible B, G = 0, tau = 0, consistent lambda0: {checks} checks, worst relative |P x + q - A^T lambda_hat| = {inclusion_worst:.2e} (tol {INCLUSION_TOL:.0e}){}",
            problems.first().map(|p| format!("; first problem: {p}")).unwrap_or_default()
        ),
    )
}

fn criterion_7_high_theta() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for theta in [1.7, 1.9] {
        for (seed, dim) in [(1u64, 10usize), (2, 6), (3, 15)] {
            let cfg = RunConfigFile {
                instance: InstanceSpec::Generator(GeneratorSpec::new(Family::QuadQuad, dim, dim, dim, seed)),
                solver: SolverSection {
                    theta,
                    rho: HIGH_THETA_RHO,
                    max_iters: 200_000,
                    ..SolverSection::default()
                },
                start: StartSpec::Policy(StartPolicy::ConsistentMultiplier),
                outputs: Outputs::default(),
            };
            let a = padmm::bench::execute(&cfg);
            let ok = a.report.exit_code == 0
                && matches!(a.report.outcome, Some(RunOutcome::Converged { .. }))
                && a.certificate.as_ref().is_some_and(|c| c.all_pass() && c.evaluated() > 0);
            pass &= ok;
            lines.push(format!("theta {theta} seed {seed}: k={} exit {}", a.report.iterations, a.report.exit_code));
        }
    }
    Outcome::new(pass, format!("rho {HIGH_THETA_RHO:.0e}, auto beta: {}", lines.join(", ")))
}

fn criterion_8_projection() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let mut violations = 0;
    let mut worst = f64::NEG_INFINITY;
    let mut deficient = 0;
    for _ in 0..PROJECTION_PAIRS {
        let rows = rng.random_range(1..=8);
        let cols = rng.random_range(1..=8);
        let rank = rng.random_range(1..=rows.min(cols));
        deficient += usize::from(rank < rows.min(cols));
        let scale = 10f64.powi(rng.random_range(-2..=2));
        let s = matrix_of_rank(&mut rng, rows, cols, rank, 0.05 * scale, 5.0 * scale);
        let u = if rng.random_bool(0.2) {
            // mostly in the kernel of S
            let k = gaussian_vector(&mut rng, cols);
            let proj = RangeProjector::row_space(&s);
            proj.residual(&k).expect("dims") + proj.project(&k).expect("dims") * 1e-6
        } else {
            gaussian_vector(&mut rng, cols)
        };
        let sigma_plus = spectral_summary(&s).expect("nonzero").sigma_b_plus;
        let lhs = RangeProjector::row_space(&s).project(&u).expect("dims").norm();
        let rhs = (&s * &u).norm() / sigma_plus.sqrt();
        worst = worst.max(lhs - rhs);
        violations += usize::from(lhs > rhs + PROJECTION_TOL);
    }
    Outcome::new(
        violations == 0,
        format!(
            "{PROJECTION_PAIRS} pairs ({deficient} rank deficient), {violations} violations of |P u| <= |S u|/sqrt(sigma+) + {PROJECTION_TOL:.0e}, worst lhs - rhs = {worst:.2e}"
        ),
    )
}

fn run_cli(config: &Path) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_padmm"))
        .arg("run")
        .arg(config)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    Ok(())
}

fn criterion_9_reproducible() -> Outcome {
    let dir = tempfile::tempdir().expect("tempdir");
    let trace = dir.path().join("trace.csv");
    let config = dir.path().join("run.json");
    let text = format!(
        r#"{{"instance": {{"generator": {{"family": "box-cos", "n": 6, "p": 7, "l": 8, "seed": 9}}}},
            "solver": {{"theta": 1.618, "tau": 0.0, "G": {{"kind": "linearized"}}, "rho": 1e-8, "max_iters": 3000}},
            "start": "zeros",
            "outputs": {{"trace": {:?}}}}}"#,
        trace.to_str().expect("utf-8 path")
    );
    std::fs::write(&config, text).expect("write config");
    let mut traces = Vec::new();
    for _ in 0..2 {
        if let Err(e) = run_cli(&config) {
            return Outcome::new(false, format!("padmm run failed: {e}"));
        }
        traces.push(std::fs::read(&trace).expect("trace written"));
        std::fs::remove_file(&trace).expect("remove trace");
    }
    let rows = traces[0].iter().filter(|b| **b == b'\n').count();
    Outcome::new(
        traces[0] == traces[1] && rows > 2,
        format!("two `padmm run` executions, {} bytes, {rows} lines, identical: {}", traces[0].len(), traces[0] == traces[1]),
    )
}

fn main() {
    let t0 = Instant::now();
    let mut results = vec![(1, criterion_1_scalar())];
    let (runs, setup, elapsed) = campaign_runs();
    results.push((2, criterion_2_merit(&runs, &setup, elapsed)));
    results.push((3, criterion_3_lemmas(&runs)));
    results.push((4, criterion_4_rates(&runs)));
    drop(runs);
    results.push((5, criterion_5_eta0()));
    results.push((6, criterion_6_corollary()));
    results.push((7, criterion_7_high_theta()));
    results.push((8, criterion_8_projection()));
    results.push((9, criterion_9_reproducible()));

    let mut failed = 0;
    for (i, r) in &results {
        println!("criterion {i}: {} | {}", if r.pass { "PASS" } else { "FAIL" }, r.detail);
        failed += usize::from(!r.pass);
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        results.len() - failed,
        results.len(),
        t0.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
