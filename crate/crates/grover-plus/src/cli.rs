//! Batch harness behind the `grover-plus` binary: single runs, parameter
//! sweeps, the verification suite, and analytic tables, emitted as CSV or
//! JSON.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resource cap exceeded.

use std::f64::consts::FRAC_PI_2;
use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analytic::{
    asymptotic_mixing, dicke_plan, iteration_count, optimal_mixing, optimal_zeta, OscillationPlan,
};
use crate::error::Error;
use crate::search::{
    run_dicke_with, run_grover_plus_with, run_grover_with, run_modified_grover_with, IterationMode,
    Plan, RunOptions, Trajectory,
};
use crate::statevec::DEFAULT_QUBIT_CAP;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "grover-plus",
    version,
    about = "Hamming-weight-aware quantum search: simulate, sweep, verify, tabulate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one algorithm instance and print one record.
    Simulate(SimulateArgs),
    /// Run a grid of (algo, n, weight) points in deterministic order.
    Sweep(SweepArgs),
    /// Run the invariant suites and report per-suite deviations.
    Verify(VerifyArgs),
    /// Print the analytic table for every weight at a given size.
    Table(TableArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Algo {
    Grover,
    GroverPlus,
    Dicke,
    Modified,
}

impl Algo {
    fn label(self) -> &'static str {
        match self {
            Algo::Grover => "grover",
            Algo::GroverPlus => "grover-plus",
            Algo::Dicke => "dicke",
            Algo::Modified => "modified",
        }
    }
}

/// `auto`, `paper-floor`, or an explicit iteration count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct IterSpec(IterationMode);

impl FromStr for IterSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(IterSpec(IterationMode::Auto)),
            "paper-floor" => Ok(IterSpec(IterationMode::PaperFloor)),
            other => other
                .parse::<u64>()
                .map(|t| IterSpec(IterationMode::Fixed(t)))
                .map_err(|_| format!("expected auto|T|paper-floor, got {other:?}")),
        }
    }
}

/// Inclusive integer range written `A..B`.
#[derive(Clone, Copy, Debug)]
struct InclusiveRange {
    lo: u32,
    hi: u32,
}

impl FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
        let lo = a.parse().map_err(|e| format!("bad range start: {e}"))?;
        let hi = b.parse().map_err(|e| format!("bad range end: {e}"))?;
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Self { lo, hi })
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format.
    #[arg(long = "out", value_enum, default_value = "csv")]
    format: OutputFormat,
    /// Output path; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    #[arg(long)]
    n: u32,
    /// Target basis index (grover, grover-plus) or registry index (modified).
    #[arg(long)]
    target: Option<u64>,
    /// Target Hamming weight (dicke, modified; also selects a canonical
    /// target for grover and grover-plus).
    #[arg(long)]
    weight: Option<u32>,
    /// Iteration count: auto, an explicit T, or paper-floor.
    #[arg(long, default_value = "auto")]
    iters: IterSpec,
    /// Dense-simulation qubit cap.
    #[arg(long, default_value_t = DEFAULT_QUBIT_CAP)]
    cap: u32,
    /// Sample the success probability with this many shots.
    #[arg(long)]
    shots: Option<u64>,
    /// Seed for the shot sampler (ChaCha8).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Algorithms to sweep; may be repeated.
    #[arg(long, value_enum, required = true)]
    algo: Vec<Algo>,
    #[arg(long)]
    n: Option<u32>,
    /// Inclusive qubit range A..B.
    #[arg(long = "n-range")]
    n_range: Option<InclusiveRange>,
    #[arg(long)]
    weight: Option<u32>,
    /// Inclusive weight range A..B; defaults to 0..n per grid point.
    #[arg(long = "weight-range")]
    weight_range: Option<InclusiveRange>,
    #[arg(long, default_value = "auto")]
    iters: IterSpec,
    /// Dense-simulation qubit cap; larger grid points run analytically.
    #[arg(long, default_value_t = DEFAULT_QUBIT_CAP)]
    cap: u32,
    #[arg(long)]
    shots: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Largest register size exercised by the suites.
    #[arg(long = "max-n", default_value_t = 10)]
    max_n: u32,
    /// Budget for the simulation-accuracy checks.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    n: u32,
    #[command(flatten)]
    output: OutputArgs,
}

/// One row of simulate/sweep output.
#[derive(Debug, Clone)]
pub struct ExperimentRecord {
    pub algo: Algo,
    pub n: u32,
    pub delta: u32,
    pub zeta: f64,
    pub theta: f64,
    pub t_star: u64,
    pub predicted_success: f64,
    pub simulated_success: Option<f64>,
    pub max_deviation: Option<f64>,
    pub queries: u64,
    pub wall_time_ns: u64,
    pub n_prime: Option<u32>,
    pub sampled_success: Option<f64>,
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors, 0 on --help/--version
        Err(e) => e.exit(),
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(Error::ResourceCap { n, cap }) => {
            eprintln!("error: {n} qubits exceeds the cap of {cap}");
            EXIT_RESOURCE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli) -> crate::Result<i32> {
    match cli.command {
        Command::Simulate(args) => cmd_simulate(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Table(args) => cmd_table(args),
    }
}

fn cmd_simulate(args: SimulateArgs) -> crate::Result<i32> {
    let opts = RunOptions {
        cap: args.cap.min(crate::statevec::MAX_QUBIT_CAP),
        iterations: args.iters.0,
        ..Default::default()
    };
    if args.cap > crate::statevec::MAX_QUBIT_CAP {
        return Err(Error::Domain(format!(
            "cap {} exceeds hard maximum {}",
            args.cap,
            crate::statevec::MAX_QUBIT_CAP
        )));
    }
    let record = simulate_record(
        args.algo,
        args.n,
        resolve_target(args.algo, args.target, args.weight)?,
        &opts,
        args.shots.map(|s| (s, args.seed)),
    )?;
    let shots = args.shots.is_some();
    emit(&[record], args.algo == Algo::Modified, shots, &args.output)?;
    Ok(EXIT_OK)
}

/// A target resolved from `--target` / `--weight`.
#[derive(Debug, Clone, Copy)]
enum ResolvedTarget {
    Index(u64),
    Weight(u32),
    /// Modified Grover: class weight plus registry index.
    Registry(u32, u64),
}

fn resolve_target(
    algo: Algo,
    target: Option<u64>,
    weight: Option<u32>,
) -> crate::Result<ResolvedTarget> {
    match algo {
        Algo::Grover | Algo::GroverPlus => match (target, weight) {
            (Some(k), _) => Ok(ResolvedTarget::Index(k)),
            (None, Some(w)) => {
                if w >= 64 {
                    return Err(Error::Domain(format!("weight {w} too large")));
                }
                Ok(ResolvedTarget::Index((1u64 << w) - 1))
            }
            (None, None) => Err(Error::Domain(
                "grover/grover-plus need --target or --weight".into(),
            )),
        },
        Algo::Dicke => weight
            .map(ResolvedTarget::Weight)
            .ok_or_else(|| Error::Domain("dicke needs --weight".into())),
        Algo::Modified => {
            let w = weight.ok_or_else(|| Error::Domain("modified needs --weight".into()))?;
            Ok(ResolvedTarget::Registry(w, target.unwrap_or(0)))
        }
    }
}

fn simulate_record(
    algo: Algo,
    n: u32,
    target: ResolvedTarget,
    opts: &RunOptions,
    shots: Option<(u64, u64)>,
) -> crate::Result<ExperimentRecord> {
    let start = Instant::now();
    let traj = match (algo, target) {
        (Algo::Grover, ResolvedTarget::Index(k)) => run_grover_with(n, k, opts)?,
        (Algo::GroverPlus, ResolvedTarget::Index(k)) => run_grover_plus_with(n, k, opts)?,
        (Algo::Dicke, ResolvedTarget::Weight(w)) => run_dicke_with(n, w, opts)?,
        (Algo::Modified, ResolvedTarget::Registry(w, k)) => {
            run_modified_grover_with(n, w, k, opts)?
        }
        _ => {
            return Err(Error::Domain(
                "target kind does not fit the algorithm".into(),
            ))
        }
    };
    let wall_time_ns = start.elapsed().as_nanos() as u64;
    Ok(record_from_trajectory(
        algo,
        n,
        target_weight(&target),
        &traj,
        wall_time_ns,
        shots,
    ))
}

fn target_weight(target: &ResolvedTarget) -> u32 {
    match *target {
        ResolvedTarget::Index(k) => k.count_ones(),
        ResolvedTarget::Weight(w) | ResolvedTarget::Registry(w, _) => w,
    }
}

fn record_from_trajectory(
    algo: Algo,
    n: u32,
    delta: u32,
    traj: &Trajectory,
    wall_time_ns: u64,
    shots: Option<(u64, u64)>,
) -> ExperimentRecord {
    let (zeta, n_prime) = match &traj.plan {
        Plan::Oscillation(p) => (p.zeta.radians(), None),
        Plan::Dicke(p) => (p.zeta.radians(), None),
        Plan::Registry { n_prime, .. } => (FRAC_PI_2, Some(*n_prime)),
    };
    let simulated = *traj
        .success_by_iteration
        .last()
        .expect("trajectories always record t = 0");
    let predicted = traj.plan.predicted_success();
    let sampled_success = shots.map(|(s, seed)| sample_success(simulated, s, seed));
    ExperimentRecord {
        algo,
        n,
        delta,
        zeta,
        theta: traj.plan.theta(),
        t_star: traj.plan.t_star(),
        predicted_success: predicted,
        simulated_success: Some(simulated),
        max_deviation: Some((predicted - simulated).abs()),
        queries: traj.queries,
        wall_time_ns,
        n_prime,
        sampled_success,
    }
}

/// Bernoulli sampling of the exact success probability, ChaCha8-seeded.
fn sample_success(p: f64, shots: u64, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hits = (0..shots).filter(|_| rng.gen::<f64>() < p).count();
    hits as f64 / shots as f64
}

/// Analytic-only record for grid points above the simulation cap.
fn analytic_record(algo: Algo, n: u32, delta: u32) -> crate::Result<ExperimentRecord> {
    let start = Instant::now();
    let (zeta, theta, t_star, n_prime) = match algo {
        Algo::Grover => {
            let p = OscillationPlan::grover(n, delta)?;
            (p.zeta.radians(), p.theta, p.t_star, None)
        }
        Algo::GroverPlus => {
            let p = OscillationPlan::grover_plus(n, delta)?;
            (p.zeta.radians(), p.theta, p.t_star, None)
        }
        Algo::Dicke => {
            let p = dicke_plan(n, delta)?;
            (p.zeta.radians(), p.theta, p.t_star, None)
        }
        Algo::Modified => {
            let reg = crate::analytic::registry_qubits(n, delta)?;
            let theta = crate::analytic::registry_mixing(n, delta)?;
            (FRAC_PI_2, theta, iteration_count(theta)?, Some(reg.n_prime))
        }
    };
    Ok(ExperimentRecord {
        algo,
        n,
        delta,
        zeta,
        theta,
        t_star,
        predicted_success: crate::analytic::predicted_success(theta, t_star),
        simulated_success: None,
        max_deviation: None,
        queries: t_star,
        wall_time_ns: start.elapsed().as_nanos() as u64,
        n_prime,
        sampled_success: None,
    })
}

fn cmd_sweep(args: SweepArgs) -> crate::Result<i32> {
    let ns: Vec<u32> = match (args.n, args.n_range) {
        (Some(n), None) => vec![n],
        (None, Some(r)) => (r.lo..=r.hi).collect(),
        (Some(_), Some(_)) => return Err(Error::Domain("give --n or --n-range, not both".into())),
        (None, None) => return Err(Error::Domain("sweep needs --n or --n-range".into())),
    };
    let mut algos = args.algo.clone();
    algos.sort();
    algos.dedup();

    let opts = RunOptions {
        cap: args.cap.min(crate::statevec::MAX_QUBIT_CAP),
        iterations: args.iters.0,
        ..Default::default()
    };
    let shots = args.shots.map(|s| (s, args.seed));

    let mut records = Vec::new();
    for &algo in &algos {
        for &n in &ns {
            let weights: Vec<u32> = match (args.weight, args.weight_range) {
                (Some(w), None) => vec![w],
                (None, Some(r)) => (r.lo..=r.hi.min(n)).collect(),
                (None, None) => (0..=n).collect(),
                (Some(_), Some(_)) => {
                    return Err(Error::Domain(
                        "give --weight or --weight-range, not both".into(),
                    ))
                }
            };
            for delta in weights {
                if delta > n {
                    continue;
                }
                // the working registry is only defined for interior weights
                if algo == Algo::Modified && (delta == 0 || delta == n) {
                    continue;
                }
                let sim_qubits = match algo {
                    Algo::Modified => crate::analytic::registry_qubits(n, delta)?.n_prime,
                    _ => n,
                };
                let record = if sim_qubits <= opts.cap && sim_qubits >= 1 {
                    let target = match algo {
                        Algo::Grover | Algo::GroverPlus => {
                            ResolvedTarget::Index((1u64 << delta) - 1)
                        }
                        Algo::Dicke => ResolvedTarget::Weight(delta),
                        Algo::Modified => ResolvedTarget::Registry(delta, 0),
                    };
                    simulate_record(algo, n, target, &opts, shots)?
                } else {
                    analytic_record(algo, n, delta)?
                };
                records.push(record);
            }
        }
    }
    let with_n_prime = algos.contains(&Algo::Modified);
    emit(&records, with_n_prime, args.shots.is_some(), &args.output)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs) -> crate::Result<i32> {
    let results = verify::run_all(args.max_n, args.tol)?;
    for r in &results {
        println!(
            "{} {:<32} max_deviation={:.3e} tolerance={:.1e}",
            if r.pass { "PASS" } else { "FAIL" },
            r.name,
            r.max_deviation,
            r.tolerance
        );
    }
    if verify::all_pass(&results) {
        println!("verify: all {} suites passed", results.len());
        Ok(EXIT_OK)
    } else {
        let failed = results.iter().filter(|r| !r.pass).count();
        println!("verify: {failed} of {} suites FAILED", results.len());
        Ok(EXIT_VERIFY_FAILED)
    }
}

fn cmd_table(args: TableArgs) -> crate::Result<i32> {
    let n = args.n;
    if n == 0 {
        return Err(Error::Domain("table needs n >= 1".into()));
    }
    let mut rows = Vec::new();
    for delta in 0..=n {
        let zeta = optimal_zeta(n, delta)?;
        let theta = optimal_mixing(n, delta)?;
        let plan = dicke_plan(n, delta)?;
        let min_flips = delta.min(n - delta);
        let (_, regime) = asymptotic_mixing(n, min_flips);
        rows.push(serde_json::json!({
            "delta": delta,
            "zeta": zeta.radians(),
            "theta": theta,
            "t_star": iteration_count(theta)?,
            "theta_dicke": plan.theta,
            "t_star_dicke": plan.t_star,
            "regime": regime.to_string(),
        }));
    }
    let columns = [
        "delta",
        "zeta",
        "theta",
        "t_star",
        "theta_dicke",
        "t_star_dicke",
        "regime",
    ];
    let text = match args.output.format {
        OutputFormat::Json => serde_json::to_string_pretty(&rows).expect("json") + "\n",
        OutputFormat::Csv => {
            let mut out = columns.join(",") + "\n";
            for row in &rows {
                let line: Vec<String> = columns
                    .iter()
                    .map(|c| match &row[c] {
                        serde_json::Value::String(s) => s.clone(),
                        v => v.to_string(),
                    })
                    .collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            out
        }
    };
    write_output(&text, &args.output.output)
}

/// The pinned record columns; `n_prime` and `sampled_success` are appended
/// only when the emission uses them.
fn record_columns(with_n_prime: bool, with_shots: bool) -> Vec<&'static str> {
    let mut cols = vec![
        "algo",
        "n",
        "delta",
        "zeta",
        "theta",
        "t_star",
        "predicted_success",
        "simulated_success",
        "max_deviation",
        "queries",
        "wall_time_ns",
    ];
    if with_n_prime {
        cols.push("n_prime");
    }
    if with_shots {
        cols.push("sampled_success");
    }
    cols
}

fn record_value(record: &ExperimentRecord, column: &str) -> serde_json::Value {
    use serde_json::{json, Value};
    match column {
        "algo" => json!(record.algo.label()),
        "n" => json!(record.n),
        "delta" => json!(record.delta),
        "zeta" => json!(record.zeta),
        "theta" => json!(record.theta),
        "t_star" => json!(record.t_star),
        "predicted_success" => json!(record.predicted_success),
        "simulated_success" => record.simulated_success.map_or(Value::Null, |v| json!(v)),
        "max_deviation" => record.max_deviation.map_or(Value::Null, |v| json!(v)),
        "queries" => json!(record.queries),
        "wall_time_ns" => json!(record.wall_time_ns),
        "n_prime" => record.n_prime.map_or(Value::Null, |v| json!(v)),
        "sampled_success" => record.sampled_success.map_or(Value::Null, |v| json!(v)),
        other => unreachable!("unknown column {other}"),
    }
}

fn csv_cell(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::Null => String::new(),
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Number(v) => {
            // shortest round-trip decimals for floats
            if let Some(f) = v.as_f64() {
                if v.is_f64() {
                    return format!("{f}");
                }
            }
            v.to_string()
        }
        other => other.to_string(),
    }
}

/// Renders records to CSV or JSON; both formats carry identical fields.
pub fn render_records(
    records: &[ExperimentRecord],
    with_n_prime: bool,
    with_shots: bool,
    json: bool,
) -> String {
    let columns = record_columns(with_n_prime, with_shots);
    if json {
        let objs: Vec<serde_json::Value> = records
            .iter()
            .map(|r| {
                let map: serde_json::Map<String, serde_json::Value> = columns
                    .iter()
                    .map(|c| (c.to_string(), record_value(r, c)))
                    .collect();
                serde_json::Value::Object(map)
            })
            .collect();
        serde_json::to_string_pretty(&objs).expect("json") + "\n"
    } else {
        let mut out = columns.join(",") + "\n";
        for r in records {
            let cells: Vec<String> = columns
                .iter()
                .map(|c| csv_cell(&record_value(r, c)))
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn emit(
    records: &[ExperimentRecord],
    with_n_prime: bool,
    with_shots: bool,
    output: &OutputArgs,
) -> crate::Result<i32> {
    let text = render_records(
        records,
        with_n_prime,
        with_shots,
        output.format == OutputFormat::Json,
    );
    write_output(&text, &output.output)
}

fn write_output(text: &str, path: &Option<PathBuf>) -> crate::Result<i32> {
    match path {
        None => {
            print!("{text}");
            Ok(EXIT_OK)
        }
        Some(p) => {
            let mut file = File::create(p)
                .map_err(|e| Error::Domain(format!("cannot open {}: {e}", p.display())))?;
            file.write_all(text.as_bytes())
                .map_err(|e| Error::Domain(format!("write failed: {e}")))?;
            Ok(EXIT_OK)
        }
    }
}
