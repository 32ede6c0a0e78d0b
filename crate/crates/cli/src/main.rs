//! Command-line front end: scenario configuration, subcommand dispatch,
//! deterministic seeding, and CSV/JSON artifact emission.
//!
//! Every run writes its data files plus a `manifest.json` carrying the fully
//! resolved configuration, the seed, the tool version, and a SHA-256 digest
//! of each emitted file, so identical `(config, seed, version)` runs are
//! bit-reproducible and verifiable.

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use lcris_core::pipeline::{default_trace_dt, optimizer_config, prepare};
use lcris_core::scenario::Scenario;
use lcris_core::tdma::{delta_histogram, enumerate_orders, rate_sweep, simulate_cycle, Schedule};
use lcris_core::{
    benchmark_optimize, fit_single_exponential, kappa_of_field, omega_of_time, optimize, solve_director_pde,
    FieldProfile, OptimizeReport, SolveOptions,
};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

mod manifest;
use manifest::ManifestBuilder;

#[derive(Parser)]
#[command(
    name = "lcris",
    version,
    about = "Liquid-crystal RIS transient modeling, phase-shift optimization, and TDMA evaluation"
)]
struct Cli {
    /// Scenario JSON file; omitted means the built-in default scenario.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output directory (created if missing).
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,

    /// Master seed override.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Serving order as a comma list of 1-based user ids, e.g. `1,3,2`.
    #[arg(long, global = true)]
    order: Option<String>,

    /// Override of the realizable phase range upper bound, radians.
    #[arg(long, global = true)]
    omega_max: Option<f64>,

    /// Slot lengths for the rate sweep, comma list in milliseconds.
    #[arg(long, global = true)]
    ts_ms: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the transition-aware optimizer; emits the report JSON and the
    /// per-iteration cost trace CSV.
    Optimize,
    /// Simulate one TDMA cycle for the proposed and benchmark designs;
    /// emits one trace CSV per design.
    SimulateTdma,
    /// Sweep the slot length and emit the effective-rate comparison CSV.
    RateSweep,
    /// Differential-phase histograms of the benchmark and proposed designs.
    Histogram {
        /// Number of bins.
        #[arg(long, default_value_t = 64)]
        bins: usize,
    },
    /// Solve the director PDE for a relaxation and a rise, emit the phase
    /// trajectories as CSV and the single-exponential fits as JSON.
    PdeValidate,
    /// Optimize under every cyclically distinct serving order and emit the
    /// per-order cost CSV.
    Orders,
}

fn parse_order(text: &str, k: usize) -> anyhow::Result<Vec<usize>> {
    let order: Vec<usize> = text
        .split(',')
        .map(|s| {
            let id: usize = s.trim().parse().context("order entries must be integers")?;
            if id == 0 || id > k {
                bail!("user id {id} outside 1..={k}");
            }
            Ok(id - 1)
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(order)
}

fn parse_ts_list(text: &str) -> anyhow::Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            let ms: f64 = s.trim().parse().context("slot lengths must be numbers (ms)")?;
            if !(ms > 0.0) {
                bail!("slot lengths must be positive");
            }
            Ok(ms * 1e-3)
        })
        .collect()
}

fn load_scenario(cli: &Cli) -> anyhow::Result<Scenario> {
    let mut sc = match &cli.config {
        Some(path) => Scenario::from_path(path).with_context(|| format!("reading {}", path.display()))?,
        None => Scenario::paper_default(),
    };
    if let Some(seed) = cli.seed {
        sc.seed = seed;
    }
    if let Some(omega_max) = cli.omega_max {
        sc.lc.omega_max_rad = omega_max;
        sc.validate()?;
    }
    Ok(sc)
}

fn fmt_f(v: f64) -> String {
    format!("{v:.10e}")
}

/// Re-check the report invariants: monotone accepted cost, SNR safety of
/// accepted iterations, and exact multiplier discipline.
fn verify_report(report: &OptimizeReport, gamma_thr_db: f64, alpha: f64) -> anyhow::Result<()> {
    for w in report.trace.windows(2) {
        if w[1].cost > w[0].cost {
            bail!("cost trace increased at iteration {}", w[1].iteration);
        }
        for (j, (&l0, &l1)) in w[0].lambda.iter().zip(&w[1].lambda).enumerate() {
            let expect = if w[1].accepted[j] { l0 * alpha } else { l0 / alpha };
            if l1 != expect {
                bail!("multiplier discipline violated at iteration {} slot {j}", w[1].iteration);
            }
        }
    }
    for rec in &report.trace {
        for (&snr, &acc) in rec.min_snr_db.iter().zip(&rec.accepted) {
            if acc && snr < gamma_thr_db - 1e-9 {
                bail!("accepted iterate below the SNR threshold at iteration {}", rec.iteration);
            }
        }
    }
    Ok(())
}

fn cost_trace_csv(report: &OptimizeReport) -> String {
    let k = report.order.len();
    let mut out = String::from("iteration,mean_max_transition_ms");
    for j in 0..k {
        write!(out, ",min_snr_dB_user_{}", report.order[j] + 1).unwrap();
    }
    for j in 0..k {
        write!(out, ",accepted_user_{}", report.order[j] + 1).unwrap();
    }
    out.push('\n');
    for rec in &report.trace {
        write!(out, "{},{}", rec.iteration, fmt_f(rec.cost * 1e3)).unwrap();
        for &snr in &rec.min_snr_db {
            write!(out, ",{}", fmt_f(snr)).unwrap();
        }
        for &acc in &rec.accepted {
            write!(out, ",{}", acc as u8).unwrap();
        }
        out.push('\n');
    }
    out
}

fn run_optimize(sc: &Scenario, order: &[usize], out: &mut ManifestBuilder) -> anyhow::Result<OptimizeReport> {
    let art = prepare(sc, sc.seed)?;
    let cfg = optimizer_config(sc);
    let report = optimize(&art.kernels, &cfg, order)?;
    verify_report(&report, sc.rf.gamma_thr_db, cfg.alpha)?;
    out.write_file("optimize_report.json", &serde_json::to_string_pretty(&report)?)?;
    out.write_file("cost_trace.csv", &cost_trace_csv(&report))?;
    Ok(report)
}

fn trace_csv(trace: &lcris_core::TdmaTrace) -> String {
    let mut out = String::from("t_ms,snr_min_dB,active_user\n");
    for i in 0..trace.t.len() {
        writeln!(
            out,
            "{},{},{}",
            fmt_f(trace.t[i] * 1e3),
            fmt_f(trace.snr_min_db[i]),
            trace.active_user[i] + 1
        )
        .unwrap();
    }
    out
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    let sc = load_scenario(&cli)?;
    let k = sc.geometry.users.len();
    let order = match &cli.order {
        Some(text) => {
            let o = parse_order(text, k)?;
            Schedule { order: o.clone(), t_s: 1.0 }.validate(k)?;
            o
        }
        None => (0..k).collect(),
    };

    std::fs::create_dir_all(&cli.out)?;
    let mut out = ManifestBuilder::new(&cli.out, &sc);

    match &cli.command {
        Command::Optimize => {
            run_optimize(&sc, &order, &mut out)?;
        }
        Command::SimulateTdma => {
            let art = prepare(&sc, sc.seed)?;
            let report = run_optimize(&sc, &order, &mut out)?;
            let bench = benchmark_optimize(&art.kernels, &art.cell, art.gamma_thr)?;
            let schedule = Schedule { order: order.clone(), t_s: 57.0e-3 };
            let dt = default_trace_dt(&art.cell);
            let trace_p = simulate_cycle(&report.configs, &schedule, &art.cell, &art.kernels, dt)?;
            let trace_b = simulate_cycle(&bench, &schedule, &art.cell, &art.kernels, dt)?;
            out.write_file("tdma_trace_proposed.csv", &trace_csv(&trace_p))?;
            out.write_file("tdma_trace_benchmark.csv", &trace_csv(&trace_b))?;
        }
        Command::RateSweep => {
            let art = prepare(&sc, sc.seed)?;
            let report = run_optimize(&sc, &order, &mut out)?;
            let bench = benchmark_optimize(&art.kernels, &art.cell, art.gamma_thr)?;
            let t_s_list = match &cli.ts_ms {
                Some(text) => parse_ts_list(text)?,
                None => (0..24).map(|i| 4.0e-3 * 1.25f64.powi(i)).collect(),
            };
            let rows = rate_sweep(
                &report.configs,
                &bench,
                &t_s_list,
                &art.cell,
                &art.kernels,
                &order,
                sc.rf.gamma_thr_db,
                default_trace_dt(&art.cell),
            )?;
            let mut csv = String::from("T_s_ms,rate_proposed,rate_benchmark\n");
            for (p, b) in &rows {
                writeln!(csv, "{},{},{}", fmt_f(p.t_s * 1e3), fmt_f(p.rate), fmt_f(b.rate)).unwrap();
            }
            out.write_file("rate_sweep.csv", &csv)?;
        }
        Command::Histogram { bins } => {
            let art = prepare(&sc, sc.seed)?;
            let report = run_optimize(&sc, &order, &mut out)?;
            let bench = benchmark_optimize(&art.kernels, &art.cell, art.gamma_thr)?;
            let omega_max = sc.lc.omega_max_rad;
            let h_b = delta_histogram(&bench, *bins, omega_max)?;
            let h_p = delta_histogram(&report.configs, *bins, omega_max)?;
            let mut csv = String::from("bin_center_rad,count_benchmark,count_proposed\n");
            for i in 0..*bins {
                writeln!(csv, "{},{},{}", fmt_f(h_b.bin_centers[i]), h_b.counts[i], h_p.counts[i]).unwrap();
            }
            out.write_file("delta_histogram.csv", &csv)?;
        }
        Command::PdeValidate => {
            let p = sc.pde;
            let mut fits = BTreeMap::new();
            for (name, drive, horizon) in [
                ("decay", FieldProfile::Constant(0.0), 5.0 * p.tau_mol_minus()),
                ("rise", FieldProfile::Constant(p.e_max), 30.0 * p.tau_r()),
            ] {
                let opts = SolveOptions { nz: 201, horizon, snapshots: 801, exact_source: false };
                let field = solve_director_pde(&p, &drive, &opts)?;
                let kappa = kappa_of_field(&field, &p);
                let history = omega_of_time(&field.t_grid, &kappa, &p);
                let fit = fit_single_exponential(&history.t, &history.omega)?;
                let mut csv = String::from("t_s,omega_rad,kappa_rad_per_m\n");
                for i in 0..history.t.len() {
                    writeln!(csv, "{},{},{}", fmt_f(history.t[i]), fmt_f(history.omega[i]), fmt_f(history.kappa[i]))
                        .unwrap();
                }
                out.write_file(&format!("pde_{name}.csv"), &csv)?;
                fits.insert(
                    name,
                    serde_json::json!({
                        "omega_0": fit.omega_0,
                        "omega_d": fit.omega_d,
                        "tau_c_s": fit.tau_c,
                        "rmse": fit.rmse,
                        "degenerate": fit.degenerate,
                    }),
                );
            }
            out.write_file("pde_fit_report.json", &serde_json::to_string_pretty(&fits)?)?;
        }
        Command::Orders => {
            let art = prepare(&sc, sc.seed)?;
            let cfg = optimizer_config(&sc);
            let orders = enumerate_orders(k)?;
            let mut csv = String::from("order,initial_mean_max_transition_ms,final_mean_max_transition_ms\n");
            for ord in &orders {
                let report = optimize(&art.kernels, &cfg, ord)?;
                verify_report(&report, sc.rf.gamma_thr_db, cfg.alpha)?;
                let label: Vec<String> = ord.iter().map(|u| (u + 1).to_string()).collect();
                writeln!(
                    csv,
                    "{},{},{}",
                    label.join("-"),
                    fmt_f(report.initial_cost * 1e3),
                    fmt_f(report.final_cost * 1e3)
                )
                .unwrap();
            }
            out.write_file("orders.csv", &csv)?;
        }
    }

    out.finish()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_parsing_is_one_based() {
        assert_eq!(parse_order("1,3,2", 3).unwrap(), vec![0, 2, 1]);
        assert!(parse_order("0,1", 2).is_err());
        assert!(parse_order("1,4", 3).is_err());
    }

    #[test]
    fn ts_list_parses_milliseconds() {
        assert_eq!(parse_ts_list("1, 2.5").unwrap(), vec![1.0e-3, 2.5e-3]);
        assert!(parse_ts_list("-1").is_err());
    }
}

// Path helper used by the manifest module.
pub(crate) fn join_out(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}
