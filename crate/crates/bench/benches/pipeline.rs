//! Throughput benchmarks: channel assembly, optimizer scaling in the RIS
//! element count, the PDE solver, and one TDMA trace.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lcris_bench::sized_scenario;
use lcris_core::optimizer::{benchmark_optimize, optimize};
use lcris_core::pde::{solve_director_pde, FieldProfile, MaterialParams, SolveOptions};
use lcris_core::pipeline::{default_trace_dt, optimizer_config, prepare};
use lcris_core::scenario::Scenario;
use lcris_core::tdma::{simulate_cycle, Schedule};
use std::hint::black_box;

fn bench_channel_assembly(c: &mut Criterion) {
    let sc = sized_scenario(32, 32);
    c.bench_function("assemble_channels_1024", |b| {
        b.iter(|| black_box(lcris_core::assemble_scenario_channels(&sc, 7).unwrap()))
    });
}

fn bench_optimize_scaling(c: &mut Criterion) {
    let mut group = c.benchmark_group("optimize");
    group.sample_size(10);
    for (rows, cols) in [(16, 16), (32, 16), (32, 32)] {
        let n = rows * cols;
        let sc = sized_scenario(rows, cols);
        let art = prepare(&sc, 0).unwrap();
        let cfg = optimizer_config(&sc);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| black_box(optimize(&art.kernels, &cfg, &[0, 1, 2]).unwrap()))
        });
    }
    group.finish();
}

fn bench_pde_solver(c: &mut Criterion) {
    let p = MaterialParams::default();
    let opts = SolveOptions { nz: 101, horizon: 0.2 * p.tau_mol_minus(), snapshots: 11, exact_source: false };
    c.bench_function("director_pde_nz101", |b| {
        b.iter(|| black_box(solve_director_pde(&p, &FieldProfile::Constant(0.0), &opts).unwrap()))
    });
}

fn bench_tdma_trace(c: &mut Criterion) {
    let sc = sized_scenario(16, 16);
    let art = prepare(&sc, 0).unwrap();
    let configs = benchmark_optimize(&art.kernels, &art.cell, art.gamma_thr).unwrap();
    let schedule = Schedule { order: vec![0, 1, 2], t_s: 57.0e-3 };
    let dt = default_trace_dt(&art.cell);
    c.bench_function("tdma_cycle_256", |b| {
        b.iter(|| black_box(simulate_cycle(&configs, &schedule, &art.cell, &art.kernels, dt).unwrap()))
    });
}

fn bench_scenario_parse(c: &mut Criterion) {
    let text = serde_json::to_string(&Scenario::paper_default()).unwrap();
    c.bench_function("scenario_parse", |b| b.iter(|| black_box(Scenario::from_json(&text).unwrap())));
}

criterion_group!(
    benches,
    bench_channel_assembly,
    bench_optimize_scaling,
    bench_pde_solver,
    bench_tdma_trace,
    bench_scenario_parse
);
criterion_main!(benches);
