//! Acceptance suite: one test per acceptance criterion, each printing a
//! PASS/FAIL line with the measured quantities (run with `--nocapture` to
//! see the values for passing criteria).
//!
//! Heavy artifacts (seeded optimizer runs on the stock scenario) are shared
//! across criteria through lazily initialized statics.

use lcris_core::lc::{drive_trajectory, transition_time, LCCellModel, PhaseConfig};
use lcris_core::optimizer::{
    assignment_residual_stats, benchmark_optimize, coordinate_cost, line_search_element, optimize, CoordinateCtx,
    OptimizeReport, SnrKernel,
};
use lcris_core::pde::{
    analytic_decay, analytic_rise, fit_single_exponential, kappa_of_field, omega_of_time, prop1_series,
    rise_error_budget, solve_director_pde, DirectorField, FieldProfile, MaterialParams, SolveOptions,
};
use lcris_core::pipeline::{default_trace_dt, optimizer_config, prepare};
use lcris_core::scenario::Scenario;
use lcris_core::seed::substream;
use lcris_core::tdma::{delta_histogram, rate_sweep, simulate_cycle, time_to_threshold, Schedule};
use num_complex::Complex64;
use rand::Rng;
use std::sync::OnceLock;
use std::time::Instant;

const SEEDS: [u64; 10] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9];
const GAMMA_DB: f64 = 10.0;

struct SeedRun {
    report_2pi: OptimizeReport,
    report_4pi: OptimizeReport,
}

struct SweepArtifacts {
    runs: Vec<SeedRun>,
    wall_seconds: f64,
}

fn sweep() -> &'static SweepArtifacts {
    static CELL: OnceLock<SweepArtifacts> = OnceLock::new();
    CELL.get_or_init(|| {
        let start = Instant::now();
        let order: Vec<usize> = (0..3).collect();
        let runs = SEEDS
            .iter()
            .map(|&seed| {
                let sc = Scenario::paper_default();
                let art = prepare(&sc, seed).expect("channel assembly");
                let cfg = optimizer_config(&sc);
                let report_2pi = optimize(&art.kernels, &cfg, &order).expect("2pi run");
                let mut sc4 = Scenario::paper_default();
                sc4.lc.omega_max_rad = 4.0 * std::f64::consts::PI;
                let mut cfg4 = optimizer_config(&sc4);
                cfg4.gamma_thr = cfg.gamma_thr;
                let report_4pi = optimize(&art.kernels, &cfg4, &order).expect("4pi run");
                SeedRun { report_2pi, report_4pi }
            })
            .collect();
        SweepArtifacts { runs, wall_seconds: start.elapsed().as_secs_f64() }
    })
}

struct DefaultSeedArtifacts {
    kernels: Vec<SnrKernel>,
    cell: LCCellModel,
    bench: Vec<PhaseConfig>,
    report_123: OptimizeReport,
    report_132: OptimizeReport,
}

fn default_seed() -> &'static DefaultSeedArtifacts {
    static CELL: OnceLock<DefaultSeedArtifacts> = OnceLock::new();
    CELL.get_or_init(|| {
        let sc = Scenario::paper_default();
        let art = prepare(&sc, sc.seed).expect("channel assembly");
        let cfg = optimizer_config(&sc);
        let bench = benchmark_optimize(&art.kernels, &art.cell, art.gamma_thr).expect("benchmark");
        let report_123 = optimize(&art.kernels, &cfg, &[0, 1, 2]).expect("order 1-2-3");
        let report_132 = optimize(&art.kernels, &cfg, &[0, 2, 1]).expect("order 1-3-2");
        DefaultSeedArtifacts {
            kernels: art.kernels,
            cell: art.cell,
            bench,
            report_123,
            report_132,
        }
    })
}

#[test]
fn criterion_01_transition_time_reduction() {
    let art = sweep();
    let ratios: Vec<f64> = art.runs.iter().map(|r| r.report_2pi.final_cost / r.report_2pi.initial_cost).collect();
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;

    // every accepted iterate of every run satisfies the SNR constraint
    let mut snr_ok = true;
    for run in &art.runs {
        for rec in &run.report_2pi.trace {
            for (&snr, &acc) in rec.min_snr_db.iter().zip(&rec.accepted) {
                if acc && snr < GAMMA_DB - 1e-9 {
                    snr_ok = false;
                }
            }
        }
    }
    let pass = mean <= 0.60 && snr_ok && art.wall_seconds < 300.0;
    println!(
        "criterion 1: {} - mean final/initial cost = {:.1}% over {} seeds (need <= 60%), \
         accepted iterates >= {GAMMA_DB} dB: {}, sweep wall time {:.1} s (budget 300 s)",
        if pass { "PASS" } else { "FAIL" },
        mean * 100.0,
        SEEDS.len(),
        snr_ok,
        art.wall_seconds,
    );
    assert!(pass, "ratios: {ratios:?}");
}

#[test]
fn criterion_02_extended_range_helps() {
    let art = sweep();
    let mut wins = 0;
    let mut gaps = Vec::new();
    for run in &art.runs {
        let gap = run.report_4pi.final_cost - run.report_2pi.final_cost;
        gaps.push(gap / run.report_2pi.final_cost);
        if run.report_4pi.final_cost <= run.report_2pi.final_cost {
            wins += 1;
        }
    }
    let pass = wins >= 9;
    println!(
        "criterion 2: {} - 4pi final <= 2pi final on {wins}/{} seeds (need >= 9); relative gaps: {:?}",
        if pass { "PASS" } else { "FAIL" },
        SEEDS.len(),
        gaps.iter().map(|g| format!("{:+.0}%", g * 100.0)).collect::<Vec<_>>(),
    );
    assert!(pass);
}

#[test]
fn criterion_03_cost_trace_monotonicity() {
    let art = sweep();
    let mut violations = 0usize;
    for run in &art.runs {
        for report in [&run.report_2pi, &run.report_4pi] {
            for w in report.trace.windows(2) {
                if w[1].cost > w[0].cost {
                    violations += 1;
                }
            }
        }
    }
    let pass = violations == 0;
    println!(
        "criterion 3: {} - {violations} cost increases across {} accepted-state traces (need 0, exact)",
        if pass { "PASS" } else { "FAIL" },
        2 * SEEDS.len(),
    );
    assert!(pass);
}

#[test]
fn criterion_04_tdma_trace() {
    let art = default_seed();
    let dt = default_trace_dt(&art.cell);
    let mut all_earlier = true;
    let mut detail = String::new();
    for (label, report) in [("1-2-3", &art.report_123), ("1-3-2", &art.report_132)] {
        let schedule = Schedule { order: report.order.clone(), t_s: 57.0e-3 };
        let trace_p = simulate_cycle(&report.configs, &schedule, &art.cell, &art.kernels, dt).unwrap();
        let trace_b = simulate_cycle(&art.bench, &schedule, &art.cell, &art.kernels, dt).unwrap();
        for slot in 0..3 {
            let tp = time_to_threshold(&trace_p, slot, GAMMA_DB);
            let tb = time_to_threshold(&trace_b, slot, GAMMA_DB);
            let earlier = match (tp, tb) {
                (Some(p), Some(b)) => p < b,
                (Some(_), None) => true,
                _ => false,
            };
            all_earlier &= earlier;
            detail.push_str(&format!(
                " [{label} slot {slot}: prop {} bench {}]",
                tp.map_or("never".into(), |t| format!("{:.2} ms", t * 1e3)),
                tb.map_or("never".into(), |t| format!("{:.2} ms", t * 1e3)),
            ));
        }
    }
    let distinct_costs = art.report_123.final_cost != art.report_132.final_cost;
    let pass = all_earlier && distinct_costs;
    println!(
        "criterion 4: {} - proposed crosses {GAMMA_DB} dB earlier in every slot of both orderings: {all_earlier};\
         order costs differ: {distinct_costs} ({:.2} ms vs {:.2} ms);{detail}",
        if pass { "PASS" } else { "FAIL" },
        art.report_123.final_cost * 1e3,
        art.report_132.final_cost * 1e3,
    );
    assert!(pass);
}

#[test]
fn criterion_05_effective_rate() {
    let art = default_seed();
    let order = [0usize, 1, 2];
    let dt = default_trace_dt(&art.cell);
    let proposed = &art.report_123.configs;

    // slowest settled crossing of either design, for the asymptote point
    let long = Schedule { order: order.to_vec(), t_s: 40.0 * art.cell.tau_minus };
    let trace_long = simulate_cycle(proposed, &long, &art.cell, &art.kernels, dt).unwrap();
    let trace_long_b = simulate_cycle(&art.bench, &long, &art.cell, &art.kernels, dt).unwrap();
    let max_tc = (0..3)
        .flat_map(|s| {
            [time_to_threshold(&trace_long, s, GAMMA_DB), time_to_threshold(&trace_long_b, s, GAMMA_DB)]
        })
        .map(|t| t.expect("threshold reached within the settling slot"))
        .fold(0.0f64, f64::max);

    let mut t_s_list = vec![1.0e-3, 2.0e-3, 4.0e-3, 8.0e-3, 16.0e-3, 30.0e-3, 57.0e-3, 120.0e-3, 250.0e-3];
    t_s_list.push(100.0 * max_tc);
    let rows = rate_sweep(proposed, &art.bench, &t_s_list, &art.cell, &art.kernels, &order, GAMMA_DB, dt).unwrap();

    let cap = (1.0 + 10f64.powf(GAMMA_DB / 10.0)).log2();
    let mut zero_ok = true;
    let mut dominance_ok = true;
    for (p, b) in &rows {
        if p.t_s <= p.t_c_mean && p.rate != 0.0 {
            zero_ok = false;
        }
        if b.t_s <= b.t_c_mean && b.rate != 0.0 {
            zero_ok = false;
        }
        if p.rate < b.rate {
            dominance_ok = false;
        }
    }
    // the smallest swept slot sits below both reconfiguration times
    let (p0, b0) = &rows[0];
    zero_ok &= p0.t_s <= p0.t_c_mean && p0.rate == 0.0 && b0.rate == 0.0;
    let (pa, ba) = rows.last().unwrap();
    let asymptote_ok = (pa.rate - cap).abs() <= 0.01 * cap && (ba.rate - cap).abs() <= 0.01 * cap;

    let pass = zero_ok && dominance_ok && asymptote_ok;
    println!(
        "criterion 5: {} - T_c proposed {:.2} ms vs benchmark {:.2} ms; zero-rate below mean T_c: {zero_ok}; \
         proposed >= benchmark at every slot: {dominance_ok}; \
         both within 1% of {cap:.4} b/s/Hz at T_s = 100 x max T_c ({:.1} ms): {asymptote_ok} \
         (rates {:.4}/{:.4}); sweep: {:?}",
        if pass { "PASS" } else { "FAIL" },
        rows[0].0.t_c_mean * 1e3,
        rows[0].1.t_c_mean * 1e3,
        100.0 * max_tc * 1e3,
        pa.rate,
        ba.rate,
        rows.iter().map(|(p, b)| format!("Ts {:.0}ms: {:.3}/{:.3}", p.t_s * 1e3, p.rate, b.rate)).collect::<Vec<_>>(),
    );
    assert!(pass);
}

#[test]
fn criterion_06_histogram_properties() {
    // (a) Monte Carlo oracle: the difference of two independent uniform
    // phase vectors follows the triangular density on (-2pi, 2pi)
    let two_pi = 2.0 * std::f64::consts::PI;
    let n = 100_000;
    let mut rng = substream(0xC6, "uniform-configs", 0);
    let a = PhaseConfig((0..n).map(|_| rng.gen::<f64>() * two_pi).collect());
    let b = PhaseConfig((0..n).map(|_| rng.gen::<f64>() * two_pi).collect());
    let bins = 16;
    let h = delta_histogram(&[a, b], bins, two_pi).unwrap();
    let total: u64 = h.counts.iter().sum();
    assert_eq!(total as usize, 2 * n);
    let width = 2.0 * two_pi / bins as f64;
    let peak = 1.0 / two_pi;
    // bin-integrated triangular probability, exact
    let tri_cdf = |x: f64| -> f64 {
        let x = x.clamp(-two_pi, two_pi);
        if x <= 0.0 {
            let u = x + two_pi;
            u * u / (2.0 * two_pi * two_pi)
        } else {
            1.0 - (two_pi - x) * (two_pi - x) / (2.0 * two_pi * two_pi)
        }
    };
    let mut sup = 0.0f64;
    for (i, &c) in h.counts.iter().enumerate() {
        let lo = -two_pi + i as f64 * width;
        let p_bin = tri_cdf(lo + width) - tri_cdf(lo);
        let emp_density = c as f64 / (total as f64 * width);
        let theo_density = p_bin / width;
        sup = sup.max((emp_density - theo_density).abs());
    }
    let mc_ok = sup <= 0.03 * peak;

    // (b) the optimized design concentrates strictly more mass near zero
    let art = default_seed();
    let omega_max = art.cell.omega_max;
    let h_bench = delta_histogram(&art.bench, 64, omega_max).unwrap();
    let h_prop = delta_histogram(&art.report_123.configs, 64, omega_max).unwrap();
    let concentration_ok = h_prop.mass_within_half_pi > h_bench.mass_within_half_pi;

    let pass = mc_ok && concentration_ok;
    println!(
        "criterion 6: {} - triangular sup-norm gap {:.4} of peak (need <= 0.03): {mc_ok}; \
         mass within pi/2: proposed {:.3} > benchmark {:.3}: {concentration_ok}",
        if pass { "PASS" } else { "FAIL" },
        sup / peak,
        h_prop.mass_within_half_pi,
        h_bench.mass_within_half_pi,
    );
    assert!(pass);
}

#[test]
fn criterion_07_pde_oracle() {
    let p = MaterialParams::default();

    // decay vs the separated-variables solution, nz = 201
    let decay = solve_director_pde(
        &p,
        &FieldProfile::Constant(0.0),
        &SolveOptions { nz: 201, horizon: 5.0 * p.tau_mol_minus(), snapshots: 201, exact_source: false },
    )
    .unwrap();
    let mut sup = 0.0f64;
    for (ti, row) in decay.phi.iter().enumerate() {
        for (zi, &v) in row.iter().enumerate() {
            sup = sup.max((v - analytic_decay(decay.z_grid[zi], decay.t_grid[ti], &p)).abs());
        }
    }
    let decay_ok = sup <= 1e-3;

    // rise to pi/2 at the midplane by 30 tau_r (exact trigonometric source;
    // the cubic source saturates at its own zero, sqrt(2), by construction)
    let rise = solve_director_pde(
        &p,
        &FieldProfile::Constant(p.e_max),
        &SolveOptions { nz: 201, horizon: 30.0 * p.tau_r(), snapshots: 11, exact_source: true },
    )
    .unwrap();
    let mid = rise.phi.last().unwrap()[100];
    let rise_gap = (std::f64::consts::FRAC_PI_2 - mid).abs();
    let rise_ok = rise_gap <= 0.01;

    // integrated error budget of the single-exponential rise model
    let tau = p.tau_mol_plus();
    let steps = 400_000;
    let t_end = 60.0 * tau;
    let dt = t_end / steps as f64;
    let mut gap = 0.0;
    for i in 0..=steps {
        let t = i as f64 * dt;
        let pair = analytic_rise(p.d / 2.0, t, &p);
        let w = if i == 0 || i == steps { 0.5 } else { 1.0 };
        gap += w * (pair.exact - pair.approx).abs() * dt;
    }
    let budget = tau * rise_error_budget(&p);
    let budget_ok = gap <= budget;

    let pass = decay_ok && rise_ok && budget_ok;
    println!(
        "criterion 7: {} - decay sup-norm {sup:.2e} (<= 1e-3): {decay_ok}; \
         midplane pi/2 gap {rise_gap:.2e} at 30 tau_r (<= 0.01): {rise_ok}; \
         integrated rise error {gap:.3e} <= budget {budget:.3e}: {budget_ok}",
        if pass { "PASS" } else { "FAIL" },
    );
    assert!(pass);
}

#[test]
fn criterion_08_single_exponential_adequacy() {
    let p = MaterialParams::default();
    let fit_of = |drive: FieldProfile, horizon: f64| {
        let field = solve_director_pde(
            &p,
            &drive,
            &SolveOptions { nz: 201, horizon, snapshots: 801, exact_source: false },
        )
        .unwrap();
        let kappa = kappa_of_field(&field, &p);
        let history = omega_of_time(&field.t_grid, &kappa, &p);
        fit_single_exponential(&history.t, &history.omega).unwrap()
    };
    let rise = fit_of(FieldProfile::Constant(p.e_max), 30.0 * p.tau_r());
    let decay = fit_of(FieldProfile::Constant(0.0), 5.0 * p.tau_mol_minus());
    let fits_ok = rise.rmse <= 0.05 && decay.rmse <= 0.05;

    // truncated series vs the direct effective-length pipeline on the
    // exponentially relaxing field
    let nz = 201;
    let z: Vec<f64> = (0..nz).map(|i| i as f64 * p.d / (nz - 1) as f64).collect();
    let tau = p.tau_mol_minus();
    let t: Vec<f64> = (0..=200).map(|i| i as f64 * 5.0 * tau / 200.0).collect();
    let phi: Vec<Vec<f64>> = t
        .iter()
        .map(|&ti| z.iter().map(|&zz| analytic_decay(zz, ti, &p)).collect())
        .collect();
    let field = DirectorField { z_grid: z.clone(), t_grid: t.clone(), phi };
    let direct = omega_of_time(&t, &kappa_of_field(&field, &p), &p);
    let phi0: Vec<f64> = z.iter().map(|&zz| analytic_decay(zz, 0.0, &p)).collect();
    let series = prop1_series(&p, &phi0, &vec![0.0; nz], &z, tau, 12).unwrap();
    let scale = direct.omega.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
    let mut worst = 0.0f64;
    for (i, &ti) in t.iter().enumerate() {
        worst = worst.max((series.omega_at(ti) - direct.omega[i]).abs());
    }
    let series_ok = worst / scale <= 0.01;

    let pass = fits_ok && series_ok;
    println!(
        "criterion 8: {} - fit rmse rise {:.2}% decay {:.2}% (<= 5%): {fits_ok}; \
         P=12 series vs direct pipeline gap {:.3}% (<= 1%): {series_ok}",
        if pass { "PASS" } else { "FAIL" },
        rise.rmse * 100.0,
        decay.rmse * 100.0,
        worst / scale * 100.0,
    );
    assert!(pass);
}

#[test]
fn criterion_09_transition_time_identity() {
    let cell = LCCellModel::new(9.0e-3, 29.0e-3, 0.0, 2.0 * std::f64::consts::PI).unwrap();
    let mut rng = substream(0xC9, "identity-sweep", 0);
    let span = cell.range();
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let w0 = cell.omega_min + rng.gen::<f64>() * span * 0.999_999;
        let wd = cell.omega_min + (rng.gen::<f64>() * 0.999_99 + 1e-6) * span;
        let t = transition_time(w0, wd, &cell).unwrap();
        let tr = drive_trajectory(w0, wd, &cell).unwrap();
        // evaluate the flight expression itself at the crossing time
        let asym = if wd > w0 { cell.omega_max } else if wd < w0 { cell.omega_min } else { wd };
        let tau = if wd > w0 { cell.tau_plus } else { cell.tau_minus };
        let flight = asym + (w0 - asym) * (-t / tau).exp();
        worst = worst.max((flight - wd).abs());
        assert_eq!(tr.t_reach, t);
    }
    let pass = worst <= 1e-9;
    println!(
        "criterion 9: {} - worst |flight(t_reach) - target| = {worst:.2e} over 10^4 cases (<= 1e-9)",
        if pass { "PASS" } else { "FAIL" },
    );
    assert!(pass);
}

#[test]
fn criterion_10a_surrogate_matches_exact_lagrangian() {
    // small singleton-area instances: the line-search minimizer of the
    // cosine surrogate against the brute-force minimizer of the exact
    // per-element Lagrangian restriction (other phases near focus)
    let cell = LCCellModel::new(9.0e-3, 29.0e-3, 0.0, 2.0 * std::f64::consts::PI).unwrap();
    let mut rng = substream(0x10A, "surrogate-instances", 0);
    let l_points = 256;
    let step = cell.range() / (l_points + 1) as f64;
    let cases = 1000;
    let mut hits = 0;
    for _ in 0..cases {
        let n = 4 + (rng.gen::<f64>() * 13.0) as usize; // 4..=16
        let p = (rng.gen::<f64>() * n as f64) as usize;
        // random generating vector; phases of the others sit near focus
        let gains: Vec<Complex64> = (0..n)
            .map(|_| Complex64::from_polar(0.5 + rng.gen::<f64>(), rng.gen::<f64>() * 6.28))
            .collect();
        let omega: Vec<f64> = gains
            .iter()
            .map(|g| (-g.arg()).rem_euclid(2.0 * std::f64::consts::PI) + 0.04 * (rng.gen::<f64>() - 0.5))
            .collect();
        let s_other: Complex64 = (0..n)
            .filter(|&m| m != p)
            .map(|m| gains[m] * Complex64::from_polar(1.0, omega[m]))
            .sum();
        let lambda_exact = 10f64.powf(rng.gen::<f64>() * 3.0 - 3.0);
        let xi_cur = rng.gen::<bool>() as u8 as f64;
        let xi_next = rng.gen::<bool>() as u8 as f64;
        let prev = 0.02 + rng.gen::<f64>() * 6.2;
        let next = 0.02 + rng.gen::<f64>() * 6.2;

        // merged multiplier and focusing anchor of the surrogate
        let ctx = CoordinateCtx {
            omega_prev: prev,
            omega_next: next,
            lambda: lambda_exact * 2.0 * gains[p].norm() * s_other.norm(),
            xi_cur,
            xi_next,
            phi: (-gains[p].arg()).rem_euclid(2.0 * std::f64::consts::PI),
            cell,
        };
        let w_surrogate = line_search_element(&ctx, l_points);

        // exact restriction: xi-weighted times minus lambda * SNR(omega_p)
        let mut best = (f64::INFINITY, 0.0);
        for i in 0..l_points {
            let w = cell.omega_min + (i + 1) as f64 * step;
            let snr = (s_other + gains[p] * Complex64::from_polar(1.0, w)).norm_sqr();
            let c = coordinate_cost(w, &CoordinateCtx { lambda: 0.0, ..ctx }) - lambda_exact * snr;
            if c < best.0 {
                best = (c, w);
            }
        }
        if (w_surrogate - best.1).abs() <= step * 1.000001 {
            hits += 1;
        }
    }
    let rate = hits as f64 / cases as f64;
    let pass = rate >= 0.99;
    println!(
        "criterion 10a: {} - surrogate argmin within one grid step of the exact restriction in {:.1}% \
         of {cases} cases (need >= 99%)",
        if pass { "PASS" } else { "FAIL" },
        rate * 100.0,
    );
    assert!(pass);
}

#[test]
fn criterion_10b_leave_one_out_residual() {
    // the premise behind the cosine surrogate: the leave-one-element-out sum
    // at each element's assigned point should have (near-)zero argument
    let art = default_seed();
    let mut worst = 0.0f64;
    let mut means = Vec::new();
    for (kernel, config) in art.kernels.iter().zip(&art.bench) {
        let (max_theta, mean_theta) = assignment_residual_stats(kernel, config);
        worst = worst.max(max_theta);
        means.push(mean_theta);
    }
    let pass = worst <= 0.05;
    println!(
        "criterion 10b: {} - max |theta| = {worst:.3} rad over users (need <= 0.05); mean |theta| per user: {:?}",
        if pass { "PASS" } else { "FAIL" },
        means.iter().map(|m| format!("{m:.3}")).collect::<Vec<_>>(),
    );
    assert!(
        pass,
        "the pointwise leave-one-out argument does not vanish for area-mapped configurations; \
         measured max |theta| = {worst:.3} rad"
    );
}

#[test]
fn criterion_11_linear_complexity() {
    // identical scenarios except the RIS element count; the threshold is
    // relaxed so both sizes stay feasible
    let run_at = |rows: usize, cols: usize| -> f64 {
        let mut sc = Scenario::paper_default();
        sc.geometry.ris.rows = rows;
        sc.geometry.ris.cols = cols;
        sc.rf.gamma_thr_db = -20.0;
        let art = prepare(&sc, 0).unwrap();
        let cfg = optimizer_config(&sc);
        let mut best = f64::INFINITY;
        for _ in 0..3 {
            let start = Instant::now();
            let report = optimize(&art.kernels, &cfg, &[0, 1, 2]).unwrap();
            best = best.min(start.elapsed().as_secs_f64());
            assert!(report.final_cost.is_finite());
        }
        best
    };
    let t_512 = run_at(32, 16);
    let t_1024 = run_at(32, 32);
    let ratio = t_1024 / t_512;
    let pass = ratio <= 2.5;
    println!(
        "criterion 11: {} - wall time N=1024 / N=512 = {:.0} ms / {:.0} ms = {ratio:.2} (need <= 2.5)",
        if pass { "PASS" } else { "FAIL" },
        t_1024 * 1e3,
        t_512 * 1e3,
    );
    assert!(pass);
}
