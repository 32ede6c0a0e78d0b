//! 1-D director dynamics of a nematic LC cell and the analytic machinery
//! around it.
//!
//! The tilt angle `phi(z, t)` of the director against the cell plane obeys a
//! reaction-diffusion equation
//!
//! ```text
//! gamma1 d(phi)/dt = K d2(phi)/dz2 + eps0*deps * E^2 * Phi(phi)
//! ```
//!
//! with `Phi(phi) = phi (1 - phi^2 / 2)` (cubic approximation of
//! `sin(phi) cos(phi)`; the exact source is available behind a flag), hard
//! anchoring `phi = 0` at both plates, and a sine-mode initial profile. The
//! solver is explicit in time with second-order central differences in space
//! and serves as the numerical oracle for the closed-form decay/rise
//! solutions and, through the effective-length integral, for the
//! single-exponential cell response model used by the optimizer.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Vacuum permittivity, F/m.
pub const EPS0: f64 = 8.854_187_812_8e-12;

/// Material and cell parameters of the director model.
///
/// Only the ratio of the molecular semi-axes enters the phase-shift
/// integrals, but both are kept in meters for clarity.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MaterialParams {
    /// Rotational viscosity, Pa s.
    pub gamma1: f64,
    /// Mean Frank elastic constant (splay = bend), N.
    pub k_bar: f64,
    /// eps0 * delta_eps, F/m.
    pub eps0_delta_eps: f64,
    /// Cell thickness, m.
    pub d: f64,
    /// Drive field amplitude, V/m.
    pub e_max: f64,
    /// Initial tilt amplitude, in (0, 1).
    pub a1: f64,
    /// Molecular semi-major axis, m.
    pub a_axis: f64,
    /// Molecular semi-minor axis, m.
    pub b_axis: f64,
    /// Phase-shifter length, m.
    pub ell_lc: f64,
    /// Wavenumber in the fully aligned LC, rad/m.
    pub kappa_lc: f64,
    /// Wavenumber in vacuum, rad/m.
    pub kappa0: f64,
    /// Tuning factor for the rise time constant (>= 1 in the model; 1 keeps
    /// the bare reaction rate).
    pub alpha_tune: f64,
}

impl Default for MaterialParams {
    fn default() -> Self {
        let gamma1 = 0.1;
        let k_bar = 10.0e-12;
        let eps0_delta_eps = 0.8 * EPS0;
        let d = 4.6e-6;
        // field strength chosen so the smallness parameter e comes out 0.02
        let smallness = 0.02;
        let e_max = (std::f64::consts::PI.powi(2) * k_bar / (smallness * d * d * eps0_delta_eps)).sqrt();
        let freq = 28.0e9;
        let kappa0 = 2.0 * std::f64::consts::PI * freq / crate::C0;
        let kappa_lc = kappa0 * 3.3f64.sqrt();
        let a_axis = 3.0e-9;
        let b_axis = 1.0e-9;
        let kappa_perp = (b_axis / a_axis) * kappa_lc + (1.0 - b_axis / a_axis) * kappa0;
        // default length realizes a full 2 pi differential phase range
        let ell_lc = 2.0 * std::f64::consts::PI / (kappa_lc - kappa_perp);
        MaterialParams {
            gamma1,
            k_bar,
            eps0_delta_eps,
            d,
            e_max,
            a1: 0.5,
            a_axis,
            b_axis,
            ell_lc,
            kappa_lc,
            kappa0,
            alpha_tune: 1.0,
        }
    }
}

impl MaterialParams {
    pub fn validate(&self) -> Result<()> {
        let pos = [
            ("gamma1", self.gamma1),
            ("k_bar", self.k_bar),
            ("eps0_delta_eps", self.eps0_delta_eps),
            ("d", self.d),
            ("e_max", self.e_max),
            ("a_axis", self.a_axis),
            ("b_axis", self.b_axis),
            ("ell_lc", self.ell_lc),
            ("kappa_lc", self.kappa_lc),
            ("kappa0", self.kappa0),
            ("alpha_tune", self.alpha_tune),
        ];
        for (name, v) in pos {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Config { path: format!("pde.{name}"), msg: "must be positive".into() });
            }
        }
        if !(self.a1 > 0.0 && self.a1 < 1.0) {
            return Err(Error::Config { path: "pde.a1".into(), msg: "must lie in (0, 1)".into() });
        }
        if !(self.b_axis < self.a_axis) {
            return Err(Error::Config { path: "pde.b_axis".into(), msg: "must be below a_axis".into() });
        }
        if self.smallness() >= 0.1 {
            return Err(Error::Config {
                path: "pde.e_max".into(),
                msg: format!("smallness parameter e = {:.3} must stay below 0.1", self.smallness()),
            });
        }
        Ok(())
    }

    /// Smallness parameter `e = pi^2 K / (d^2 eps0*deps E_max^2)`.
    pub fn smallness(&self) -> f64 {
        std::f64::consts::PI.powi(2) * self.k_bar / (self.d * self.d * self.eps0_delta_eps * self.e_max * self.e_max)
    }

    /// Elastic relaxation time constant `gamma1 / K * (d / pi)^2`.
    pub fn tau_mol_minus(&self) -> f64 {
        self.gamma1 / self.k_bar * (self.d / std::f64::consts::PI).powi(2)
    }

    /// Field-driven rise time constant
    /// `gamma1 / (2 |eps0*deps E_max^2 - pi^2 K / d^2|)`.
    pub fn tau_r(&self) -> f64 {
        let drive = self.eps0_delta_eps * self.e_max * self.e_max;
        let elastic = std::f64::consts::PI.powi(2) / (self.d * self.d) * self.k_bar;
        self.gamma1 / (2.0 * (drive - elastic).abs())
    }

    /// Single-exponential rise constant `alpha_tune * tau_r`.
    pub fn tau_mol_plus(&self) -> f64 {
        self.alpha_tune * self.tau_r()
    }

    /// Effective wavenumber of the fully relaxed cell.
    pub fn kappa_perp(&self) -> f64 {
        let r = self.b_axis / self.a_axis;
        r * self.kappa_lc + (1.0 - r) * self.kappa0
    }

    /// Largest differential phase the cell can produce.
    pub fn delta_omega_max(&self) -> f64 {
        self.ell_lc * (self.kappa_lc - self.kappa_perp())
    }
}

/// Piecewise-constant drive field E(t), V/m.
#[derive(Debug, Clone)]
pub enum FieldProfile {
    Constant(f64),
    /// `(t_start, value)` segments, sorted by `t_start`, first at t = 0.
    Steps(Vec<(f64, f64)>),
}

impl FieldProfile {
    pub fn value_at(&self, t: f64) -> f64 {
        match self {
            FieldProfile::Constant(v) => *v,
            FieldProfile::Steps(steps) => {
                let mut v = steps.first().map(|s| s.1).unwrap_or(0.0);
                for &(t0, e) in steps {
                    if t0 <= t {
                        v = e;
                    } else {
                        break;
                    }
                }
                v
            }
        }
    }
}

/// Solver controls.
#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Spatial points including both plates; at least 51.
    pub nz: usize,
    /// Simulated duration, seconds.
    pub horizon: f64,
    /// Number of stored snapshots (the initial state counts as one).
    pub snapshots: usize,
    /// Use the exact `sin(phi) cos(phi)` source instead of the cubic.
    pub exact_source: bool,
}

impl SolveOptions {
    pub fn new(nz: usize, horizon: f64) -> Self {
        SolveOptions { nz, horizon, snapshots: 801, exact_source: false }
    }
}

/// Discretized director field `phi(z, t)`, snapshots by rows.
#[derive(Debug, Clone)]
pub struct DirectorField {
    pub z_grid: Vec<f64>,
    pub t_grid: Vec<f64>,
    /// `phi[ti][zi]`, radians, within `[0, pi/2]`.
    pub phi: Vec<Vec<f64>>,
}

const MAX_STEPS: usize = 400_000_000;

/// Explicit finite-difference solve of the director equation.
///
/// Time step honors the diffusion stability bound with a 0.4 safety factor:
/// `dt = 0.4 gamma1 dz^2 / K`. Boundary rows are pinned to zero and the field
/// is clamped to `[0, pi/2]` after every step.
pub fn solve_director_pde(p: &MaterialParams, drive: &FieldProfile, opts: &SolveOptions) -> Result<DirectorField> {
    p.validate()?;
    if opts.nz < 51 {
        return Err(Error::invalid(format!("nz must be at least 51, got {}", opts.nz)));
    }
    if !(opts.horizon > 0.0) {
        return Err(Error::invalid("horizon must be positive"));
    }
    if opts.snapshots < 2 {
        return Err(Error::invalid("need at least two snapshots"));
    }
    let nz = opts.nz;
    let dz = p.d / (nz - 1) as f64;
    let dt = 0.4 * p.gamma1 * dz * dz / p.k_bar;
    let steps = (opts.horizon / dt).ceil() as usize;
    if steps > MAX_STEPS {
        return Err(Error::ResourceLimit(format!(
            "stability bound needs {steps} steps (> {MAX_STEPS}); coarsen the grid or shorten the horizon"
        )));
    }
    let every = (steps / (opts.snapshots - 1)).max(1);

    let z_grid: Vec<f64> = (0..nz).map(|i| i as f64 * dz).collect();
    let mut phi: Vec<f64> = z_grid
        .iter()
        .map(|&z| p.a1 * (std::f64::consts::PI * z / p.d).sin())
        .collect();
    phi[0] = 0.0;
    phi[nz - 1] = 0.0;

    let diffuse = p.k_bar * dt / (p.gamma1 * dz * dz);
    let react = p.eps0_delta_eps * dt / p.gamma1;

    let mut t_grid = vec![0.0];
    let mut snaps = vec![phi.clone()];
    let mut next = vec![0.0; nz];
    let half_pi = std::f64::consts::FRAC_PI_2;
    for n in 1..=steps {
        let t_prev = (n - 1) as f64 * dt;
        let e = drive.value_at(t_prev);
        let e2 = e * e;
        next[0] = 0.0;
        next[nz - 1] = 0.0;
        for i in 1..nz - 1 {
            let lap = phi[i + 1] - 2.0 * phi[i] + phi[i - 1];
            let src = if opts.exact_source {
                phi[i].sin() * phi[i].cos()
            } else {
                phi[i] * (1.0 - phi[i] * phi[i] / 2.0)
            };
            let v = phi[i] + diffuse * lap + react * e2 * src;
            next[i] = v.clamp(0.0, half_pi);
        }
        std::mem::swap(&mut phi, &mut next);
        if n % every == 0 || n == steps {
            t_grid.push(n as f64 * dt);
            snaps.push(phi.clone());
        }
    }
    Ok(DirectorField { z_grid, t_grid, phi: snaps })
}

/// Closed-form relaxation from the sine-mode initial profile at `E = 0`:
/// `A1 sin(pi z / d) exp(-t / tau_mol_minus)`.
pub fn analytic_decay(z: f64, t: f64, p: &MaterialParams) -> f64 {
    p.a1 * (std::f64::consts::PI * z / p.d).sin() * (-t / p.tau_mol_minus()).exp()
}

/// Exact and single-exponential closed forms of the rise under `E = E_max`.
#[derive(Debug, Clone, Copy)]
pub struct RisePair {
    pub exact: f64,
    pub approx: f64,
}

/// Closed-form rise at `E = E_max`: the exact logistic-type solution and its
/// single-exponential approximation with `tau_mol_plus`.
pub fn analytic_rise(z: f64, t: f64, p: &MaterialParams) -> RisePair {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mode = (std::f64::consts::PI * z / p.d).sin();
    let q = std::f64::consts::PI.powi(2) / (4.0 * p.a1 * p.a1) - 1.0;
    let exact = half_pi * (1.0 / (1.0 + q * (-t / p.tau_r()).exp())).sqrt() * mode;
    let approx = (half_pi - (half_pi - p.a1) * (-t / p.tau_mol_plus()).exp()) * mode;
    RisePair { exact, approx }
}

/// Integrated error budget of the single-exponential rise model at the cell
/// midplane with `alpha_tune = 1`:
/// `beta = ln((x+1)/(x-1)) + ln((x^2-1)/4) + pi/2 - A1`, `x = pi / (2 A1)`.
pub fn rise_error_budget(p: &MaterialParams) -> f64 {
    let x = std::f64::consts::PI / (2.0 * p.a1);
    ((x + 1.0) / (x - 1.0)).ln() + ((x * x - 1.0) / 4.0).ln() + std::f64::consts::FRAC_PI_2 - p.a1
}

/// Projected length of the rotated molecular ellipse seen by the RF field:
/// `b sqrt(1 / (1 + (b^2/a^2 - 1) sin^2 phi))`.
pub fn effective_length(phi: f64, a: f64, b: f64) -> f64 {
    let s = phi.sin();
    b * (1.0 / (1.0 + (b * b / (a * a) - 1.0) * s * s)).sqrt()
}

fn trapezoid(x: &[f64], y: &[f64]) -> f64 {
    x.windows(2)
        .zip(y.windows(2))
        .map(|(xw, yw)| 0.5 * (yw[0] + yw[1]) * (xw[1] - xw[0]))
        .sum()
}

/// Effective wavenumber time series of a director field:
/// `kappa(t) = (1/d) int [ (l/a) kappa_lc + ((a-l)/a) kappa0 ] dz`.
pub fn kappa_of_field(field: &DirectorField, p: &MaterialParams) -> Vec<f64> {
    let a = p.a_axis;
    let b = p.b_axis;
    field
        .phi
        .iter()
        .map(|row| {
            let integrand: Vec<f64> = row
                .iter()
                .map(|&phi| {
                    let l = effective_length(phi, a, b);
                    (l / a) * p.kappa_lc + ((a - l) / a) * p.kappa0
                })
                .collect();
            trapezoid(&field.z_grid, &integrand) / p.d
        })
        .collect()
}

/// Phase-shift history derived from a wavenumber series.
#[derive(Debug, Clone)]
pub struct PhaseHistory {
    pub t: Vec<f64>,
    pub omega: Vec<f64>,
    pub kappa: Vec<f64>,
}

/// `omega(t) = ell_lc (kappa(t) - kappa_perp)`, with `kappa_perp` the fully
/// relaxed reference.
pub fn omega_of_time(t: &[f64], kappa: &[f64], p: &MaterialParams) -> PhaseHistory {
    assert_eq!(t.len(), kappa.len(), "time/kappa length mismatch");
    let kp = p.kappa_perp();
    PhaseHistory {
        t: t.to_vec(),
        omega: kappa.iter().map(|&k| p.ell_lc * (k - kp)).collect(),
        kappa: kappa.to_vec(),
    }
}

/// Result of a single-exponential fit `omega(t) ~ wd + (w0 - wd) e^{-t/tau}`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExpFit {
    pub omega_d: f64,
    pub omega_0: f64,
    pub tau_c: f64,
    /// Root-mean-square residual normalized by the fitted swing `|wd - w0|`.
    pub rmse: f64,
    /// Set when the data swing is below 1e-9 rad; `rmse` is reported as 0.
    pub degenerate: bool,
}

fn exp_fit_residual(t: &[f64], w: &[f64], tau: f64) -> (f64, f64, f64) {
    // linear least squares for (c, amp) in  c + amp * e^{-t/tau}
    let n = t.len() as f64;
    let mut se = 0.0;
    let mut see = 0.0;
    let mut sw = 0.0;
    let mut sew = 0.0;
    for (&ti, &wi) in t.iter().zip(w) {
        let e = (-ti / tau).exp();
        se += e;
        see += e * e;
        sw += wi;
        sew += e * wi;
    }
    let det = n * see - se * se;
    let (c, amp) = if det.abs() < 1e-300 {
        (sw / n, 0.0)
    } else {
        ((sw * see - se * sew) / det, (n * sew - se * sw) / det)
    };
    let mut ss = 0.0;
    for (&ti, &wi) in t.iter().zip(w) {
        let r = c + amp * (-ti / tau).exp() - wi;
        ss += r * r;
    }
    ((ss / n).sqrt(), c, amp)
}

/// Fit a single exponential by variable projection: the offset and amplitude
/// are solved linearly for each candidate `tau`, and `tau` itself is located
/// by a coarse log-spaced scan refined with golden-section search.
pub fn fit_single_exponential(t: &[f64], omega: &[f64]) -> Result<ExpFit> {
    if t.len() != omega.len() {
        return Err(Error::invalid("time and phase series must have equal length"));
    }
    if t.len() < 8 {
        return Err(Error::invalid(format!("need at least 8 samples, got {}", t.len())));
    }
    if t.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::invalid("time series must be strictly increasing"));
    }
    let (lo, hi) = omega.iter().fold((f64::MAX, f64::MIN), |(lo, hi), &w| (lo.min(w), hi.max(w)));
    if hi - lo < 1e-9 {
        let mean = omega.iter().sum::<f64>() / omega.len() as f64;
        return Ok(ExpFit { omega_d: mean, omega_0: mean, tau_c: 0.0, rmse: 0.0, degenerate: true });
    }

    let span = t[t.len() - 1] - t[0];
    let tau_lo = (span * 1e-4).max(1e-300);
    let tau_hi = span * 20.0;
    let coarse = 160;
    let mut best_i = 0;
    let mut best_r = f64::MAX;
    let taus: Vec<f64> = (0..coarse)
        .map(|i| tau_lo * (tau_hi / tau_lo).powf(i as f64 / (coarse - 1) as f64))
        .collect();
    for (i, &tau) in taus.iter().enumerate() {
        let (r, _, _) = exp_fit_residual(t, omega, tau);
        if r < best_r {
            best_r = r;
            best_i = i;
        }
    }
    let mut a = taus[best_i.saturating_sub(1)].ln();
    let mut b = taus[(best_i + 1).min(coarse - 1)].ln();
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..100 {
        let m1 = b - inv_phi * (b - a);
        let m2 = a + inv_phi * (b - a);
        let r1 = exp_fit_residual(t, omega, m1.exp()).0;
        let r2 = exp_fit_residual(t, omega, m2.exp()).0;
        if r1 < r2 {
            b = m2;
        } else {
            a = m1;
        }
    }
    let tau = ((a + b) / 2.0).exp();
    let (rms, c, amp) = exp_fit_residual(t, omega, tau);
    let omega_d = c;
    let omega_0 = c + amp;
    Ok(ExpFit {
        omega_d,
        omega_0,
        tau_c: tau,
        rmse: rms / (omega_d - omega_0).abs(),
        degenerate: false,
    })
}

/// Taylor coefficients of `effective_length(phi0 + x, a, b)` in `x`, computed
/// by power-series arithmetic (no symbolic differentiation): the sine series
/// is squared, shifted, and raised to the -1/2 power through the standard
/// binomial recurrence.
pub fn effective_length_taylor(phi0: f64, a: f64, b: f64, order: usize) -> Vec<f64> {
    let n = order + 1;
    // sin(phi0 + x) as a series in x
    let mut sin_series = vec![0.0; n];
    let (s0, c0) = phi0.sin_cos();
    let mut fact = 1.0;
    for (p, coeff) in sin_series.iter_mut().enumerate() {
        if p > 0 {
            fact *= p as f64;
        }
        let base = match p % 4 {
            0 => s0,
            1 => c0,
            2 => -s0,
            _ => -c0,
        };
        *coeff = base / fact;
    }
    // u = sin^2
    let mut u = vec![0.0; n];
    for i in 0..n {
        for j in 0..=i {
            u[i] += sin_series[j] * sin_series[i - j];
        }
    }
    // v = 1 + (b^2/a^2 - 1) u
    let r = b * b / (a * a) - 1.0;
    let mut v: Vec<f64> = u.iter().map(|&x| r * x).collect();
    v[0] += 1.0;
    // w = v^alpha with alpha = -1/2:  n v0 w_n = sum_k ((alpha+1) k - n) v_k w_{n-k}
    let alpha = -0.5;
    let mut w = vec![0.0; n];
    w[0] = v[0].powf(alpha);
    for m in 1..n {
        let mut acc = 0.0;
        for k in 1..=m {
            acc += ((alpha + 1.0) * k as f64 - m as f64) * v[k] * w[m - k];
        }
        w[m] = acc / (m as f64 * v[0]);
    }
    w.iter().map(|&x| b * x).collect()
}

/// Truncated multi-exponential expansion of the phase response.
#[derive(Debug, Clone)]
pub struct Prop1Series {
    /// `D_p` for `p = 0..=p_max`.
    pub coefficients: Vec<f64>,
    pub tau_mol: f64,
    pub ell_lc: f64,
}

impl Prop1Series {
    /// `omega(t) = ell_lc * sum_p D_p exp(-p t / tau_mol)`.
    pub fn omega_at(&self, t: f64) -> f64 {
        let base = (-t / self.tau_mol).exp();
        let mut pow = 1.0;
        let mut acc = 0.0;
        for &d in &self.coefficients {
            acc += d * pow;
            pow *= base;
        }
        self.ell_lc * acc
    }
}

/// Expand the phase response of a field that relaxes exponentially between
/// the profiles `phi0(z)` and `phi_inf(z)` with constant `tau_mol` into the
/// series `omega(t) = ell_lc sum_p D_p e^{-p t / tau_mol}` (truncated at
/// `p_max`). The per-depth Taylor coefficients of the effective length are
/// taken around `phi_inf(z)` and the z-integrals use the trapezoid rule on
/// the given grid.
pub fn prop1_series(
    p: &MaterialParams,
    phi0: &[f64],
    phi_inf: &[f64],
    z_grid: &[f64],
    tau_mol: f64,
    p_max: usize,
) -> Result<Prop1Series> {
    if phi0.len() != z_grid.len() || phi_inf.len() != z_grid.len() {
        return Err(Error::invalid("profile/grid length mismatch"));
    }
    if p_max < 1 {
        return Err(Error::invalid("series order must be at least 1"));
    }
    let factor = (p.kappa_lc - p.kappa0) / (p.a_axis * p.d);
    let nz = z_grid.len();
    // integrand rows: per order p, values over z
    let mut rows = vec![vec![0.0; nz]; p_max + 1];
    for zi in 0..nz {
        let taylor = effective_length_taylor(phi_inf[zi], p.a_axis, p.b_axis, p_max);
        let delta = phi0[zi] - phi_inf[zi];
        let mut dp = 1.0;
        for (ord, row) in rows.iter_mut().enumerate() {
            let l_coeff = taylor[ord];
            row[zi] = if ord == 0 { l_coeff - p.b_axis } else { l_coeff * dp };
            if ord < p_max {
                dp *= delta;
            }
        }
        // rows[ord][zi] currently holds l-series terms; delta powers applied above
    }
    let coefficients: Vec<f64> = rows.iter().map(|row| factor * trapezoid(z_grid, row)).collect();
    Ok(Prop1Series { coefficients, tau_mol, ell_lc: p.ell_lc })
}
