//! Transition-aware multi-user phase-shift design.
//!
//! The design problem: pick one RIS phase configuration per user so that the
//! worst-case SNR over each user's coverage area stays above a threshold
//! while the slowest per-element LC transition between consecutive
//! configurations is as short as possible. The solver is a per-element
//! Lagrangian coordinate descent: each element carries a cosine surrogate of
//! its SNR contribution (anchored at the phase that focuses the element on
//! its assigned area point) plus the two transition-time terms coupling it to
//! the previous and next user's configuration, and is updated by a line
//! search over the realizable phase range. Whole per-user columns are
//! accepted only when the minimum-area SNR (with margin) holds and the total
//! cost did not increase, so the recorded cost trace is non-increasing by
//! construction.

use crate::error::{Error, Result};
use crate::geometry::{steering_vector, ArrayGeometry, CMatrix, Position};
use crate::lc::{LCCellModel, PhaseConfig};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

/// Rectangular coverage area sampled on a regular grid at fixed height.
#[derive(Debug, Clone, Copy)]
pub struct UserArea {
    pub center: Position,
    /// Half extents along x and y, meters.
    pub half_widths: (f64, f64),
    pub z_plane: f64,
    /// Points along x and y.
    pub grid: (usize, usize),
}

impl UserArea {
    /// Grid points in x-major order.
    pub fn grid_points(&self) -> Vec<Position> {
        let (gx, gy) = self.grid;
        let coord = |c: f64, h: f64, i: usize, g: usize| {
            if g == 1 {
                c
            } else {
                c - h + 2.0 * h * i as f64 / (g - 1) as f64
            }
        };
        let mut pts = Vec::with_capacity(gx * gy);
        for ix in 0..gx {
            let x = coord(self.center.x, self.half_widths.0, ix, gx);
            for iy in 0..gy {
                let y = coord(self.center.y, self.half_widths.1, iy, gy);
                pts.push(Position::new(x, y, self.z_plane));
            }
        }
        pts
    }

    pub fn num_points(&self) -> usize {
        self.grid.0 * self.grid.1
    }
}

/// Per-area SNR machinery: for every grid point `u`, the generating vector
/// `g(u)` with `SNR(w, u) = |sum_n g_n(u) e^{j w_n}|^2`, plus the (blocked)
/// direct-link amplitude used only by the time-domain evaluator.
#[derive(Debug, Clone)]
pub struct SnrKernel {
    /// `gains[point][element]`.
    pub gains: Vec<Vec<Complex64>>,
    /// Direct-link amplitude per point, same normalization as the reflected
    /// sum. The optimizer ignores it; the TDMA evaluator adds it.
    pub direct: Vec<Complex64>,
}

impl SnrKernel {
    pub fn num_points(&self) -> usize {
        self.gains.len()
    }

    pub fn num_elements(&self) -> usize {
        self.gains.first().map_or(0, Vec::len)
    }

    fn amplitude(&self, phases: &[f64], point: usize) -> Complex64 {
        self.gains[point]
            .iter()
            .zip(phases)
            .map(|(g, &w)| g * Complex64::from_polar(1.0, w))
            .sum()
    }

    /// Reflected-path SNR at one grid point (direct link dropped).
    pub fn snr(&self, phases: &[f64], point: usize) -> f64 {
        self.amplitude(phases, point).norm_sqr()
    }

    /// Full SNR including the blocked direct link.
    pub fn snr_with_direct(&self, phases: &[f64], point: usize) -> f64 {
        (self.direct[point] + self.amplitude(phases, point)).norm_sqr()
    }

    /// Minimum reflected SNR over the area grid and its argmin (ties break
    /// toward the lowest point index).
    pub fn min_area_snr(&self, phases: &[f64]) -> (f64, usize) {
        let mut best = (f64::INFINITY, 0);
        for point in 0..self.num_points() {
            let s = self.snr(phases, point);
            if s < best.0 {
                best = (s, point);
            }
        }
        best
    }

    /// Minimum full SNR (with the direct term) over the area grid.
    pub fn min_area_snr_with_direct(&self, phases: &[f64]) -> (f64, usize) {
        let mut best = (f64::INFINITY, 0);
        for point in 0..self.num_points() {
            let s = self.snr_with_direct(phases, point);
            if s < best.0 {
                best = (s, point);
            }
        }
        best
    }
}

/// Minimum-over-area SNR of a configuration (reflected path, as optimized).
pub fn min_area_snr(config: &PhaseConfig, kernel: &SnrKernel) -> (f64, usize) {
    kernel.min_area_snr(&config.0)
}

/// Matched-filter transmit beamformer toward the RIS.
///
/// The LOS channel rows carry `exp(+j k d)` phases on the BS side, so the
/// power-constrained filter that combines coherently at every RIS element is
/// the conjugated steering vector: `q = sqrt(P_t) a*(u_RIS) / ||a||`.
pub fn mf_beamformer(bs: &ArrayGeometry, ris_center: Position, wavenumber: f64, p_t: f64) -> Result<Vec<Complex64>> {
    if !(p_t > 0.0) {
        return Err(Error::invalid("transmit power must be positive"));
    }
    let a = steering_vector(bs, ris_center, wavenumber)?;
    let norm = (a.len() as f64).sqrt(); // unit-modulus entries
    let scale = p_t.sqrt() / norm;
    Ok(a.into_iter().map(|e| e.conj() * scale).collect())
}

/// Build the SNR kernel of one user area from its channels.
///
/// `g_n(u) = conj(h_r[u][n]) * [H_t q]_n / sigma_n` and the direct term is
/// `q^H h_d(u) / sigma_n`, so that `|direct + sum_n g_n e^{j w_n}|^2`
/// reproduces the received SNR of the full two-path channel.
pub fn build_snr_kernel(
    h_r: &[Vec<Complex64>],
    h_d: &[Vec<Complex64>],
    h_t: &CMatrix,
    q: &[Complex64],
    sigma2: f64,
) -> Result<SnrKernel> {
    if !(sigma2 > 0.0) {
        return Err(Error::invalid("noise power must be positive"));
    }
    let sigma = sigma2.sqrt();
    let tq = h_t.matvec(q); // length N
    let gains = h_r
        .iter()
        .map(|hr| {
            if hr.len() != tq.len() {
                return Err(Error::invalid("h_r length does not match the RIS size"));
            }
            Ok(hr.iter().zip(&tq).map(|(h, t)| h.conj() * t / sigma).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let direct = h_d
        .iter()
        .map(|hd| {
            if hd.len() != q.len() {
                return Err(Error::invalid("h_d length does not match the BS size"));
            }
            Ok(hd.iter().zip(q).map(|(h, qi)| h.conj() * qi).sum::<Complex64>() / sigma)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SnrKernel { gains, direct })
}

/// Wrap a phase into `[omega_min, omega_min + 2 pi)`, then keep it strictly
/// inside the realizable interval so falling transitions toward it remain
/// finite.
fn wrap_phase(raw: f64, omega_min: f64, omega_max: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let span = (omega_max - omega_min).min(two_pi);
    let mut w = omega_min + (raw - omega_min).rem_euclid(two_pi);
    if w >= omega_min + span {
        w = omega_min + span * (1.0 - 1e-12);
    }
    let floor = omega_min + (omega_max - omega_min) * 1e-12;
    w.max(floor)
}

/// Per-element phases that focus the whole surface on one grid point: each
/// summand `g_n e^{j phi_n}` is rotated onto the positive real axis.
pub fn focusing_phases(kernel: &SnrKernel, point: usize, cell: &LCCellModel) -> PhaseConfig {
    let phases = kernel.gains[point]
        .iter()
        .map(|g| wrap_phase(-g.arg(), cell.omega_min, cell.omega_max))
        .collect();
    PhaseConfig(phases)
}

/// Cyclic element-to-point map: element `n` serves grid point `n mod |U|`,
/// so point loads differ by at most one element.
pub fn assign_points(n_elements: usize, num_points: usize) -> Vec<usize> {
    assert!(num_points > 0, "area must contain at least one grid point");
    (0..n_elements).map(|n| n % num_points).collect()
}

/// Per-element focusing phases toward each element's assigned point. This is
/// both the optimizer's initialization and the transition-unaware benchmark.
pub fn assignment_phases(kernel: &SnrKernel, assignment: &[usize], cell: &LCCellModel) -> PhaseConfig {
    let phases = assignment
        .iter()
        .enumerate()
        .map(|(n, &u)| wrap_phase(-kernel.gains[u][n].arg(), cell.omega_min, cell.omega_max))
        .collect();
    PhaseConfig(phases)
}

/// Context of one per-element line search.
#[derive(Debug, Clone, Copy)]
pub struct CoordinateCtx {
    /// Previous user's phase at this element.
    pub omega_prev: f64,
    /// Next user's phase at this element.
    pub omega_next: f64,
    /// Cosine surrogate weight (merged Lagrange multiplier).
    pub lambda: f64,
    /// Weight of the incoming transition-time term.
    pub xi_cur: f64,
    /// Weight of the outgoing transition-time term.
    pub xi_next: f64,
    /// Focusing phase of this element toward its assigned point.
    pub phi: f64,
    pub cell: LCCellModel,
}

fn directed_time(from: f64, to: f64, cell: &LCCellModel) -> f64 {
    if to > from {
        if to >= cell.omega_max {
            return f64::INFINITY;
        }
        cell.tau_plus * ((cell.omega_max - from) / (cell.omega_max - to)).ln()
    } else if to < from {
        if to <= cell.omega_min {
            return f64::INFINITY;
        }
        cell.tau_minus * ((from - cell.omega_min) / (to - cell.omega_min)).ln()
    } else {
        0.0
    }
}

/// Per-element surrogate cost
/// `xi_next t(omega -> next) + xi_cur t(prev -> omega) - lambda cos(omega - phi)`.
pub fn coordinate_cost(omega: f64, ctx: &CoordinateCtx) -> f64 {
    let mut cost = -ctx.lambda * (omega - ctx.phi).cos();
    if ctx.xi_cur != 0.0 {
        cost += ctx.xi_cur * directed_time(ctx.omega_prev, omega, &ctx.cell);
    }
    if ctx.xi_next != 0.0 {
        cost += ctx.xi_next * directed_time(omega, ctx.omega_next, &ctx.cell);
    }
    cost
}

fn xi_weighted_time(omega: f64, ctx: &CoordinateCtx) -> f64 {
    let mut t = 0.0;
    if ctx.xi_cur != 0.0 {
        t += ctx.xi_cur * directed_time(ctx.omega_prev, omega, &ctx.cell);
    }
    if ctx.xi_next != 0.0 {
        t += ctx.xi_next * directed_time(omega, ctx.omega_next, &ctx.cell);
    }
    t
}

/// Global minimizer of [`coordinate_cost`] over a uniform open grid of
/// `l_points` candidates on `(omega_min, omega_max)`. Exact cost ties break
/// toward the smaller xi-weighted time sum, then toward the lower index.
pub fn line_search_element(ctx: &CoordinateCtx, l_points: usize) -> f64 {
    debug_assert!(l_points >= 2);
    let span = ctx.cell.range();
    let step = span / (l_points + 1) as f64;
    let mut best_w = ctx.cell.omega_min + step;
    let mut best_cost = f64::INFINITY;
    let mut best_time = f64::INFINITY;
    for i in 0..l_points {
        let w = ctx.cell.omega_min + (i + 1) as f64 * step;
        let c = coordinate_cost(w, ctx);
        if c < best_cost {
            best_cost = c;
            best_w = w;
            best_time = f64::NAN; // computed lazily on the first tie
        } else if c == best_cost {
            if best_time.is_nan() {
                best_time = xi_weighted_time(best_w, ctx);
            }
            let t = xi_weighted_time(w, ctx);
            if t < best_time {
                best_time = t;
                best_w = w;
            }
        }
    }
    best_w
}

/// Optimizer knobs, in linear units.
#[derive(Debug, Clone, Copy)]
pub struct OptimizerConfig {
    pub cell: LCCellModel,
    /// SNR threshold, linear.
    pub gamma_thr: f64,
    /// Acceptance margin above the threshold, dB.
    pub snr_margin_db: f64,
    /// Multiplier scale factor per accept (and its inverse per reject).
    pub alpha: f64,
    pub i_max: usize,
    /// Initial per-user transition-time budget, seconds.
    pub t_max_init: f64,
    /// Budget decrement per outer iteration; `None` means `t_max_init/i_max`.
    pub delta_t: Option<f64>,
    /// Line-search points per `2 pi` of phase range (the grid over a wider
    /// range is its nested refinement, so extending the range never loses
    /// the narrower grid's candidates).
    pub line_search: usize,
    pub lambda0: f64,
}

impl OptimizerConfig {
    fn grid_points(&self) -> usize {
        let m = self.cell.range() / (2.0 * std::f64::consts::PI);
        (((self.line_search + 1) as f64 * m).round() as usize).saturating_sub(1).max(2)
    }

    fn validate(&self) -> Result<()> {
        self.cell.validate()?;
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::invalid("alpha must lie in (0, 1)"));
        }
        if self.i_max == 0 {
            return Err(Error::invalid("i_max must be positive"));
        }
        if !(self.t_max_init > 0.0) {
            return Err(Error::invalid("t_max_init must be positive"));
        }
        if self.line_search < 2 {
            return Err(Error::invalid("line search needs at least 2 points"));
        }
        if !(self.lambda0 > 0.0) {
            return Err(Error::invalid("lambda0 must be positive"));
        }
        if !(self.gamma_thr > 0.0) {
            return Err(Error::invalid("gamma threshold must be positive"));
        }
        Ok(())
    }
}

/// One outer iteration of the log.
#[derive(Debug, Clone, Serialize)]
pub struct IterationRecord {
    pub iteration: usize,
    /// Mean over users of the slowest element's transition time, seconds.
    pub cost: f64,
    /// Post-decision min-area SNR per user, dB.
    pub min_snr_db: Vec<f64>,
    /// Whether each user's candidate column was accepted this iteration.
    pub accepted: Vec<bool>,
    /// Current multiplier scale per user.
    pub lambda: Vec<f64>,
}

/// Full optimization output.
#[derive(Debug, Clone, Serialize)]
pub struct OptimizeReport {
    /// Serving order (user indices).
    pub order: Vec<usize>,
    /// Final configuration per user (indexed by user id).
    pub configs: Vec<PhaseConfig>,
    /// Mean-over-users max transition time at initialization, seconds.
    pub initial_cost: f64,
    pub final_cost: f64,
    /// Per-user slowest-element transition time in the final state, seconds.
    pub max_times: Vec<f64>,
    /// Per-user per-element transition times in the final state.
    pub per_element_times: Vec<Vec<f64>>,
    pub trace: Vec<IterationRecord>,
}

fn check_order(order: &[usize], k: usize) -> Result<()> {
    if order.len() != k {
        return Err(Error::invalid(format!("order length {} does not match {k} users", order.len())));
    }
    let mut seen = vec![false; k];
    for &u in order {
        if u >= k || seen[u] {
            return Err(Error::invalid("order must be a permutation of the user indices"));
        }
        seen[u] = true;
    }
    Ok(())
}

/// Transition-aware phase-shift optimization (parallel per-element
/// coordinate descent with over/undershoot transition costs).
///
/// Starts from the assignment-focusing configuration, checks feasibility
/// against the SNR threshold, then iterates: flag elements whose transition
/// time meets the shrinking per-user budget, re-optimize flagged elements of
/// one user at a time by line search, and accept the new column only if the
/// margin-padded SNR constraint holds and the total cost did not increase
/// (multipliers scale by `alpha` on accept, `1/alpha` on reject). The
/// returned trace is therefore non-increasing in cost, and every accepted
/// state satisfies the SNR constraint.
///
/// Deterministic: the result depends only on the kernels, the config, and
/// the order (parallelism never reorders reductions).
pub fn optimize(kernels: &[SnrKernel], cfg: &OptimizerConfig, order: &[usize]) -> Result<OptimizeReport> {
    cfg.validate()?;
    let k_users = kernels.len();
    if k_users == 0 {
        return Err(Error::invalid("need at least one user"));
    }
    check_order(order, k_users)?;
    let n = kernels[0].num_elements();
    if n == 0 || kernels.iter().any(|k| k.num_elements() != n) {
        return Err(Error::invalid("kernels must share one positive RIS size"));
    }

    let margin = 10f64.powf(cfg.snr_margin_db / 10.0);
    let gamma_accept = cfg.gamma_thr * margin;

    // initialization: focusing on assigned points
    let mut focus: Vec<Vec<f64>> = Vec::with_capacity(k_users);
    let mut configs: Vec<Vec<f64>> = Vec::with_capacity(k_users);
    for kernel in kernels {
        let assignment = assign_points(n, kernel.num_points());
        let phases = assignment_phases(kernel, &assignment, &cfg.cell).0;
        focus.push(phases.clone());
        configs.push(phases);
    }

    // feasibility of the starting point
    let mut snr_db: Vec<f64> = Vec::with_capacity(k_users);
    for (k, kernel) in kernels.iter().enumerate() {
        let (snr, point) = kernel.min_area_snr(&configs[k]);
        if snr < cfg.gamma_thr {
            return Err(Error::Infeasible {
                user: k,
                point,
                snr_db: 10.0 * snr.log10(),
                thr_db: 10.0 * cfg.gamma_thr.log10(),
            });
        }
        snr_db.push(10.0 * snr.log10());
    }

    let prev_pos = |j: usize| (j + k_users - 1) % k_users;
    let next_pos = |j: usize| (j + 1) % k_users;

    // per-position element times for the current state
    let times_for = |cfgs: &[Vec<f64>], j: usize| -> Vec<f64> {
        let src = &cfgs[order[prev_pos(j)]];
        let dst = &cfgs[order[j]];
        src.iter().zip(dst).map(|(&a, &b)| directed_time(a, b, &cfg.cell)).collect()
    };
    let max_of = |v: &[f64]| v.iter().cloned().fold(0.0f64, f64::max);

    let mut pos_max: Vec<f64> = (0..k_users).map(|j| max_of(&times_for(&configs, j))).collect();
    let total_cost = |maxima: &[f64]| maxima.iter().sum::<f64>() / k_users as f64;
    let initial_cost = total_cost(&pos_max);

    let mut lambda = vec![cfg.lambda0; k_users];
    let mut t_max = vec![cfg.t_max_init; k_users];
    let delta_t = cfg.delta_t.unwrap_or(cfg.t_max_init / cfg.i_max as f64);
    let l_grid = cfg.grid_points();

    let mut trace = Vec::with_capacity(cfg.i_max + 1);
    trace.push(IterationRecord {
        iteration: 0,
        cost: initial_cost,
        min_snr_db: snr_db.clone(),
        accepted: vec![true; k_users],
        lambda: lambda.clone(),
    });

    for iter in 1..=cfg.i_max {
        // flags from the state at the top of the iteration
        let xi: Vec<Vec<bool>> = (0..k_users)
            .map(|j| {
                let t = times_for(&configs, j);
                let budget = t_max[order[j]];
                t.into_iter().map(|ti| ti >= budget).collect()
            })
            .collect();

        let mut accepted_flags = vec![false; k_users];
        for j in 0..k_users {
            let user = order[j];
            let jp = prev_pos(j);
            let jn = next_pos(j);
            let (prev_cfg, next_cfg) = (configs[order[jp]].clone(), configs[order[jn]].clone());
            let lam = lambda[user];
            let cur = &configs[user];
            let cell = cfg.cell;
            let focus_u = &focus[user];
            let xi_in = &xi[j];
            let xi_out = &xi[jn];

            // line search only for elements whose incoming or outgoing
            // transition is flagged; both time terms stay active in the cost
            // so a move never hides the transition it induces on a neighbor
            let candidate: Vec<f64> = (0..n)
                .into_par_iter()
                .map(|p| {
                    if !(xi_in[p] || xi_out[p]) {
                        return cur[p];
                    }
                    let ctx = CoordinateCtx {
                        omega_prev: prev_cfg[p],
                        omega_next: next_cfg[p],
                        lambda: lam,
                        xi_cur: 1.0,
                        xi_next: 1.0,
                        phi: focus_u[p],
                        cell,
                    };
                    line_search_element(&ctx, l_grid)
                })
                .collect();

            let (snr, _) = kernels[user].min_area_snr(&candidate);
            let new_in = max_of(
                &prev_cfg
                    .iter()
                    .zip(&candidate)
                    .map(|(&a, &b)| directed_time(a, b, &cfg.cell))
                    .collect::<Vec<_>>(),
            );
            let new_out = max_of(
                &candidate
                    .iter()
                    .zip(&next_cfg)
                    .map(|(&a, &b)| directed_time(a, b, &cfg.cell))
                    .collect::<Vec<_>>(),
            );
            let old_sum: f64 = pos_max.iter().sum();
            let new_sum = if k_users == 1 {
                new_in // self-cycle: one position only
            } else {
                old_sum - pos_max[j] - pos_max[jn] + new_in + new_out
            };

            if snr >= gamma_accept && new_sum <= old_sum {
                configs[user] = candidate;
                if k_users == 1 {
                    pos_max[j] = new_in;
                } else {
                    pos_max[j] = new_in;
                    pos_max[jn] = new_out;
                }
                lambda[user] *= cfg.alpha;
                accepted_flags[j] = true;
                snr_db[user] = 10.0 * snr.log10();
            } else {
                lambda[user] /= cfg.alpha;
            }
        }

        for budget in t_max.iter_mut() {
            *budget -= delta_t;
        }
        trace.push(IterationRecord {
            iteration: iter,
            cost: total_cost(&pos_max),
            min_snr_db: order.iter().map(|&u| snr_db[u]).collect(),
            accepted: accepted_flags,
            lambda: order.iter().map(|&u| lambda[u]).collect(),
        });
    }

    let mut per_element_times = vec![Vec::new(); k_users];
    let mut max_times = vec![0.0; k_users];
    for j in 0..k_users {
        let t = times_for(&configs, j);
        max_times[order[j]] = max_of(&t);
        per_element_times[order[j]] = t;
    }

    Ok(OptimizeReport {
        order: order.to_vec(),
        configs: configs.into_iter().map(PhaseConfig).collect(),
        initial_cost,
        final_cost: total_cost(&pos_max),
        max_times,
        per_element_times,
        trace,
    })
}

/// Transition-unaware benchmark: every element focuses on its assigned area
/// point; nothing is traded for transition time. Independent of the serving
/// order. Fails with the same feasibility error as [`optimize`].
pub fn benchmark_optimize(kernels: &[SnrKernel], cell: &LCCellModel, gamma_thr: f64) -> Result<Vec<PhaseConfig>> {
    let mut out = Vec::with_capacity(kernels.len());
    for (k, kernel) in kernels.iter().enumerate() {
        let assignment = assign_points(kernel.num_elements(), kernel.num_points());
        let config = assignment_phases(kernel, &assignment, cell);
        let (snr, point) = kernel.min_area_snr(&config.0);
        if snr < gamma_thr {
            return Err(Error::Infeasible {
                user: k,
                point,
                snr_db: 10.0 * snr.log10(),
                thr_db: 10.0 * gamma_thr.log10(),
            });
        }
        out.push(config);
    }
    Ok(out)
}

/// Leave-one-element-out residual of the cosine surrogate: for each element
/// `p`, the amplitude-free sum `S_p = sum_{m != p} exp(j (w_m - phi_m(u_p)))`
/// over the other elements, evaluated at `p`'s assigned point. Returns the
/// maximum and mean of `|arg S_p|`; the surrogate treats this argument as
/// zero.
pub fn assignment_residual_stats(kernel: &SnrKernel, config: &PhaseConfig) -> (f64, f64) {
    let n = kernel.num_elements();
    let u_count = kernel.num_points();
    let assignment = assign_points(n, u_count);
    // per point: phases phi_m(u) and the total sum over m
    let mut totals = vec![Complex64::new(0.0, 0.0); u_count];
    let mut terms = vec![vec![Complex64::new(0.0, 0.0); n]; u_count];
    for (u, total) in totals.iter_mut().enumerate() {
        for m in 0..n {
            let phi = -kernel.gains[u][m].arg();
            let term = Complex64::from_polar(1.0, config.0[m] - phi);
            terms[u][m] = term;
            *total += term;
        }
    }
    let mut max_theta = 0.0f64;
    let mut sum_theta = 0.0f64;
    for p in 0..n {
        let u = assignment[p];
        let s = totals[u] - terms[u][p];
        let theta = s.arg().abs();
        max_theta = max_theta.max(theta);
        sum_theta += theta;
    }
    (max_theta, sum_theta / n as f64)
}
