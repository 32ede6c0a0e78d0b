//! Time-domain TDMA evaluation of RIS reconfiguration.
//!
//! One cycle serves the users in a fixed order, one slot each. At a slot
//! boundary every element starts an over/undershoot flight from its
//! instantaneous phase toward the scheduled user's configuration (mid-flight
//! retargeting when the slot is shorter than the transition), and the
//! minimum-over-area SNR of the scheduled user is sampled on a uniform time
//! grid using the full two-path channel. Threshold-crossing times,
//! effective-rate sweeps, and differential-phase histograms derive from the
//! traces.

use crate::error::{Error, Result};
use crate::lc::{DriveTrajectory, LCCellModel, PhaseConfig};
use crate::optimizer::SnrKernel;
use serde::Serialize;

/// Serving order and slot length.
#[derive(Debug, Clone)]
pub struct Schedule {
    /// Permutation of `0..K`.
    pub order: Vec<usize>,
    /// Slot duration, seconds.
    pub t_s: f64,
}

impl Schedule {
    pub fn validate(&self, k: usize) -> Result<()> {
        if !(self.t_s > 0.0) {
            return Err(Error::invalid("slot duration must be positive"));
        }
        if self.order.len() != k {
            return Err(Error::invalid(format!("order length {} does not match {k} users", self.order.len())));
        }
        let mut seen = vec![false; k];
        for &u in &self.order {
            if u >= k || seen[u] {
                return Err(Error::invalid("order must be a permutation of the user indices"));
            }
            seen[u] = true;
        }
        Ok(())
    }
}

/// Sampled SNR trace over one full TDMA cycle.
#[derive(Debug, Clone, Serialize)]
pub struct TdmaTrace {
    /// Global clock, seconds; uniform within slots.
    pub t: Vec<f64>,
    /// Minimum-over-area SNR of the currently scheduled user, dB.
    pub snr_min_db: Vec<f64>,
    /// Scheduled user per sample.
    pub active_user: Vec<usize>,
    /// Slot start times, `[0, T_s, ..., (K-1) T_s]`.
    pub slot_boundaries: Vec<f64>,
    /// Slot duration, seconds.
    pub t_s: f64,
}

/// Simulate one TDMA cycle.
///
/// The cycle begins settled at the last scheduled user's configuration (the
/// steady state of the previous cycle). Phases evolve continuously across
/// slot boundaries; each slot contributes samples at `t_s / ceil(t_s/dt)`
/// spacing and the final boundary sample closes the cycle.
pub fn simulate_cycle(
    configs: &[PhaseConfig],
    schedule: &Schedule,
    cell: &LCCellModel,
    kernels: &[SnrKernel],
    dt: f64,
) -> Result<TdmaTrace> {
    let k_users = configs.len();
    if k_users == 0 || kernels.len() != k_users {
        return Err(Error::invalid("need matching, non-empty configs and kernels"));
    }
    schedule.validate(k_users)?;
    if !(dt > 0.0) || dt > schedule.t_s / 50.0 {
        return Err(Error::invalid(format!(
            "sampling step {dt} must be positive and at most T_s/50 = {}",
            schedule.t_s / 50.0
        )));
    }
    let n = configs[0].len();
    if configs.iter().any(|c| c.len() != n) {
        return Err(Error::invalid("all configurations must share the RIS size"));
    }

    let steps = (schedule.t_s / dt).ceil() as usize;
    let dts = schedule.t_s / steps as f64;

    let mut cur: Vec<f64> = configs[schedule.order[k_users - 1]].0.clone();
    let mut t = Vec::with_capacity(k_users * steps + 1);
    let mut snr_min_db = Vec::with_capacity(k_users * steps + 1);
    let mut active_user = Vec::with_capacity(k_users * steps + 1);
    let mut phases = vec![0.0; n];

    for (j, &user) in schedule.order.iter().enumerate() {
        let target = &configs[user].0;
        let drives: Vec<DriveTrajectory> = cur
            .iter()
            .zip(target)
            .map(|(&from, &to)| DriveTrajectory::saturating(from, to, cell))
            .collect();
        let last_slot = j == k_users - 1;
        let upper = if last_slot { steps } else { steps - 1 };
        for m in 0..=upper {
            let local = m as f64 * dts;
            for (p, drive) in drives.iter().enumerate() {
                phases[p] = drive.eval(local);
            }
            let (snr, _) = kernels[user].min_area_snr_with_direct(&phases);
            t.push(j as f64 * schedule.t_s + local);
            snr_min_db.push(10.0 * snr.log10());
            active_user.push(user);
        }
        for (p, drive) in drives.iter().enumerate() {
            cur[p] = drive.eval(schedule.t_s);
        }
    }

    Ok(TdmaTrace {
        t,
        snr_min_db,
        active_user,
        slot_boundaries: (0..k_users).map(|j| j as f64 * schedule.t_s).collect(),
        t_s: schedule.t_s,
    })
}

/// First time within `slot` (relative to its start) at which the trace
/// reaches `gamma_thr_db`, linearly interpolated between samples; `None`
/// when the threshold is never met inside the slot. Samples belonging to
/// neighboring slots (evaluated on other users' kernels) never leak in.
pub fn time_to_threshold(trace: &TdmaTrace, slot: usize, gamma_thr_db: f64) -> Option<f64> {
    let start = trace.slot_boundaries.get(slot).copied()?;
    let eps = trace.t_s * 1e-9;
    let first = trace.t.iter().position(|&ti| ti >= start - eps)?;
    let user = trace.active_user[first];
    let mut prev: Option<(f64, f64)> = None;
    for i in first..trace.t.len() {
        if trace.active_user[i] != user {
            break;
        }
        let ti = trace.t[i];
        let s = trace.snr_min_db[i];
        if s >= gamma_thr_db {
            let crossing = match prev {
                None => 0.0,
                Some((tp, sp)) => {
                    if s > sp {
                        (tp - start) + (ti - tp) * (gamma_thr_db - sp) / (s - sp)
                    } else {
                        ti - start
                    }
                }
            };
            return Some(crossing);
        }
        prev = Some((ti, s));
    }
    None
}

/// Effective rate of a slot of length `t_s` that loses `t_c` to
/// reconfiguration: `max(t_s - t_c, 0)/t_s * log2(1 + gamma)`.
pub fn effective_rate(t_s: f64, t_c: f64, gamma_thr_db: f64) -> f64 {
    assert!(t_s > 0.0, "slot length must be positive");
    assert!(t_c >= 0.0, "reconfiguration time must be non-negative");
    let gamma = 10f64.powf(gamma_thr_db / 10.0);
    ((t_s - t_c).max(0.0) / t_s) * (1.0 + gamma).log2()
}

/// Slot length, mean threshold-crossing time, and the resulting rate.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RateResult {
    pub t_s: f64,
    pub t_c_mean: f64,
    pub rate: f64,
}

/// Mean threshold-crossing time over one cycle of fully settled
/// transitions: every slot is long enough (`40 tau_minus`) for each
/// configuration to settle before the next switch, so the result is a
/// property of the configurations and the cell alone. A slot that never
/// reaches the threshold contributes the full reference slot.
pub fn mean_settled_crossing(
    configs: &[PhaseConfig],
    cell: &LCCellModel,
    kernels: &[SnrKernel],
    order: &[usize],
    gamma_thr_db: f64,
    dt: f64,
) -> Result<f64> {
    let t_ref = 40.0 * cell.tau_minus.max(cell.tau_plus);
    let schedule = Schedule { order: order.to_vec(), t_s: t_ref };
    let trace = simulate_cycle(configs, &schedule, cell, kernels, dt)?;
    let k = configs.len();
    let mut acc = 0.0;
    for slot in 0..k {
        acc += time_to_threshold(&trace, slot, gamma_thr_db).unwrap_or(t_ref);
    }
    Ok(acc / k as f64)
}

/// Sweep the slot length and report the effective rate of the proposed and
/// benchmark configurations.
///
/// The reconfiguration time is measured once, on settled transitions (see
/// [`mean_settled_crossing`]); the slot length then enters only through the
/// rate formula. Measuring the crossing inside each swept slot instead would
/// make short slots look free whenever the surface has no time to leave the
/// previous configuration.
pub fn rate_sweep(
    proposed: &[PhaseConfig],
    benchmark: &[PhaseConfig],
    t_s_list: &[f64],
    cell: &LCCellModel,
    kernels: &[SnrKernel],
    order: &[usize],
    gamma_thr_db: f64,
    dt_base: f64,
) -> Result<Vec<(RateResult, RateResult)>> {
    if t_s_list.is_empty() {
        return Err(Error::invalid("slot-length list must not be empty"));
    }
    let tc_p = mean_settled_crossing(proposed, cell, kernels, order, gamma_thr_db, dt_base)?;
    let tc_b = mean_settled_crossing(benchmark, cell, kernels, order, gamma_thr_db, dt_base)?;
    Ok(t_s_list
        .iter()
        .map(|&t_s| {
            (
                RateResult { t_s, t_c_mean: tc_p, rate: effective_rate(t_s, tc_p, gamma_thr_db) },
                RateResult { t_s, t_c_mean: tc_b, rate: effective_rate(t_s, tc_b, gamma_thr_db) },
            )
        })
        .collect())
}

/// Histogram of cyclic differential phases.
#[derive(Debug, Clone, Serialize)]
pub struct Histogram {
    pub bin_centers: Vec<f64>,
    pub counts: Vec<u64>,
    /// Fraction of transitions with `|delta| <= pi/2`.
    pub mass_within_half_pi: f64,
}

/// Histogram of `delta = w_k - w_{k-1}` (cyclic over users, per element)
/// over `[-omega_max, omega_max]`.
pub fn delta_histogram(configs: &[PhaseConfig], bins: usize, omega_max: f64) -> Result<Histogram> {
    if bins < 8 {
        return Err(Error::invalid(format!("need at least 8 bins, got {bins}")));
    }
    if configs.is_empty() {
        return Err(Error::invalid("need at least one configuration"));
    }
    let k = configs.len();
    let n = configs[0].len();
    if configs.iter().any(|c| c.len() != n) {
        return Err(Error::invalid("configurations must share the RIS size"));
    }
    let width = 2.0 * omega_max / bins as f64;
    let mut counts = vec![0u64; bins];
    let mut within = 0u64;
    let mut total = 0u64;
    for ki in 0..k {
        let prev = &configs[(ki + k - 1) % k].0;
        let cur = &configs[ki].0;
        for (&a, &b) in prev.iter().zip(cur) {
            let d = b - a;
            let idx = (((d + omega_max) / width).floor() as i64).clamp(0, bins as i64 - 1) as usize;
            counts[idx] += 1;
            total += 1;
            if d.abs() <= std::f64::consts::FRAC_PI_2 {
                within += 1;
            }
        }
    }
    let bin_centers = (0..bins).map(|i| -omega_max + (i as f64 + 0.5) * width).collect();
    Ok(Histogram {
        bin_centers,
        counts,
        mass_within_half_pi: within as f64 / total as f64,
    })
}

/// All cyclically distinct serving orders: user 0 is pinned first, the rest
/// enumerate in lexicographic order, `(K-1)!` in total. Refused for `K > 8`.
pub fn enumerate_orders(k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 {
        return Err(Error::invalid("need at least one user"));
    }
    if k > 8 {
        return Err(Error::invalid(format!("{k} users would enumerate {k}!/{k} orders; capped at 8")));
    }
    let mut rest: Vec<usize> = (1..k).collect();
    let mut out = Vec::new();
    loop {
        let mut order = Vec::with_capacity(k);
        order.push(0);
        order.extend_from_slice(&rest);
        out.push(order);
        // next lexicographic permutation of `rest`
        let Some(i) = rest.windows(2).rposition(|w| w[0] < w[1]) else {
            break;
        };
        let j = rest.iter().rposition(|&x| x > rest[i]).unwrap();
        rest.swap(i, j);
        rest[i + 1..].reverse();
    }
    Ok(out)
}
