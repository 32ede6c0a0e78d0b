//! Closed-form transient model of a single LC phase-shifter cell.
//!
//! A cell driven toward a new bias follows a single-exponential response with
//! direction-dependent time constant: rising phase transitions use `tau_plus`
//! (field-driven alignment), falling ones use the slower `tau_minus` (elastic
//! relaxation). Over/undershooting drives the cell with the maximum (or zero)
//! bias until the phase crosses the target, then snaps to the holding bias;
//! the crossing times are the closed-form log expressions implemented here.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Cell constants: exponential time constants and realizable phase range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LCCellModel {
    /// Rising time constant, seconds.
    pub tau_plus: f64,
    /// Falling time constant, seconds (typically much larger than `tau_plus`).
    pub tau_minus: f64,
    /// Lowest realizable phase, radians (usually 0).
    pub omega_min: f64,
    /// Highest realizable phase, radians.
    pub omega_max: f64,
}

impl LCCellModel {
    pub fn new(tau_plus: f64, tau_minus: f64, omega_min: f64, omega_max: f64) -> Result<Self> {
        let cell = LCCellModel { tau_plus, tau_minus, omega_min, omega_max };
        cell.validate()?;
        Ok(cell)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tau_plus > 0.0) || !(self.tau_minus > 0.0) {
            return Err(Error::invalid("time constants must be positive"));
        }
        if !(self.omega_min < self.omega_max) {
            return Err(Error::invalid("omega_min must be below omega_max"));
        }
        Ok(())
    }

    /// Phase span `omega_max - omega_min`.
    pub fn range(&self) -> f64 {
        self.omega_max - self.omega_min
    }

    pub fn contains(&self, omega: f64) -> bool {
        omega >= self.omega_min && omega < self.omega_max
    }
}

/// Per-element RIS phase vector for one user slot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseConfig(pub Vec<f64>);

impl PhaseConfig {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, cell: &LCCellModel) -> Result<()> {
        for (n, &w) in self.0.iter().enumerate() {
            if !w.is_finite() || !cell.contains(w) {
                return Err(Error::invalid(format!(
                    "phase [{n}] = {w} outside [{}, {})",
                    cell.omega_min, cell.omega_max
                )));
            }
        }
        Ok(())
    }
}

/// Exponential step response: `omega_d + (omega_0 - omega_d) exp(-t / tau)`.
pub fn phase_at(t: f64, omega0: f64, omega_d: f64, tau: f64) -> Result<f64> {
    if !(tau > 0.0) {
        return Err(Error::invalid(format!("time constant must be positive, got {tau}")));
    }
    if t < 0.0 {
        return Err(Error::invalid(format!("time must be non-negative, got {t}")));
    }
    Ok(omega_d + (omega0 - omega_d) * (-t / tau).exp())
}

/// Time for a cell driven with over/undershooting to reach `omega_d` from
/// `omega0`:
///
/// - rising: `tau_plus * ln((omega_max - omega0) / (omega_max - omega_d))`
/// - falling: `tau_minus * ln((omega0 - omega_min) / (omega_d - omega_min))`
///
/// Targets exactly at the drive asymptote (`omega_max` on a rise, `omega_min`
/// on a fall) are rejected as unreachable.
pub fn transition_time(omega0: f64, omega_d: f64, cell: &LCCellModel) -> Result<f64> {
    cell.validate()?;
    for (name, w) in [("omega0", omega0), ("omega_d", omega_d)] {
        if !w.is_finite() || w < cell.omega_min || w >= cell.omega_max {
            return Err(Error::invalid(format!(
                "{name} = {w} outside [{}, {})",
                cell.omega_min, cell.omega_max
            )));
        }
    }
    if omega_d == omega0 {
        return Ok(0.0);
    }
    if omega_d > omega0 {
        Ok(cell.tau_plus * ((cell.omega_max - omega0) / (cell.omega_max - omega_d)).ln())
    } else {
        if omega_d == cell.omega_min {
            return Err(Error::UnreachableTarget(format!(
                "falling target {omega_d} equals omega_min; relaxation never settles there"
            )));
        }
        Ok(cell.tau_minus * ((omega0 - cell.omega_min) / (omega_d - cell.omega_min)).ln())
    }
}

/// Sense of one over/undershoot maneuver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DriveMode {
    Overshoot,
    Undershoot,
    Hold,
}

/// One cell's drive maneuver: exponential flight toward the saturated
/// asymptote until `t_reach`, then hold at the target.
#[derive(Debug, Clone, Copy)]
pub struct DriveTrajectory {
    pub omega0: f64,
    pub omega_d: f64,
    pub mode: DriveMode,
    /// Time at which the target is crossed; infinite for asymptotic falls to
    /// `omega_min` (only produced by [`DriveTrajectory::saturating`]).
    pub t_reach: f64,
    asymptote: f64,
    tau: f64,
}

impl DriveTrajectory {
    /// Instantaneous phase at `t >= 0`. Continuous at `t_reach`.
    pub fn eval(&self, t: f64) -> f64 {
        if t >= self.t_reach {
            self.omega_d
        } else {
            self.asymptote + (self.omega0 - self.asymptote) * (-t / self.tau).exp()
        }
    }

    /// A total constructor for simulation use: a fall targeted exactly at
    /// `omega_min` becomes an asymptotic relaxation (`t_reach` infinite)
    /// instead of an error.
    pub fn saturating(omega0: f64, omega_d: f64, cell: &LCCellModel) -> Self {
        match drive_trajectory(omega0, omega_d, cell) {
            Ok(tr) => tr,
            Err(_) => DriveTrajectory {
                omega0,
                omega_d,
                mode: DriveMode::Undershoot,
                t_reach: f64::INFINITY,
                asymptote: cell.omega_min,
                tau: cell.tau_minus,
            },
        }
    }
}

/// Build the over/undershoot trajectory from `omega0` to `omega_d`.
pub fn drive_trajectory(omega0: f64, omega_d: f64, cell: &LCCellModel) -> Result<DriveTrajectory> {
    let t_reach = transition_time(omega0, omega_d, cell)?;
    let (mode, asymptote, tau) = if omega_d > omega0 {
        (DriveMode::Overshoot, cell.omega_max, cell.tau_plus)
    } else if omega_d < omega0 {
        (DriveMode::Undershoot, cell.omega_min, cell.tau_minus)
    } else {
        (DriveMode::Hold, omega_d, cell.tau_plus)
    };
    Ok(DriveTrajectory { omega0, omega_d, mode, t_reach, asymptote, tau })
}

/// Element-wise transition times between two full configurations, plus the
/// slowest element's time.
pub fn config_transition_time(prev: &PhaseConfig, next: &PhaseConfig, cell: &LCCellModel) -> Result<(Vec<f64>, f64)> {
    if prev.len() != next.len() {
        return Err(Error::invalid(format!(
            "configuration length mismatch: {} vs {}",
            prev.len(),
            next.len()
        )));
    }
    let times = prev
        .0
        .iter()
        .zip(&next.0)
        .map(|(&a, &b)| transition_time(a, b, cell))
        .collect::<Result<Vec<f64>>>()?;
    let max = times.iter().cloned().fold(0.0, f64::max);
    Ok((times, max))
}

/// Monotone voltage-to-phase lookup table with piecewise-linear
/// interpolation, clamped at the ends.
#[derive(Debug, Clone)]
pub struct VoltageLut {
    /// `(volts, radians)` knots, strictly increasing in volts.
    knots: Vec<(f64, f64)>,
}

impl VoltageLut {
    pub fn new(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::invalid("voltage LUT must have at least one knot"));
        }
        for w in knots.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::invalid("LUT voltages must be strictly increasing"));
            }
            if w[1].1 < w[0].1 {
                return Err(Error::invalid("LUT phases must be non-decreasing"));
            }
        }
        Ok(VoltageLut { knots })
    }

    /// Parse a two-column CSV of `volts,degrees`; degrees convert to radians.
    /// A header row is skipped if present.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut knots = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut cols = line.split(',').map(str::trim);
            let (a, b) = match (cols.next(), cols.next()) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(Error::Parse(format!("line {}: expected `volts,degrees`", i + 1))),
            };
            match (a.parse::<f64>(), b.parse::<f64>()) {
                (Ok(v), Ok(deg)) => knots.push((v, deg.to_radians())),
                _ if i == 0 => continue, // header
                _ => return Err(Error::Parse(format!("line {}: bad numbers `{line}`", i + 1))),
            }
        }
        VoltageLut::new(knots)
    }

    pub fn from_csv_path(path: &std::path::Path) -> Result<Self> {
        Self::from_csv(&std::fs::read_to_string(path)?)
    }

    /// Steady-state phase for bias `v`, radians.
    pub fn steady_phase(&self, v: f64) -> f64 {
        let first = self.knots[0];
        let last = *self.knots.last().unwrap();
        if v <= first.0 {
            return first.1;
        }
        if v >= last.0 {
            return last.1;
        }
        let i = self.knots.partition_point(|&(kv, _)| kv <= v);
        let (v0, p0) = self.knots[i - 1];
        let (v1, p1) = self.knots[i];
        p0 + (p1 - p0) * (v - v0) / (v1 - v0)
    }
}
