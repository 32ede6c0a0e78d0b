//! Experiment description: geometry, RF parameters, LC cell constants,
//! channel statistics, and optimizer knobs, all JSON-configurable.
//!
//! Unknown keys are rejected and every field has a default, so an empty
//! document (`{}`) parses to the stock configuration.

use crate::error::{Error, Result};
use crate::geometry::{build_upa, ArrayGeometry, Plane, Position};
use crate::lc::LCCellModel;
use crate::optimizer::UserArea;
use crate::pde::MaterialParams;
use serde::{Deserialize, Serialize};

pub const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RfConfig {
    pub freq_hz: f64,
    pub bandwidth_hz: f64,
    pub n0_dbm_per_hz: f64,
    pub nf_db: f64,
    pub p_t_dbm: f64,
    pub gamma_thr_db: f64,
}

impl Default for RfConfig {
    fn default() -> Self {
        RfConfig {
            freq_hz: 28.0e9,
            bandwidth_hz: 20.0e6,
            n0_dbm_per_hz: -174.0,
            nf_db: 6.0,
            p_t_dbm: 38.0,
            gamma_thr_db: 10.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ArraySpec {
    pub rows: usize,
    pub cols: usize,
    /// Element spacing in wavelengths.
    pub spacing_wavelengths: f64,
    pub center: [f64; 3],
    pub plane: Plane,
}

impl Default for ArraySpec {
    fn default() -> Self {
        ArraySpec {
            rows: 4,
            cols: 4,
            spacing_wavelengths: 0.5,
            center: [0.0, 0.0, 0.0],
            plane: Plane::Yz,
        }
    }
}

impl ArraySpec {
    pub fn build(&self, wavelength: f64) -> Result<ArrayGeometry> {
        build_upa(
            self.rows,
            self.cols,
            self.spacing_wavelengths * wavelength,
            Position::new(self.center[0], self.center[1], self.center[2]),
            self.plane,
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct UserAreaSpec {
    pub center: [f64; 3],
    /// Half extents along x and y, meters.
    pub half_widths: [f64; 2],
    /// Grid resolution (points along x, points along y).
    pub grid: [usize; 2],
}

impl Default for UserAreaSpec {
    fn default() -> Self {
        UserAreaSpec {
            center: [10.0, 2.0, -5.0],
            half_widths: [1.0, 1.0],
            grid: [3, 3],
        }
    }
}

impl UserAreaSpec {
    pub fn area(&self) -> UserArea {
        UserArea {
            center: Position::new(self.center[0], self.center[1], self.center[2]),
            half_widths: (self.half_widths[0], self.half_widths[1]),
            z_plane: self.center[2],
            grid: (self.grid[0], self.grid[1]),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GeometryConfig {
    pub bs: ArraySpec,
    pub ris: ArraySpec,
    pub users: Vec<UserAreaSpec>,
}

impl Default for GeometryConfig {
    fn default() -> Self {
        GeometryConfig {
            bs: ArraySpec {
                rows: 4,
                cols: 4,
                spacing_wavelengths: 0.5,
                center: [40.0, 20.0, 5.0],
                plane: Plane::Xz,
            },
            // 48x48 elements keep the focusing initialization comfortably above
            // the 10 dB min-area constraint for every tested seed.
            ris: ArraySpec {
                rows: 48,
                cols: 48,
                spacing_wavelengths: 0.5,
                center: [0.0, 0.0, 0.0],
                plane: Plane::Yz,
            },
            users: vec![
                UserAreaSpec { center: [10.0, 2.0, -5.0], ..Default::default() },
                UserAreaSpec { center: [10.0, -5.0, -5.0], ..Default::default() },
                UserAreaSpec { center: [10.0, 5.0, -5.0], ..Default::default() },
            ],
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ChannelConfig {
    pub beta_db: f64,
    pub d0_m: f64,
    /// Path-loss exponents for (BS-UE, BS-RIS, RIS-UE).
    pub eta: [f64; 3],
    /// Rician K-factors in dB for (BS-UE, BS-RIS, RIS-UE).
    pub k_f_db: [f64; 3],
    /// Extra blockage loss on the direct BS-UE link, dB.
    pub blockage_db: f64,
}

impl Default for ChannelConfig {
    fn default() -> Self {
        ChannelConfig {
            beta_db: -61.0,
            d0_m: 1.0,
            eta: [2.0, 2.0, 2.0],
            k_f_db: [-100.0, 10.0, 10.0],
            blockage_db: -40.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LcConfig {
    pub tau_plus_s: f64,
    pub tau_minus_s: f64,
    pub omega_min_rad: f64,
    pub omega_max_rad: f64,
}

impl Default for LcConfig {
    fn default() -> Self {
        LcConfig {
            tau_plus_s: 9.0e-3,
            tau_minus_s: 29.0e-3,
            omega_min_rad: 0.0,
            omega_max_rad: TWO_PI,
        }
    }
}

impl LcConfig {
    pub fn cell(&self) -> LCCellModel {
        LCCellModel {
            tau_plus: self.tau_plus_s,
            tau_minus: self.tau_minus_s,
            omega_min: self.omega_min_rad,
            omega_max: self.omega_max_rad,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OptimizerKnobs {
    /// Multiplier schedule factor, in (0, 1).
    pub alpha: f64,
    pub i_max: usize,
    pub t_max_init_s: f64,
    /// Per-iteration decrement of `t_max`; `None` means `t_max_init / i_max`.
    pub delta_t_s: Option<f64>,
    /// Line-search grid points per 2 pi of phase range.
    pub line_search: usize,
    pub lambda0: f64,
    /// Acceptance margin above the SNR threshold, dB. Accepted iterates
    /// satisfy `min-area SNR >= gamma_thr + margin`, which keeps the final
    /// configurations from hugging the constraint so tightly that their
    /// threshold-crossing during reconfiguration degrades.
    pub snr_margin_db: f64,
}

impl Default for OptimizerKnobs {
    fn default() -> Self {
        OptimizerKnobs {
            alpha: 0.95,
            i_max: 35,
            t_max_init_s: 0.1,
            delta_t_s: None,
            line_search: 256,
            lambda0: 0.05,
            snr_margin_db: 3.0,
        }
    }
}

/// Full experiment description. `Scenario::default()` reproduces the stock
/// three-user coverage setup at 28 GHz.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct Scenario {
    pub rf: RfConfig,
    pub geometry: GeometryConfig,
    pub channel: ChannelConfig,
    pub lc: LcConfig,
    pub optimizer: OptimizerKnobs,
    pub pde: MaterialParams,
    pub seed: u64,
}

impl Scenario {
    /// The stock scenario (same as `Default`).
    pub fn paper_default() -> Self {
        Scenario::default()
    }

    /// A deliberately tiny scenario for unit tests: small RIS, small areas,
    /// permissive SNR threshold.
    pub fn small_test() -> Self {
        let mut sc = Scenario::default();
        sc.geometry.ris.rows = 8;
        sc.geometry.ris.cols = 8;
        for u in &mut sc.geometry.users {
            u.grid = [2, 2];
        }
        sc.rf.gamma_thr_db = -20.0;
        sc.optimizer.i_max = 5;
        sc.optimizer.line_search = 64;
        sc
    }

    /// Parse a scenario from a JSON string. Whitespace-only input yields the
    /// default scenario.
    pub fn from_json(text: &str) -> Result<Scenario> {
        let trimmed = text.trim();
        let sc: Scenario = if trimmed.is_empty() {
            Scenario::default()
        } else {
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?
        };
        sc.validate()?;
        Ok(sc)
    }

    pub fn from_path(path: &std::path::Path) -> Result<Scenario> {
        Scenario::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        fn ensure(cond: bool, path: &str, msg: &str) -> Result<()> {
            if cond {
                Ok(())
            } else {
                Err(Error::Config { path: path.into(), msg: msg.into() })
            }
        }
        ensure(self.rf.freq_hz > 0.0, "rf.freq_hz", "must be positive")?;
        ensure(self.rf.bandwidth_hz > 0.0, "rf.bandwidth_hz", "must be positive")?;
        ensure(self.channel.d0_m > 0.0, "channel.d0_m", "must be positive")?;
        ensure(!self.geometry.users.is_empty(), "geometry.users", "at least one user required")?;
        for (i, u) in self.geometry.users.iter().enumerate() {
            ensure(
                u.grid[0] >= 1 && u.grid[1] >= 1,
                &format!("geometry.users[{i}].grid"),
                "grid must have at least one point per axis",
            )?;
            ensure(
                u.half_widths[0] >= 0.0 && u.half_widths[1] >= 0.0,
                &format!("geometry.users[{i}].half_widths"),
                "half widths must be non-negative",
            )?;
        }
        ensure(self.geometry.bs.rows >= 1 && self.geometry.bs.cols >= 1, "geometry.bs", "empty array")?;
        ensure(self.geometry.ris.rows >= 1 && self.geometry.ris.cols >= 1, "geometry.ris", "empty array")?;
        ensure(self.lc.tau_plus_s > 0.0, "lc.tau_plus_s", "must be positive")?;
        ensure(self.lc.tau_minus_s > 0.0, "lc.tau_minus_s", "must be positive")?;
        ensure(self.lc.omega_min_rad < self.lc.omega_max_rad, "lc.omega_max_rad", "must exceed omega_min_rad")?;
        ensure(
            self.optimizer.alpha > 0.0 && self.optimizer.alpha < 1.0,
            "optimizer.alpha",
            "must lie in (0, 1)",
        )?;
        ensure(self.optimizer.i_max >= 1, "optimizer.i_max", "must be at least 1")?;
        ensure(self.optimizer.t_max_init_s > 0.0, "optimizer.t_max_init_s", "must be positive")?;
        ensure(self.optimizer.line_search >= 2, "optimizer.line_search", "must be at least 2")?;
        ensure(self.optimizer.lambda0 > 0.0, "optimizer.lambda0", "must be positive")?;
        ensure(self.optimizer.snr_margin_db >= 0.0, "optimizer.snr_margin_db", "must be non-negative")?;
        self.pde.validate()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_is_default_scenario() {
        let sc = Scenario::from_json("  \n ").unwrap();
        assert_eq!(sc.rf.freq_hz, 28.0e9);
        assert_eq!(sc.geometry.users.len(), 3);
        assert_eq!(sc.optimizer.i_max, 35);
    }

    #[test]
    fn paper_default_matches_stated_parameters() {
        let sc = Scenario::paper_default();
        assert_eq!(sc.rf.freq_hz, 28.0e9);
        assert_eq!(sc.rf.bandwidth_hz, 20.0e6);
        assert_eq!(sc.rf.nf_db, 6.0);
        assert_eq!(sc.rf.gamma_thr_db, 10.0);
        assert_eq!(sc.rf.p_t_dbm, 38.0);
        assert_eq!(sc.optimizer.alpha, 0.95);
        assert_eq!(sc.optimizer.i_max, 35);
        assert_eq!(sc.lc.tau_plus_s, 9.0e-3);
        assert_eq!(sc.lc.tau_minus_s, 29.0e-3);
        assert_eq!(sc.channel.beta_db, -61.0);
        assert_eq!(sc.channel.k_f_db, [-100.0, 10.0, 10.0]);
        assert_eq!(sc.channel.blockage_db, -40.0);
        let centers: Vec<[f64; 3]> = sc.geometry.users.iter().map(|u| u.center).collect();
        assert_eq!(centers, vec![[10.0, 2.0, -5.0], [10.0, -5.0, -5.0], [10.0, 5.0, -5.0]]);
    }

    #[test]
    fn out_of_range_alpha_reports_key_path() {
        let err = Scenario::from_json(r#"{"optimizer": {"alpha": 1.5}}"#).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("optimizer.alpha"), "message was: {msg}");
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = Scenario::from_json(r#"{"rf": {"frequency": 1.0}}"#).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("frequency"), "message was: {msg}");
    }

    #[test]
    fn roundtrips_through_json() {
        let sc = Scenario::paper_default();
        let text = serde_json::to_string_pretty(&sc).unwrap();
        let back = Scenario::from_json(&text).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), serde_json::to_string(&sc).unwrap());
    }
}
