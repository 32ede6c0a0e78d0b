//! Path loss, noise, Rician fading, and scenario channel assembly.
//!
//! All configuration values are carried in dB/dBm; conversion to linear
//! watts/amplitudes happens here, at the boundary, and everything downstream
//! works in linear units.

use crate::error::{Error, Result};
use crate::geometry::{los_channel, steering_vector, ArrayGeometry, CMatrix};
use crate::scenario::Scenario;
use crate::seed::substream;
use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

/// Log-distance path-loss parameters.
#[derive(Debug, Clone, Copy)]
pub struct PathLossParams {
    /// Gain at the reference distance, dB.
    pub beta_db: f64,
    /// Reference distance, meters.
    pub d0: f64,
    /// Path-loss exponent.
    pub eta: f64,
    /// Extra penetration loss applied to the blocked direct link, dB.
    pub blockage_db: f64,
}

pub fn db_to_amplitude(db: f64) -> f64 {
    10f64.powf(db / 20.0)
}

pub fn db_to_power(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

/// Linear amplitude gain of a link of length `d`:
/// `10^((beta_db - 10 eta log10(d/d0)) / 20)`.
pub fn path_gain(d: f64, p: &PathLossParams) -> Result<f64> {
    if !(d > 0.0) {
        return Err(Error::invalid(format!("link distance must be positive, got {d}")));
    }
    Ok(db_to_amplitude(p.beta_db - 10.0 * p.eta * (d / p.d0).log10()))
}

/// Noise power in watts: `sigma^2 = W * N0 * Nf`.
pub fn noise_power(bandwidth_hz: f64, n0_dbm_per_hz: f64, nf_db: f64) -> f64 {
    dbm_to_watts(n0_dbm_per_hz + 10.0 * bandwidth_hz.log10() + nf_db)
}

/// K-factor values at or beyond this magnitude (dB) are treated as the
/// pure-LOS / pure-NLOS limits exactly, keeping the LOS identity bit-exact.
pub const K_FACTOR_SENTINEL_DB: f64 = 300.0;

fn standard_normal_pair(rng: &mut impl Rng) -> (f64, f64) {
    // Box-Muller; u1 kept away from zero so the log is finite.
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let th = 2.0 * std::f64::consts::PI * u2;
    (r * th.cos(), r * th.sin())
}

/// Rician synthesis on a flat slice of LOS entries. The scattered part is
/// i.i.d. circular Gaussian, scaled per entry so the average power of each
/// output entry equals the power of its LOS entry.
pub fn rician_entries(los: &[Complex64], k_f_db: f64, rng: &mut impl Rng) -> Vec<Complex64> {
    if k_f_db >= K_FACTOR_SENTINEL_DB {
        return los.to_vec();
    }
    let (w_los, w_nlos) = if k_f_db <= -K_FACTOR_SENTINEL_DB {
        (0.0, 1.0)
    } else {
        let kf = db_to_power(k_f_db);
        ((kf / (kf + 1.0)).sqrt(), (1.0 / (kf + 1.0)).sqrt())
    };
    los.iter()
        .map(|&e| {
            let (gx, gy) = standard_normal_pair(rng);
            let scatter = Complex64::new(gx, gy) * (e.norm() / std::f64::consts::SQRT_2);
            e * w_los + scatter * w_nlos
        })
        .collect()
}

/// Rician MIMO channel `sqrt(Kf/(Kf+1)) H_los + sqrt(1/(Kf+1)) H_nlos`.
pub fn rician_channel(los: &CMatrix, k_f_db: f64, rng: &mut impl Rng) -> CMatrix {
    CMatrix {
        rows: los.rows,
        cols: los.cols,
        data: rician_entries(&los.data, k_f_db, rng),
    }
}

/// All channels of one scenario realization.
///
/// `h_r[k][i]` is the RIS->point channel (length `N`) for grid point `i` of
/// user `k`; `h_d[k][i]` is the blocked BS->point channel (length `N_t`).
#[derive(Debug, Clone)]
pub struct ChannelSet {
    pub h_t: CMatrix,
    pub h_r: Vec<Vec<Vec<Complex64>>>,
    pub h_d: Vec<Vec<Vec<Complex64>>>,
    pub sigma2: f64,
}

/// Build every channel of the scenario deterministically from its seed.
///
/// Each (user, grid point) pair draws from its own sub-stream, so the result
/// is independent of the parallel schedule.
pub fn assemble_scenario_channels(scenario: &Scenario, seed: u64) -> Result<ChannelSet> {
    let wavelength = crate::C0 / scenario.rf.freq_hz;
    let kappa = 2.0 * std::f64::consts::PI / wavelength;

    let bs = scenario.geometry.bs.build(wavelength)?;
    let ris = scenario.geometry.ris.build(wavelength)?;

    let pl = |eta: f64| PathLossParams {
        beta_db: scenario.channel.beta_db,
        d0: scenario.channel.d0_m,
        eta,
        blockage_db: scenario.channel.blockage_db,
    };
    let [eta_bs_ue, eta_bs_ris, eta_ris_ue] = scenario.channel.eta;
    let [kf_bs_ue, kf_bs_ris, kf_ris_ue] = scenario.channel.k_f_db;

    // BS -> RIS
    let c0_t = path_gain(bs.center.distance(&ris.center), &pl(eta_bs_ris))?;
    let h_t_los = los_channel(&bs, &ris, kappa, c0_t)?;
    let mut rng_t = substream(seed, "bs-ris", 0);
    let h_t = rician_channel(&h_t_los, kf_bs_ris, &mut rng_t);

    let blockage_amp = db_to_amplitude(scenario.channel.blockage_db);

    let mut h_r: Vec<Vec<Vec<Complex64>>> = Vec::with_capacity(scenario.geometry.users.len());
    let mut h_d: Vec<Vec<Vec<Complex64>>> = Vec::with_capacity(scenario.geometry.users.len());
    for (k, user) in scenario.geometry.users.iter().enumerate() {
        let points = user.area().grid_points();
        let n_points = points.len();
        let pairs = points
            .par_iter()
            .enumerate()
            .map(|(i, &u)| -> Result<(Vec<Complex64>, Vec<Complex64>)> {
                // RIS -> point
                let amp_r = path_gain(ris.center.distance(&u), &pl(eta_ris_ue))?;
                let mut los_r = steering_vector(&ris, u, kappa)?;
                for e in &mut los_r {
                    *e *= amp_r;
                }
                let mut rng_r = substream(seed, "ris-ue", (k * n_points + i) as u64);
                let v_r = rician_entries(&los_r, kf_ris_ue, &mut rng_r);

                // BS -> point, behind the blockage
                let amp_d = path_gain(bs.center.distance(&u), &pl(eta_bs_ue))? * blockage_amp;
                let mut los_d = steering_vector(&bs, u, kappa)?;
                for e in &mut los_d {
                    *e *= amp_d;
                }
                let mut rng_d = substream(seed, "bs-ue", (k * n_points + i) as u64);
                let v_d = rician_entries(&los_d, kf_bs_ue, &mut rng_d);
                Ok((v_r, v_d))
            })
            .collect::<Result<Vec<_>>>()?;
        let (r, d): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        h_r.push(r);
        h_d.push(d);
    }

    Ok(ChannelSet {
        h_t,
        h_r,
        h_d,
        sigma2: noise_power(scenario.rf.bandwidth_hz, scenario.rf.n0_dbm_per_hz, scenario.rf.nf_db),
    })
}

/// Convenience: build the scenario's BS and RIS arrays.
pub fn scenario_arrays(scenario: &Scenario) -> Result<(ArrayGeometry, ArrayGeometry)> {
    let wavelength = crate::C0 / scenario.rf.freq_hz;
    Ok((scenario.geometry.bs.build(wavelength)?, scenario.geometry.ris.build(wavelength)?))
}

/// Convenience: wavenumber of the carrier.
pub fn scenario_wavenumber(scenario: &Scenario) -> f64 {
    2.0 * std::f64::consts::PI * scenario.rf.freq_hz / crate::C0
}
