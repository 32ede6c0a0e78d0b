//! Glue from a [`Scenario`] to channels, SNR kernels, and optimizer runs.

use crate::channel::{assemble_scenario_channels, dbm_to_watts, scenario_arrays, scenario_wavenumber, ChannelSet};
use crate::error::Result;
use crate::lc::LCCellModel;
use crate::optimizer::{build_snr_kernel, mf_beamformer, OptimizerConfig, SnrKernel};
use crate::scenario::Scenario;
use num_complex::Complex64;

/// Everything derived from one scenario realization.
pub struct ScenarioArtifacts {
    pub channels: ChannelSet,
    pub kernels: Vec<SnrKernel>,
    pub beamformer: Vec<Complex64>,
    pub cell: LCCellModel,
    /// SNR threshold, linear.
    pub gamma_thr: f64,
}

/// Assemble channels for `seed`, build the matched-filter beamformer, and
/// derive one SNR kernel per user.
pub fn prepare(scenario: &Scenario, seed: u64) -> Result<ScenarioArtifacts> {
    scenario.validate()?;
    let channels = assemble_scenario_channels(scenario, seed)?;
    let (bs, ris) = scenario_arrays(scenario)?;
    let q = mf_beamformer(&bs, ris.center, scenario_wavenumber(scenario), dbm_to_watts(scenario.rf.p_t_dbm))?;
    let kernels = scenario
        .geometry
        .users
        .iter()
        .enumerate()
        .map(|(k, _)| build_snr_kernel(&channels.h_r[k], &channels.h_d[k], &channels.h_t, &q, channels.sigma2))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScenarioArtifacts {
        kernels,
        beamformer: q,
        cell: scenario.lc.cell(),
        gamma_thr: 10f64.powf(scenario.rf.gamma_thr_db / 10.0),
        channels,
    })
}

/// Optimizer knobs of a scenario, in linear units.
pub fn optimizer_config(scenario: &Scenario) -> OptimizerConfig {
    OptimizerConfig {
        cell: scenario.lc.cell(),
        gamma_thr: 10f64.powf(scenario.rf.gamma_thr_db / 10.0),
        snr_margin_db: scenario.optimizer.snr_margin_db,
        alpha: scenario.optimizer.alpha,
        i_max: scenario.optimizer.i_max,
        t_max_init: scenario.optimizer.t_max_init_s,
        delta_t: scenario.optimizer.delta_t_s,
        line_search: scenario.optimizer.line_search,
        lambda0: scenario.optimizer.lambda0,
    }
}

/// Default trace sampling step: a twentieth of the faster cell constant.
pub fn default_trace_dt(cell: &LCCellModel) -> f64 {
    cell.tau_plus.min(cell.tau_minus) / 20.0
}
