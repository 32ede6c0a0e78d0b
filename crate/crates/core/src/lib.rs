//! Simulation and optimization toolkit for liquid-crystal reconfigurable
//! intelligent surfaces (LC-RIS).
//!
//! The crate models the transient phase response of nematic LC phase-shifter
//! cells, validates the closed-form exponential response model against a 1-D
//! director PDE solved by finite differences, and implements a
//! transition-aware multi-user phase-shift optimizer together with a TDMA
//! evaluation harness (SNR traces, threshold-crossing times, differential
//! phase histograms, and effective-rate sweeps).
//!
//! Module map:
//! - [`geometry`]: array layouts, near-field steering vectors, LOS channels
//! - [`channel`]: path loss, noise, Rician synthesis, scenario channel assembly
//! - [`lc`]: single-cell exponential transient model and transition times
//! - [`pde`]: 1-D director dynamics solver and the analytic machinery that
//!   justifies the single-exponential cell model
//! - [`optimizer`]: matched-filter beamformer, min-area SNR, per-element
//!   Lagrangian coordinate descent
//! - [`tdma`]: slot-based reconfiguration traces and throughput metrics
//! - [`scenario`]: JSON-configurable experiment description
//! - [`pipeline`]: glue from a scenario to channels, kernels, and reports

pub mod channel;
pub mod error;
pub mod geometry;
pub mod lc;
pub mod optimizer;
pub mod pde;
pub mod pipeline;
pub mod scenario;
pub mod seed;
pub mod tdma;

pub use channel::{assemble_scenario_channels, noise_power, path_gain, rician_channel, ChannelSet, PathLossParams};
pub use error::{Error, Result};
pub use geometry::{build_upa, los_channel, steering_vector, ArrayGeometry, CMatrix, Plane, Position};
pub use lc::{
    config_transition_time, drive_trajectory, phase_at, transition_time, DriveMode, DriveTrajectory, LCCellModel,
    PhaseConfig, VoltageLut,
};
pub use optimizer::{
    assign_points, benchmark_optimize, build_snr_kernel, coordinate_cost, focusing_phases, line_search_element,
    mf_beamformer, min_area_snr, optimize, CoordinateCtx, OptimizeReport, OptimizerConfig, SnrKernel, UserArea,
};
pub use pde::{
    analytic_decay, analytic_rise, effective_length, fit_single_exponential, kappa_of_field, omega_of_time,
    prop1_series, solve_director_pde, DirectorField, ExpFit, FieldProfile, MaterialParams, PhaseHistory,
    SolveOptions,
};
pub use scenario::Scenario;
pub use tdma::{
    delta_histogram, effective_rate, enumerate_orders, rate_sweep, simulate_cycle, time_to_threshold, Histogram,
    RateResult, Schedule, TdmaTrace,
};

/// Speed of light in vacuum (m/s).
pub const C0: f64 = 299_792_458.0;
