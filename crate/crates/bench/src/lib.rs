//! Shared scenario builders for the benchmarks.

use lcris_core::scenario::Scenario;

/// Scenario scaled to `rows x cols` RIS elements with a permissive SNR
/// threshold, so every size stays feasible and benchmark runs compare
/// identical work per element.
pub fn sized_scenario(rows: usize, cols: usize) -> Scenario {
    let mut sc = Scenario::paper_default();
    sc.geometry.ris.rows = rows;
    sc.geometry.ris.cols = cols;
    sc.rf.gamma_thr_db = -20.0;
    sc.optimizer.i_max = 5;
    sc
}
