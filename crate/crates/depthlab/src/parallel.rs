//! Rayon versions of the core experiment loops.
//!
//! Each runner splits work along the same independent random streams as its
//! sequential counterpart in `depthlab-core` and collects results in index
//! order, so outputs are identical to the sequential ones for any pool size.
//! Runners use the current rayon pool; wrap calls in [`with_threads`] to pin
//! the thread count.

use rayon::prelude::*;

use depthlab_core::depth::{depth_2d_exact, GridSpec};
use depthlab_core::infdim::{decay_row, sequence_draw, summarize, DecayTable, SequenceModel};
use depthlab_core::median::{tukey_median_with, MedianSettings};
use depthlab_core::symmetry::{
    bootstrap_delta, center, check_test_args, replication_p_value, rows_from_p_values, sign_vector,
    study_cells, StudyConfig, StudyRow, SymmetryTestResult,
};
use depthlab_core::{Dataset, Error, Result};

/// Runs `f` inside a fresh pool of `threads` workers.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Parallel [`depthlab_core::symmetry::run_study`] over all (cell, replication) pairs.
pub fn run_study(config: &StudyConfig) -> Result<Vec<StudyRow>> {
    config.validate()?;
    let cells = study_cells(config);
    let tasks: Vec<(usize, usize)> = (0..cells.len())
        .flat_map(|c| (0..config.replications).map(move |r| (c, r)))
        .collect();
    let p_values = tasks
        .par_iter()
        .map(|&(c, r)| replication_p_value(config, &cells[c], r))
        .collect::<Result<Vec<f64>>>()?;
    Ok(cells
        .iter()
        .zip(p_values.chunks(config.replications))
        .flat_map(|(cell, ps)| rows_from_p_values(config, cell, ps))
        .collect())
}

/// Parallel [`depthlab_core::symmetry::angular_symmetry_test_with`].
pub fn angular_symmetry_test(
    data: &Dataset,
    m: usize,
    alpha: f64,
    seed: u64,
    settings: &MedianSettings,
) -> Result<SymmetryTestResult> {
    check_test_args(data, m, alpha)?;
    let med = tukey_median_with(data, seed, settings)?;
    let centred = center(data, med.point.as_slice());
    let deltas = (0..m as u64)
        .into_par_iter()
        .map(|k| bootstrap_delta(&centred, &sign_vector(seed, k, data.len()), seed, settings))
        .collect::<Result<Vec<_>>>()?;
    Ok(SymmetryTestResult::from_deltas(med.point, med.depth.fraction(), deltas, alpha))
}

/// Parallel [`depthlab_core::infdim::decay_experiment`].
pub fn decay_experiment(model: &SequenceModel, n_draws: usize, d_grid: &[usize], seed: u64) -> Result<DecayTable> {
    if d_grid.is_empty() || d_grid[0] == 0 || d_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid("truncation grid must be positive and strictly increasing"));
    }
    if n_draws == 0 {
        return Err(Error::InvalidParameter("need at least one draw"));
    }
    let d_max = d_grid[d_grid.len() - 1];
    let bounds = (0..n_draws as u64)
        .into_par_iter()
        .map(|k| decay_row(model, &sequence_draw(model, d_max, seed, k)?, d_grid))
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(d_grid, bounds))
}

/// Parallel [`depthlab_core::depth::depth_grid`].
pub fn depth_grid(data: &Dataset, grid: &GridSpec) -> Result<Vec<f64>> {
    grid.validate()?;
    (0..grid.len())
        .into_par_iter()
        .map(|k| depth_2d_exact(data, &grid.node(k)).map(|r| r.value()))
        .collect()
}
