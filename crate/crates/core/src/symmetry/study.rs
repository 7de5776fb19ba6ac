//! Rejection-rate study over a grid of designs.
//!
//! Each `(distribution, d, n)` cell and replication owns its own random
//! streams, so any subset of replications can be computed in any order (or
//! in parallel) and the table is unchanged. One p-value is computed per
//! replication and compared against every level in the config.

use alloc::vec::Vec;

use super::dist::{sample_with, Distribution};
use super::{bootstrap_delta, center, check_test_args, p_value, sign_vector};
use crate::error::{Error, Result};
use crate::median::{tukey_median_with, MedianSettings};
use crate::rng::{derive_seed, mix64, substream, TAG_STUDY_DATA, TAG_STUDY_TEST};

#[derive(Debug, Clone, PartialEq)]
pub struct StudyConfig {
    pub distributions: Vec<Distribution>,
    pub dims: Vec<usize>,
    pub sizes: Vec<usize>,
    pub alphas: Vec<f64>,
    /// Bootstrap replicates per test (`M`).
    pub bootstrap: usize,
    /// Monte Carlo replications per cell (`R`).
    pub replications: usize,
    pub seed: u64,
    pub median: MedianSettings,
}

impl StudyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.distributions.is_empty() || self.dims.is_empty() || self.sizes.is_empty() || self.alphas.is_empty() {
            return Err(Error::InvalidParameter("study lists must be nonempty"));
        }
        if self.dims.contains(&0) {
            return Err(Error::InvalidParameter("dimensions must be positive"));
        }
        if self.sizes.iter().any(|&n| n < 2) {
            return Err(Error::InvalidParameter("sample sizes must be at least 2"));
        }
        if self.alphas.iter().any(|&a| !(a > 0.0 && a < 1.0)) {
            return Err(Error::InvalidParameter("alpha must lie in (0, 1)"));
        }
        if self.bootstrap == 0 || self.replications == 0 {
            return Err(Error::InvalidParameter("bootstrap and replication counts must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StudyCell {
    pub dist: Distribution,
    pub d: usize,
    pub n: usize,
}

impl StudyCell {
    fn key(&self) -> u64 {
        mix64(mix64(self.dist.key() ^ mix64(self.d as u64)) ^ self.n as u64)
    }
}

/// One output row: the rejection rate of a cell at one level.
#[derive(Debug, Clone, PartialEq)]
pub struct StudyRow {
    pub dist: Distribution,
    pub d: usize,
    pub n: usize,
    pub alpha: f64,
    pub rejections: usize,
    pub replications: usize,
    pub bootstrap: usize,
    pub seed: u64,
}

impl StudyRow {
    pub fn rate(&self) -> f64 {
        self.rejections as f64 / self.replications as f64
    }
}

/// Cells in table order: distribution, then dimension, then size.
pub fn study_cells(config: &StudyConfig) -> Vec<StudyCell> {
    let mut cells = Vec::new();
    for &dist in &config.distributions {
        for &d in &config.dims {
            for &n in &config.sizes {
                cells.push(StudyCell { dist, d, n });
            }
        }
    }
    cells
}

/// Data and test seed of replication `rep` of `cell`.
fn replication_streams(config: &StudyConfig, cell: &StudyCell, rep: usize) -> (crate::rng::StreamRng, u64) {
    let key = cell.key();
    let data_rng = substream(config.seed, TAG_STUDY_DATA, key, rep as u64);
    let test_seed = derive_seed(derive_seed(config.seed, TAG_STUDY_TEST, key), TAG_STUDY_TEST, rep as u64);
    (data_rng, test_seed)
}

/// p-value of replication `rep` of `cell`; the unit of work of a study.
pub fn replication_p_value(config: &StudyConfig, cell: &StudyCell, rep: usize) -> Result<f64> {
    let (mut rng, test_seed) = replication_streams(config, cell, rep);
    let data = sample_with(cell.dist, cell.d, cell.n, &mut rng)?;
    check_test_args(&data, config.bootstrap, config.alphas[0])?;
    let med = tukey_median_with(&data, test_seed, &config.median)?;
    let centred = center(&data, med.point.as_slice());
    let deltas = (0..config.bootstrap as u64)
        .map(|k| bootstrap_delta(&centred, &sign_vector(test_seed, k, cell.n), test_seed, &config.median))
        .collect::<Result<Vec<_>>>()?;
    Ok(p_value(med.depth.fraction(), &deltas))
}

/// Rows of one cell from its replication p-values, one row per level.
pub fn rows_from_p_values(config: &StudyConfig, cell: &StudyCell, p_values: &[f64]) -> Vec<StudyRow> {
    config
        .alphas
        .iter()
        .map(|&alpha| StudyRow {
            dist: cell.dist,
            d: cell.d,
            n: cell.n,
            alpha,
            rejections: p_values.iter().filter(|&&p| p < alpha).count(),
            replications: p_values.len(),
            bootstrap: config.bootstrap,
            seed: config.seed,
        })
        .collect()
}

/// Sequential study runner.
pub fn run_study(config: &StudyConfig) -> Result<Vec<StudyRow>> {
    config.validate()?;
    let mut rows = Vec::new();
    for cell in study_cells(config) {
        let p_values = (0..config.replications)
            .map(|rep| replication_p_value(config, &cell, rep))
            .collect::<Result<Vec<_>>>()?;
        rows.extend(rows_from_p_values(config, &cell, &p_values));
    }
    Ok(rows)
}
