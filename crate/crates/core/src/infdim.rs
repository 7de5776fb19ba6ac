//! Chebyshev depth bounds for Gaussian sequences in `l_2`.
//!
//! For independent centred coordinates with variances `sigma_i^2`, any
//! linear functional `sum a_i t_i` gives, by Chebyshev's inequality,
//! `depth(x) <= sum a_i^2 sigma_i^2 / (sum a_i x_i)^2`. Over the first `d`
//! coordinates the right side is minimized at `a_i = x_i / sigma_i^2`,
//! where it equals `1 / sum x_i^2 / sigma_i^2`. For draws from the model
//! that sum grows like `d`, so the bound, and the depth, go to zero.

use alloc::vec::Vec;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::point::Dataset;
use crate::rng::{stream, TAG_ALPHA, TAG_SEQUENCE};

/// Variance sequence `sigma_i^2`, `i = 1, 2, ...`.
#[derive(Debug, Clone, PartialEq)]
pub enum SigmaProfile {
    /// `sigma_i^2 = i^-2`.
    InverseSquare,
    /// `sigma_i^2 = 2^-i`.
    Geometric,
    /// Explicit finite list of variances.
    Custom(Vec<f64>),
}

/// Independent centred Gaussian coordinates with variances from a profile.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceModel {
    profile: SigmaProfile,
}

impl SequenceModel {
    pub fn new(profile: SigmaProfile) -> Result<Self> {
        if let SigmaProfile::Custom(v) = &profile {
            if v.is_empty() {
                return Err(Error::Model("custom variance list is empty"));
            }
            if v.iter().any(|s| !(*s > 0.0 && s.is_finite())) {
                return Err(Error::Model("variances must be positive and finite"));
            }
        }
        Ok(SequenceModel { profile })
    }

    pub fn inverse_square() -> Self {
        SequenceModel { profile: SigmaProfile::InverseSquare }
    }

    pub fn profile(&self) -> &SigmaProfile {
        &self.profile
    }

    /// `sigma_i^2` for 1-based `i`.
    pub fn variance(&self, i: usize) -> Result<f64> {
        let v = match &self.profile {
            SigmaProfile::InverseSquare => 1.0 / (i as f64 * i as f64),
            SigmaProfile::Geometric => 2f64.powi(-(i as i32)),
            SigmaProfile::Custom(v) => *v.get(i - 1).ok_or(Error::Model("index beyond the custom variance list"))?,
        };
        if v > 0.0 && v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Model("variance underflows to zero"))
        }
    }

    pub fn variances(&self, d: usize) -> Result<Vec<f64>> {
        (1..=d).map(|i| self.variance(i)).collect()
    }

    /// First `d` coordinates of one draw.
    pub fn draw<R: Rng>(&self, d: usize, rng: &mut R) -> Result<Vec<f64>> {
        let var = self.variances(d)?;
        Ok(var.iter().map(|v| v.sqrt() * rng.sample::<f64, _>(StandardNormal)).collect())
    }

    /// `n` draws of the first `d` coordinates, deterministic in `seed`.
    pub fn sample(&self, d: usize, n: usize, seed: u64) -> Result<Dataset> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let mut rng = stream(seed, TAG_SEQUENCE, u64::MAX);
        let mut coords = Vec::with_capacity(n * d);
        for _ in 0..n {
            coords.extend(self.draw(d, &mut rng)?);
        }
        Dataset::from_flat(d, coords)
    }
}

/// The optimized Chebyshev bound, before and after clipping to `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepthBound {
    pub value: f64,
    /// `1 / sum x_i^2 / sigma_i^2`; infinite when the sum is zero.
    pub unclipped: f64,
    pub clipped: bool,
}

impl DepthBound {
    fn from_energy(energy: f64) -> Self {
        let unclipped = if energy > 0.0 { 1.0 / energy } else { f64::INFINITY };
        DepthBound {
            value: unclipped.min(1.0),
            unclipped,
            clipped: unclipped > 1.0,
        }
    }
}

fn check_truncation(x: &[f64], d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameter("truncation must be at least 1"));
    }
    if x.len() < d {
        return Err(Error::DimensionMismatch { expected: d, found: x.len() });
    }
    if let Some(i) = x[..d].iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    Ok(())
}

/// `sum_{i <= d} x_i^2 / sigma_i^2`.
pub fn energy(model: &SequenceModel, x: &[f64], d: usize) -> Result<f64> {
    check_truncation(x, d)?;
    let var = model.variances(d)?;
    Ok(x[..d].iter().zip(&var).map(|(xi, v)| xi * xi / v).sum())
}

/// `min(1, 1 / sum_{i <= d} x_i^2 / sigma_i^2)`; 1 when `x` vanishes on the
/// first `d` coordinates.
pub fn depth_upper_bound(model: &SequenceModel, x: &[f64], d: usize) -> Result<DepthBound> {
    energy(model, x, d).map(DepthBound::from_energy)
}

/// `sum a_i^2 sigma_i^2 / (sum a_i x_i)^2` over the first `alpha.len()` coordinates.
pub fn chebyshev_ratio(model: &SequenceModel, x: &[f64], alpha: &[f64]) -> Result<f64> {
    let d = alpha.len();
    check_truncation(x, d)?;
    let var = model.variances(d)?;
    let num: f64 = alpha.iter().zip(&var).map(|(a, v)| a * a * v).sum();
    let den: f64 = alpha.iter().zip(x).map(|(a, xi)| a * xi).sum();
    Ok(num / (den * den))
}

/// `a_i = x_i / sigma_i^2`.
pub fn optimal_alpha(model: &SequenceModel, x: &[f64], d: usize) -> Result<Vec<f64>> {
    check_truncation(x, d)?;
    let var = model.variances(d)?;
    Ok(x[..d].iter().zip(&var).map(|(xi, v)| xi / v).collect())
}

/// Checks that `n_random` seeded Gaussian coefficient vectors all give a
/// Chebyshev ratio at least the closed-form bound (relative slack `1e-10`).
/// Draws with `sum a_i x_i = 0` are redrawn.
pub fn verify_optimal_alpha(model: &SequenceModel, x: &[f64], d: usize, n_random: usize, seed: u64) -> Result<bool> {
    if n_random == 0 {
        return Err(Error::InvalidParameter("need at least one random coefficient vector"));
    }
    let bound = depth_upper_bound(model, x, d)?;
    if bound.unclipped.is_infinite() {
        return Err(Error::Domain("x vanishes on the truncation; every ratio is undefined"));
    }
    let mut rng = stream(seed, TAG_ALPHA, 0);
    let mut alpha = alloc::vec![0.0; d];
    for _ in 0..n_random {
        let ratio = loop {
            alpha.iter_mut().for_each(|a| *a = rng.sample(StandardNormal));
            let r = chebyshev_ratio(model, x, &alpha)?;
            if r.is_finite() {
                break r;
            }
        };
        if ratio < bound.unclipped * (1.0 - 1e-10) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayTable {
    pub d_grid: Vec<usize>,
    /// `bounds[draw][k]` is the bound of draw `draw` truncated at `d_grid[k]`.
    pub bounds: Vec<Vec<DepthBound>>,
    pub median: Vec<f64>,
    pub max: Vec<f64>,
}

/// Draw `index` of the decay experiment, truncated at `d`.
pub fn sequence_draw(model: &SequenceModel, d: usize, seed: u64, index: u64) -> Result<Vec<f64>> {
    model.draw(d, &mut stream(seed, TAG_SEQUENCE, index))
}

/// Bounds of one draw along `d_grid` (increasing).
pub fn decay_row(model: &SequenceModel, x: &[f64], d_grid: &[usize]) -> Result<Vec<DepthBound>> {
    d_grid.iter().map(|&d| depth_upper_bound(model, x, d)).collect()
}

fn check_d_grid(d_grid: &[usize]) -> Result<()> {
    if d_grid.is_empty() || d_grid[0] == 0 || d_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid("truncation grid must be positive and strictly increasing"));
    }
    Ok(())
}

/// Per-draw bounds on `d_grid` with per-column median and maximum.
pub fn decay_experiment(model: &SequenceModel, n_draws: usize, d_grid: &[usize], seed: u64) -> Result<DecayTable> {
    check_d_grid(d_grid)?;
    if n_draws == 0 {
        return Err(Error::InvalidParameter("need at least one draw"));
    }
    let d_max = *d_grid.last().expect("nonempty grid");
    let bounds = (0..n_draws as u64)
        .map(|k| decay_row(model, &sequence_draw(model, d_max, seed, k)?, d_grid))
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(d_grid, bounds))
}

/// Assembles a table from per-draw rows.
pub fn summarize(d_grid: &[usize], bounds: Vec<Vec<DepthBound>>) -> DecayTable {
    let mut median = Vec::with_capacity(d_grid.len());
    let mut max = Vec::with_capacity(d_grid.len());
    for k in 0..d_grid.len() {
        let mut col: Vec<f64> = bounds.iter().map(|row| row[k].value).collect();
        col.sort_by(f64::total_cmp);
        let m = col.len();
        median.push(if m % 2 == 1 { col[m / 2] } else { 0.5 * (col[m / 2 - 1] + col[m / 2]) });
        max.push(col[m - 1]);
    }
    DecayTable { d_grid: d_grid.to_vec(), bounds, median, max }
}
