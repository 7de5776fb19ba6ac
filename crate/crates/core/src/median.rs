//! Tukey (half-space) median by candidate search plus seeded refinement.
//!
//! The search is a certified lower bound on the maximal depth: every
//! reported depth is the exact depth of the returned point (or its
//! approximate depth where no exact method applies). Candidates are all
//! data points, the coordinatewise median and the mean; the deepest one is
//! then perturbed with Gaussian steps whose radius shrinks geometrically
//! from the coordinatewise interquartile range, keeping strict improvements.

use alloc::vec::Vec;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::depth::{depth, DepthMethod, DepthResult, DEFAULT_DIRECTIONS};
use crate::error::Result;
use crate::point::{Dataset, Fraction, Point};
use crate::rng::{derive_seed, stream, TAG_DIRECTIONS, TAG_REFINE};

/// Search hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MedianSettings {
    /// Refinement rounds.
    pub rounds: usize,
    /// Per-round radius factor.
    pub shrink: f64,
    /// Direction budget when depth has to be approximated.
    pub n_dirs: usize,
}

impl Default for MedianSettings {
    fn default() -> Self {
        MedianSettings {
            rounds: 200,
            shrink: 0.9,
            n_dirs: DEFAULT_DIRECTIONS,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MedianResult {
    pub point: Point,
    /// Depth of `point`; its value is the sample's maximal depth estimate.
    pub depth: DepthResult,
    pub candidates_evaluated: usize,
}

impl MedianResult {
    pub fn max_depth(&self) -> Fraction {
        self.depth.fraction()
    }
}

/// Tukey median with default settings. Deterministic in `seed`.
pub fn tukey_median(data: &Dataset, seed: u64) -> Result<MedianResult> {
    tukey_median_with(data, seed, &MedianSettings::default())
}

/// Maximal sample depth found by [`tukey_median`].
pub fn max_depth(data: &Dataset, seed: u64) -> Result<Fraction> {
    tukey_median(data, seed).map(|m| m.max_depth())
}

/// The depth method used for a dataset by the median search.
pub fn search_method(data: &Dataset, seed: u64, settings: &MedianSettings) -> DepthMethod {
    DepthMethod::auto(
        data.dim(),
        data.len(),
        settings.n_dirs,
        derive_seed(seed, TAG_DIRECTIONS, 0),
    )
}

pub fn tukey_median_with(data: &Dataset, seed: u64, settings: &MedianSettings) -> Result<MedianResult> {
    let method = search_method(data, seed, settings);
    let dim = data.dim();

    let mut candidates: Vec<Vec<f64>> = data.rows().map(<[f64]>::to_vec).collect();
    candidates.push(coordinatewise_median(data).into_vec());
    candidates.push(mean(data));

    let mut evaluated = 0;
    let mut best: Option<(Vec<f64>, DepthResult)> = None;
    for c in candidates {
        let r = depth(data, &c, method)?;
        evaluated += 1;
        // strict comparison keeps the first deepest candidate
        if best.as_ref().is_none_or(|(_, b)| r.count > b.count) {
            best = Some((c, r));
        }
    }
    let (mut best_point, mut best_depth) = best.expect("at least one candidate");

    let scale = refinement_scale(data);
    if scale.iter().any(|&s| s > 0.0) && best_depth.count < data.len() {
        let mut rng = stream(seed, TAG_REFINE, 0);
        let mut radius = 1.0;
        let mut trial = alloc::vec![0.0; dim];
        for _ in 0..settings.rounds {
            for ((t, b), s) in trial.iter_mut().zip(&best_point).zip(&scale) {
                let g: f64 = rng.sample(StandardNormal);
                *t = b + radius * s * g;
            }
            radius *= settings.shrink;
            let r = depth(data, &trial, method)?;
            evaluated += 1;
            if r.count > best_depth.count {
                best_point.copy_from_slice(&trial);
                best_depth = r;
            }
        }
    }

    Ok(MedianResult {
        point: Point::from_vec_unchecked(best_point),
        depth: best_depth,
        candidates_evaluated: evaluated,
    })
}

/// Coordinatewise median (midpoint of the two central order statistics for even `n`).
pub fn coordinatewise_median(data: &Dataset) -> Point {
    let coords = (0..data.dim())
        .map(|j| {
            let mut col = column(data, j);
            let n = col.len();
            col.sort_by(f64::total_cmp);
            if n % 2 == 1 {
                col[n / 2]
            } else {
                0.5 * (col[n / 2 - 1] + col[n / 2])
            }
        })
        .collect();
    Point::from_vec_unchecked(coords)
}

fn mean(data: &Dataset) -> Vec<f64> {
    let n = data.len() as f64;
    let mut m = alloc::vec![0.0; data.dim()];
    for row in data.rows() {
        m.iter_mut().zip(row).for_each(|(a, b)| *a += b);
    }
    m.iter_mut().for_each(|a| *a /= n);
    m
}

fn column(data: &Dataset, j: usize) -> Vec<f64> {
    data.rows().map(|r| r[j]).collect()
}

/// Linear-interpolation quantile of sorted values.
fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Coordinatewise interquartile range.
pub fn coordinatewise_iqr(data: &Dataset) -> Vec<f64> {
    (0..data.dim())
        .map(|j| {
            let mut col = column(data, j);
            col.sort_by(f64::total_cmp);
            quantile_sorted(&col, 0.75) - quantile_sorted(&col, 0.25)
        })
        .collect()
}

/// Initial per-coordinate step: the IQR, or half the range where the IQR
/// collapses (heavily tied coordinates).
fn refinement_scale(data: &Dataset) -> Vec<f64> {
    coordinatewise_iqr(data)
        .into_iter()
        .enumerate()
        .map(|(j, iqr)| {
            if iqr > 0.0 {
                return iqr;
            }
            let (lo, hi) = data
                .rows()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r[j]), hi.max(r[j])));
            0.5 * (hi - lo)
        })
        .collect()
}
