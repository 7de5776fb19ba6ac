//! Sign-flip bootstrap test for angular symmetry.
//!
//! Under angular symmetry about its median a distribution gives the median
//! depth one half; the statistic is the maximal sample depth `delta_n`.
//! Bootstrap samples are built by flipping the signs of the centred
//! observations `y_i = x_i - m`, which produces a sample that is centrally
//! symmetric about `m` by construction, and the test rejects when
//! `delta_n` is small compared with the bootstrap maxima.
//!
//! Depth is translation invariant, so the bootstrap samples are kept in
//! centred form `z_i y_i`. That makes the sign flip an exact involution in
//! floating point.

mod dist;
mod study;

pub use dist::{sample_distribution, Distribution, KNOWN_NAMES};
pub use study::{
    replication_p_value, rows_from_p_values, run_study, study_cells, StudyCell, StudyConfig,
    StudyRow,
};

use alloc::vec::Vec;
use rand::Rng;

use crate::error::{Error, Result};
use crate::median::{tukey_median_with, MedianSettings};
use crate::point::{Dataset, Fraction, Point};
use crate::rng::{stream, TAG_SIGNS};

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryTestResult {
    pub median: Point,
    pub delta_n: Fraction,
    pub bootstrap_deltas: Vec<Fraction>,
    pub p_value: f64,
    pub alpha: f64,
    pub reject: bool,
}

impl SymmetryTestResult {
    /// Assembles the decision from the statistic and its bootstrap replicates.
    pub fn from_deltas(median: Point, delta_n: Fraction, bootstrap_deltas: Vec<Fraction>, alpha: f64) -> Self {
        let p_value = p_value(delta_n, &bootstrap_deltas);
        SymmetryTestResult {
            median,
            delta_n,
            bootstrap_deltas,
            p_value,
            alpha,
            reject: p_value < alpha,
        }
    }

    pub fn bootstrap_count(&self) -> usize {
        self.bootstrap_deltas.len()
    }
}

/// `#{delta* <= delta_n} / M`.
pub fn p_value(delta_n: Fraction, bootstrap_deltas: &[Fraction]) -> f64 {
    let hits = bootstrap_deltas.iter().filter(|&&d| d <= delta_n).count();
    hits as f64 / bootstrap_deltas.len() as f64
}

/// Argument checks shared by the test entry points.
pub fn check_test_args(data: &Dataset, m: usize, alpha: f64) -> Result<()> {
    if data.len() < 2 {
        return Err(Error::InsufficientData { needed: 2, found: data.len() });
    }
    if m == 0 {
        return Err(Error::InvalidParameter("bootstrap count must be at least 1"));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter("alpha must lie in (0, 1)"));
    }
    Ok(())
}

/// Bootstrap test with `m` sign-flip replicates. Deterministic in `seed`.
pub fn angular_symmetry_test(data: &Dataset, m: usize, alpha: f64, seed: u64) -> Result<SymmetryTestResult> {
    angular_symmetry_test_with(data, m, alpha, seed, &MedianSettings::default())
}

pub fn angular_symmetry_test_with(
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
        .map(|k| {
            let signs = sign_vector(seed, k, data.len());
            bootstrap_delta(&centred, &signs, seed, settings)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymmetryTestResult::from_deltas(med.point, med.depth.fraction(), deltas, alpha))
}

/// Same as [`angular_symmetry_test_with`] with caller-supplied sign vectors,
/// one per replicate.
pub fn angular_symmetry_test_with_signs(
    data: &Dataset,
    signs: &[Vec<bool>],
    alpha: f64,
    seed: u64,
    settings: &MedianSettings,
) -> Result<SymmetryTestResult> {
    check_test_args(data, signs.len(), alpha)?;
    let med = tukey_median_with(data, seed, settings)?;
    let centred = center(data, med.point.as_slice());
    let deltas = signs
        .iter()
        .map(|s| bootstrap_delta(&centred, s, seed, settings))
        .collect::<Result<Vec<_>>>()?;
    Ok(SymmetryTestResult::from_deltas(med.point, med.depth.fraction(), deltas, alpha))
}

/// Signs of the `k`-th replicate; `true` flips the observation.
pub fn sign_vector(seed: u64, k: u64, n: usize) -> Vec<bool> {
    let mut rng = stream(seed, TAG_SIGNS, k);
    (0..n).map(|_| rng.random::<bool>()).collect()
}

/// `data - m`, row by row.
pub fn center(data: &Dataset, m: &[f64]) -> Dataset {
    data.map_rows(data.dim(), |row, out| {
        out.iter_mut().zip(row.iter().zip(m)).for_each(|(o, (a, b))| *o = a - b);
    })
    .expect("centring preserves shape and finiteness")
}

/// Negates the rows marked in `signs`.
pub fn sign_flip(centred: &Dataset, signs: &[bool]) -> Dataset {
    assert_eq!(signs.len(), centred.len(), "one sign per observation");
    let mut i = 0;
    centred
        .map_rows(centred.dim(), |row, out| {
            let flip = signs[i];
            i += 1;
            out.iter_mut().zip(row).for_each(|(o, a)| *o = if flip { -a } else { *a });
        })
        .expect("sign flip preserves shape")
}

/// Maximal depth of one bootstrap sample, searched with the same seed and
/// settings as the original median.
pub fn bootstrap_delta(centred: &Dataset, signs: &[bool], seed: u64, settings: &MedianSettings) -> Result<Fraction> {
    let sample = sign_flip(centred, signs);
    Ok(tukey_median_with(&sample, seed, settings)?.max_depth())
}
