//! Product-form `l_p`-symmetric models.
//!
//! For `0 < p < inf` the density is `C exp(-||x||_p^p)` with
//! `C = (p / (2 Gamma(1/p)))^d`, so coordinates are i.i.d. generalized
//! Gaussian (exponential power) variables. For `p = inf` the model is the
//! uniform distribution on `[-1, 1]^d`. Both are `l_p`-symmetric with a
//! non-increasing radial profile, which is all the population depth
//! identities below rely on.

use alloc::vec::Vec;
use core::fmt;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;
use rand::Rng;
use rand_distr::{Distribution, Gamma, Uniform};

use crate::error::{Error, Result};
use crate::point::Dataset;
use crate::quadrature::{integrate, integrate_with_breaks};
use crate::rng::{stream, StreamRng, TAG_LP_SAMPLE};
use crate::special::{gamma, gamma_q};

/// Absolute tolerance of the oracle quadratures.
pub const ORACLE_TOL: f64 = 1e-9;

/// The index `p` of an `l_p` norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LpExponent {
    Finite(f64),
    Infinity,
}

impl fmt::Display for LpExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpExponent::Finite(p) => write!(f, "{p}"),
            LpExponent::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpSymmetricModel {
    p: LpExponent,
    dim: usize,
}

impl LpSymmetricModel {
    pub fn new(p: LpExponent, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Model("dimension must be at least 1"));
        }
        if let LpExponent::Finite(p) = p {
            if !(p > 0.0 && p.is_finite()) {
                return Err(Error::Model("p must be positive"));
            }
        }
        Ok(LpSymmetricModel { p, dim })
    }

    /// Generalized Gaussian model `exp(-||x||_p^p)`, `0 < p < inf`.
    pub fn generalized_gaussian(p: f64, dim: usize) -> Result<Self> {
        Self::new(LpExponent::Finite(p), dim)
    }

    /// Uniform distribution on `[-1, 1]^dim`.
    pub fn hypercube(dim: usize) -> Result<Self> {
        Self::new(LpExponent::Infinity, dim)
    }

    pub fn p(&self) -> LpExponent {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn finite_p(&self) -> Option<f64> {
        match self.p {
            LpExponent::Finite(p) => Some(p),
            LpExponent::Infinity => None,
        }
    }

    /// `C` in `f(x) = C exp(-||x||_p^p)`, or `2^-d` for the cube.
    pub fn normalizing_constant(&self) -> f64 {
        (self.marginal_constant()).powi(self.dim as i32)
    }

    fn marginal_constant(&self) -> f64 {
        match self.p {
            LpExponent::Finite(p) => p / (2.0 * gamma(1.0 / p)),
            LpExponent::Infinity => 0.5,
        }
    }

    /// Density of one coordinate.
    pub fn marginal_density(&self, t: f64) -> f64 {
        match self.p {
            LpExponent::Finite(p) => self.marginal_constant() * (-t.abs().powf(p)).exp(),
            LpExponent::Infinity => {
                if t.abs() <= 1.0 {
                    0.5
                } else {
                    0.0
                }
            }
        }
    }

    /// Variance of one coordinate: `Gamma(3/p) / Gamma(1/p)`, or `1/3` for the cube.
    pub fn marginal_variance(&self) -> f64 {
        match self.p {
            LpExponent::Finite(p) => gamma(3.0 / p) / gamma(1.0 / p),
            LpExponent::Infinity => 1.0 / 3.0,
        }
    }

    /// Joint density at `x`.
    pub fn density(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(match self.p {
            LpExponent::Finite(p) => {
                let s: f64 = x.iter().map(|t| t.abs().powf(p)).sum();
                self.normalizing_constant() * (-s).exp()
            }
            LpExponent::Infinity => {
                if x.iter().all(|t| t.abs() <= 1.0) {
                    self.normalizing_constant()
                } else {
                    0.0
                }
            }
        })
    }

    /// Draws one coordinate: `sign * G^(1/p)` with `G ~ Gamma(1/p, 1)`, or
    /// uniform on `[-1, 1]`.
    fn draw_coordinate(&self, rng: &mut StreamRng, gamma_dist: Option<&Gamma<f64>>) -> f64 {
        match (self.p, gamma_dist) {
            (LpExponent::Finite(p), Some(g)) => {
                let magnitude = g.sample(rng).powf(1.0 / p);
                if rng.random::<bool>() {
                    magnitude
                } else {
                    -magnitude
                }
            }
            _ => Uniform::new_inclusive(-1.0, 1.0).unwrap().sample(rng),
        }
    }

    /// `n` i.i.d. draws, deterministic in `seed`.
    pub fn sample(&self, n: usize, seed: u64) -> Result<Dataset> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let mut rng = stream(seed, TAG_LP_SAMPLE, 0);
        self.sample_with(n, &mut rng)
    }

    pub(crate) fn sample_with(&self, n: usize, rng: &mut StreamRng) -> Result<Dataset> {
        let gamma_dist = self
            .finite_p()
            .map(|p| Gamma::new(1.0 / p, 1.0).expect("shape 1/p is positive"));
        let coords: Vec<f64> = (0..n * self.dim)
            .map(|_| self.draw_coordinate(rng, gamma_dist.as_ref()))
            .collect();
        Dataset::from_flat(self.dim, coords)
    }

    /// Truncation point `T` with `exp(-T^p) < 1e-12`.
    fn tail_cutoff(&self) -> f64 {
        match self.p {
            LpExponent::Finite(p) => (12.0 * core::f64::consts::LN_10).powf(1.0 / p),
            LpExponent::Infinity => 1.0,
        }
    }

    /// `P(X_1 >= x)` for any real `x`.
    ///
    /// For `x >= 0` this is `Q(1/p, x^p) / 2` with `Q` the regularized upper
    /// incomplete gamma function, or `(1 - x) / 2` clipped for the cube.
    pub fn axis_tail(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 1.0 - self.axis_tail(-x);
        }
        match self.p {
            LpExponent::Finite(p) => 0.5 * gamma_q(1.0 / p, x.powf(p)),
            LpExponent::Infinity => (0.5 * (1.0 - x)).clamp(0.0, 0.5),
        }
    }

    /// Population depth of the axis point `(x, 0, ..., 0)`: the mass of the
    /// half-space `{t_1 >= |x|}`.
    pub fn axis_depth_oracle(&self, x: f64) -> f64 {
        self.axis_tail(x.abs())
    }

    /// The `x >= 0` with `axis_tail(x) = level`, for `0 < level <= 1/2`:
    /// where the axis meets the population depth contour of that level.
    pub fn axis_quantile(&self, level: f64) -> Result<f64> {
        if !(level > 0.0 && level <= 0.5) {
            return Err(Error::Domain("axis quantile needs a level in (0, 1/2]"));
        }
        let (mut lo, mut hi) = (0.0, self.tail_cutoff());
        while self.axis_tail(hi) > level {
            hi *= 2.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.axis_tail(mid) > level {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1e-15 * hi {
                break;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Population depth of the diagonal point `(c, c, 0, ..., 0)` for
    /// `1 <= p < inf`: the mass of `{t_1 + t_2 >= 2c}`.
    ///
    /// Computed as `\int f_1(u) P(X_2 >= 2c - u) du`, the inner probability of
    /// the 2-D integral done in closed form by [`Self::axis_tail`].
    pub fn diagonal_depth_oracle(&self, c: f64) -> Result<f64> {
        if !matches!(self.p, LpExponent::Finite(p) if p >= 1.0) {
            return Err(Error::Domain("diagonal depth oracle needs 1 <= p < inf"));
        }
        if self.dim < 2 {
            return Err(Error::Domain("diagonal depth oracle needs d >= 2"));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Domain("diagonal depth oracle needs c > 0"));
        }
        let cutoff = self.tail_cutoff();
        let value = integrate_with_breaks(
            |u| self.marginal_density(u) * self.axis_tail(2.0 * c - u),
            -cutoff,
            cutoff,
            &[0.0, 2.0 * c],
            ORACLE_TOL,
        );
        Ok(value.clamp(0.0, 1.0))
    }

    /// `P(X_1 + X_2 >= 2x)` for the cube model, by exact area on the square.
    pub fn cube_sum_tail(&self, x: f64) -> Result<f64> {
        if self.p != LpExponent::Infinity {
            return Err(Error::Domain("cube sum tail needs the p = inf model"));
        }
        if self.dim < 2 {
            return Err(Error::Domain("cube sum tail needs d >= 2"));
        }
        Ok(if x >= 1.0 {
            0.0
        } else if x >= 0.0 {
            0.5 * (1.0 - x) * (1.0 - x)
        } else if x > -1.0 {
            1.0 - 0.5 * (1.0 + x) * (1.0 + x)
        } else {
            1.0
        })
    }

    /// Density of `X_1 + X_2` at `s` by convolution quadrature.
    pub fn pair_sum_density(&self, s: f64) -> f64 {
        let cutoff = self.tail_cutoff();
        integrate_with_breaks(
            |u| self.marginal_density(u) * self.marginal_density(s - u),
            -cutoff - s.abs(),
            cutoff + s.abs(),
            &[0.0, s, s - cutoff, s + cutoff, -cutoff, cutoff],
            ORACLE_TOL,
        )
    }
}

/// Largest gap over `grid` between the density of `X_1` and that of
/// `Y = 2^((1-p)/p) (X_1 + X_2)` under the generalized Gaussian model.
///
/// The two laws agree exactly when `p = 2`; in general the gap at `0` is
/// `f_1(0) |1 - 2^((p-2)/p)|`.
pub fn scaled_sum_density_gap(p: f64, grid: &[f64]) -> Result<f64> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::Domain("scaled sum density gap needs 1 <= p < inf"));
    }
    let model = LpSymmetricModel::generalized_gaussian(p, 2)?;
    let alpha = (1.0 - p) / p;
    let inv_scale = 2f64.powf(-alpha);
    Ok(grid
        .iter()
        .map(|&t| {
            let direct = model.marginal_density(t);
            let scaled = inv_scale * model.pair_sum_density(inv_scale * t);
            (direct - scaled).abs()
        })
        .fold(0.0, f64::max))
}

/// `\int_{-T}^{T} f_1(t) dt` for a model, as a normalization sanity check.
pub fn marginal_mass(model: &LpSymmetricModel, tol: f64) -> f64 {
    let cutoff = model.tail_cutoff();
    integrate(|t| model.marginal_density(t), -cutoff, cutoff, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_examples() {
        let m = LpSymmetricModel::generalized_gaussian(2.0, 1).unwrap();
        let inv_sqrt_pi = 1.0 / core::f64::consts::PI.sqrt();
        assert!((m.density(&[0.0]).unwrap() - inv_sqrt_pi).abs() < 1e-15);
        let m = LpSymmetricModel::generalized_gaussian(1.0, 1).unwrap();
        assert!((m.density(&[0.0]).unwrap() - 0.5).abs() < 1e-15);
        let m = LpSymmetricModel::hypercube(2).unwrap();
        assert_eq!(m.density(&[0.5, 0.5]).unwrap(), 0.25);
        assert_eq!(m.density(&[1.5, 0.5]).unwrap(), 0.0);
        assert!(m.density(&[0.5]).is_err());
    }

    #[test]
    fn axis_tail_examples() {
        for p in [0.5, 1.0, 2.0, 5.0] {
            let m = LpSymmetricModel::generalized_gaussian(p, 2).unwrap();
            assert!((m.axis_tail(0.0) - 0.5).abs() < 1e-15);
        }
        let m = LpSymmetricModel::generalized_gaussian(2.0, 2).unwrap();
        // erfc(1) / 2
        assert!((m.axis_tail(1.0) - 0.078_649_603_525_142_56).abs() < 1e-13);
        assert!((m.axis_tail(-1.0) - (1.0 - 0.078_649_603_525_142_56)).abs() < 1e-13);
        let cube = LpSymmetricModel::hypercube(2).unwrap();
        assert_eq!(cube.axis_tail(0.5), 0.25);
        assert_eq!(cube.axis_tail(3.0), 0.0);
        assert_eq!(cube.axis_depth_oracle(-0.5), 0.25);
    }

    #[test]
    fn axis_quantile_inverts_the_tail() {
        let gauss = LpSymmetricModel::generalized_gaussian(2.0, 2).unwrap();
        let x = gauss.axis_quantile(0.07864960352514256).unwrap();
        assert!((x - 1.0).abs() < 1e-10, "{x}");
        let cube = LpSymmetricModel::hypercube(2).unwrap();
        assert!((cube.axis_quantile(0.25).unwrap() - 0.5).abs() < 1e-12);
        assert!(gauss.axis_quantile(0.5).unwrap() < 1e-12);
        assert!(gauss.axis_quantile(0.6).is_err());
    }

    #[test]
    fn cube_sum_tail_examples() {
        let cube = LpSymmetricModel::hypercube(2).unwrap();
        assert_eq!(cube.cube_sum_tail(0.5).unwrap(), 0.125);
        assert!(cube.cube_sum_tail(0.5).unwrap() < cube.axis_tail(0.5));
        assert!(cube.cube_sum_tail(1.0 - 1e-9).unwrap() < 1e-17);
        assert_eq!(cube.cube_sum_tail(1.0).unwrap(), 0.0);
        assert_eq!(cube.cube_sum_tail(0.0).unwrap(), 0.5);
        let m = LpSymmetricModel::generalized_gaussian(2.0, 2).unwrap();
        assert!(m.cube_sum_tail(0.5).is_err());
    }

    #[test]
    fn diagonal_oracle_domain() {
        let m = LpSymmetricModel::generalized_gaussian(0.5, 2).unwrap();
        assert!(matches!(m.diagonal_depth_oracle(1.0), Err(Error::Domain(_))));
        let m = LpSymmetricModel::hypercube(2).unwrap();
        assert!(matches!(m.diagonal_depth_oracle(1.0), Err(Error::Domain(_))));
        let m = LpSymmetricModel::generalized_gaussian(2.0, 1).unwrap();
        assert!(m.diagonal_depth_oracle(1.0).is_err());
    }

    #[test]
    fn diagonal_oracle_examples() {
        let m = LpSymmetricModel::generalized_gaussian(2.0, 2).unwrap();
        assert!((m.diagonal_depth_oracle(1e-9).unwrap() - 0.5).abs() < 1e-6);
        // X_1 + X_2 has the law of sqrt(2) X_1 when p = 2
        let diag = m.diagonal_depth_oracle(1.0).unwrap();
        assert!((diag - m.axis_depth_oracle(2f64.sqrt())).abs() < 1e-8);
        // Laplace: P(X_1 + X_2 >= s) = e^{-s} (2 + s) / 4
        let m = LpSymmetricModel::generalized_gaussian(1.0, 2).unwrap();
        let diag = m.diagonal_depth_oracle(1.0).unwrap();
        assert!((diag - (-2f64).exp()).abs() < 1e-8);
        assert!(diag > m.axis_depth_oracle(2.0));
    }

    #[test]
    fn scaled_sum_gap_examples() {
        let grid = [0.0, 0.5, 1.0];
        assert!(scaled_sum_density_gap(2.0, &grid).unwrap() <= 1e-4);
        assert!(scaled_sum_density_gap(1.0, &[0.0]).unwrap() >= 1e-2);
        let gap5 = scaled_sum_density_gap(5.0, &[0.0]).unwrap();
        let m = LpSymmetricModel::generalized_gaussian(5.0, 2).unwrap();
        let predicted = m.marginal_density(0.0) * (1.0 - 2f64.powf(3.0 / 5.0)).abs();
        assert!((gap5 - predicted).abs() < 1e-7, "{gap5} vs {predicted}");
        assert!(scaled_sum_density_gap(0.5, &grid).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let m = LpSymmetricModel::generalized_gaussian(1.5, 3).unwrap();
        assert_eq!(m.sample(10, 3).unwrap(), m.sample(10, 3).unwrap());
        assert_ne!(m.sample(10, 3).unwrap(), m.sample(10, 4).unwrap());
        assert!(m.sample(0, 3).is_err());
    }
}
