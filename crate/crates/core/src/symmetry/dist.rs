//! Sampling designs for the rejection-rate study.
//!
//! `D6` is the uniform law on the solid simplex `{x >= 0, sum x <= 1}`
//! (the right isosceles triangle in the plane). `D1s`..`D5s` are stand-ins:
//!
//! * `D1s`: standard Gaussian.
//! * `D2s`: spherical multivariate t with 3 degrees of freedom
//!   (Gaussian scale mixture).
//! * `D3s`: equal mixture of `N(0, I)` and `N(0, diag(4, 1/4, ..., 1/4))`,
//!   centrally symmetric about the origin.
//! * `D4s`: `0.75 N(0, I) + 0.25 N(2 * 1, 0.25 I)`, a shifted mixture.
//! * `D5s`: Gaussian coordinates except the last, which is `Exp(1) - ln 2`
//!   (skewed, median zero).
//!
//! `D1s`..`D3s` are angularly symmetric, `D4s`..`D6` are not (in `d >= 2`).

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;
use rand::Rng;
use rand_distr::{ChiSquared, Distribution as _, Exp1, StandardNormal};

use crate::error::{Error, Result};
use crate::lp::{LpExponent, LpSymmetricModel};
use crate::point::Dataset;
use crate::rng::{mix64, stream, StreamRng, TAG_DIST_SAMPLE};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Distribution {
    D1s,
    D2s,
    D3s,
    D4s,
    D5s,
    D6,
    Lp(LpExponent),
}

impl Distribution {
    /// Whether the law is angularly symmetric about some point (for `d >= 2`).
    pub fn is_angularly_symmetric(&self) -> bool {
        matches!(self, Distribution::D1s | Distribution::D2s | Distribution::D3s | Distribution::Lp(_))
    }

    /// Stable 64-bit key used to address random streams.
    pub fn key(&self) -> u64 {
        match self {
            Distribution::D1s => 1,
            Distribution::D2s => 2,
            Distribution::D3s => 3,
            Distribution::D4s => 4,
            Distribution::D5s => 5,
            Distribution::D6 => 6,
            Distribution::Lp(LpExponent::Finite(p)) => mix64(0x100 ^ p.to_bits()),
            Distribution::Lp(LpExponent::Infinity) => mix64(0x101),
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distribution::D1s => f.write_str("D1s"),
            Distribution::D2s => f.write_str("D2s"),
            Distribution::D3s => f.write_str("D3s"),
            Distribution::D4s => f.write_str("D4s"),
            Distribution::D5s => f.write_str("D5s"),
            Distribution::D6 => f.write_str("D6"),
            Distribution::Lp(p) => write!(f, "lp:{p}"),
        }
    }
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownDistribution(s.to_string());
        Ok(match s {
            "D1s" => Distribution::D1s,
            "D2s" => Distribution::D2s,
            "D3s" => Distribution::D3s,
            "D4s" => Distribution::D4s,
            "D5s" => Distribution::D5s,
            "D6" => Distribution::D6,
            _ => {
                let p = s.strip_prefix("lp:").ok_or_else(unknown)?;
                let p = parse_exponent(p).ok_or_else(unknown)?;
                LpSymmetricModel::new(p, 1).map_err(|_| unknown())?;
                Distribution::Lp(p)
            }
        })
    }
}

/// Parses `inf` or a positive float.
pub(crate) fn parse_exponent(s: &str) -> Option<LpExponent> {
    match s.trim() {
        "inf" | "Inf" | "infinity" => Some(LpExponent::Infinity),
        t => t.parse::<f64>().ok().filter(|p| *p > 0.0 && p.is_finite()).map(LpExponent::Finite),
    }
}

/// `n` draws in dimension `d`, deterministic in `seed`.
pub fn sample_distribution(dist: Distribution, d: usize, n: usize, seed: u64) -> Result<Dataset> {
    let mut rng = stream(seed, TAG_DIST_SAMPLE, 0);
    sample_with(dist, d, n, &mut rng)
}

pub(crate) fn sample_with(dist: Distribution, d: usize, n: usize, rng: &mut StreamRng) -> Result<Dataset> {
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1"));
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if let Distribution::Lp(p) = dist {
        return LpSymmetricModel::new(p, d)?.sample_with(n, rng);
    }
    let mut coords = Vec::with_capacity(n * d);
    let mut row = alloc::vec![0.0; d];
    for _ in 0..n {
        draw_row(dist, rng, &mut row);
        coords.extend_from_slice(&row);
    }
    Dataset::from_flat(d, coords)
}

fn gaussian(rng: &mut StreamRng, out: &mut [f64]) {
    out.iter_mut().for_each(|v| *v = rng.sample(StandardNormal));
}

fn draw_row(dist: Distribution, rng: &mut StreamRng, out: &mut [f64]) {
    let d = out.len();
    match dist {
        Distribution::D1s => gaussian(rng, out),
        Distribution::D2s => {
            gaussian(rng, out);
            let chi2 = ChiSquared::new(3.0).expect("positive degrees of freedom").sample(rng);
            let scale = (3.0 / chi2).sqrt();
            out.iter_mut().for_each(|v| *v *= scale);
        }
        Distribution::D3s => {
            let stretched = rng.random::<bool>();
            gaussian(rng, out);
            if stretched {
                out[0] *= 2.0;
                out[1..].iter_mut().for_each(|v| *v *= 0.5);
            }
        }
        Distribution::D4s => {
            let shifted = rng.random::<f64>() < 0.25;
            gaussian(rng, out);
            if shifted {
                out.iter_mut().for_each(|v| *v = 2.0 + 0.5 * *v);
            }
        }
        Distribution::D5s => {
            gaussian(rng, &mut out[..d - 1]);
            let e: f64 = rng.sample(Exp1);
            out[d - 1] = e - core::f64::consts::LN_2;
        }
        Distribution::D6 => {
            // uniform on the face sum x = 1, then a Beta(d, 1) radial factor
            let mut total = 0.0;
            for v in out.iter_mut() {
                *v = rng.sample(Exp1);
                total += *v;
            }
            let u: f64 = rng.random();
            let r = u.powf(1.0 / d as f64) / total;
            out.iter_mut().for_each(|v| *v *= r);
        }
        Distribution::Lp(_) => unreachable!("handled by the l_p sampler"),
    }
}

/// Names accepted by the parser, for messages.
pub const KNOWN_NAMES: &str = "D1s, D2s, D3s, D4s, D5s, D6, lp:<p>, lp:inf";
