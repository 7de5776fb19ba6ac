//! Spherical-symmetry diagnostic.
//!
//! The `q`-th central hull is taken to be the `ceil(q n)` deepest sample
//! points (ties broken by dataset index); its smallest enclosing ball
//! `S_q` captures a fraction `r(q)` of the sample. For spherically
//! symmetric data the depth regions are balls and `r(q)` tracks `q`; the
//! trapezoidal area between the curve and the diagonal summarizes the gap.

use alloc::vec::Vec;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;
use rand::seq::SliceRandom;

use crate::depth::{depth, DepthMethod, DEFAULT_DIRECTIONS};
use crate::error::{Error, Result};
use crate::linalg::{dist_sq, solve};
use crate::point::{Dataset, Fraction, Point};
use crate::rng::{stream, TAG_BALL, TAG_DIRECTIONS};

/// Relative slack of closed-ball membership.
pub const BALL_SLACK: f64 = 1e-9;

/// Seed of the direction stream when hull depths must be approximated.
pub const HULL_DIRECTION_SEED: u64 = 0;

#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    /// Closed membership with [`BALL_SLACK`] relative slack.
    pub fn contains(&self, x: &[f64]) -> bool {
        dist_sq(self.center.as_slice(), x).sqrt() <= self.radius * (1.0 + BALL_SLACK)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SphericityCurve {
    pub q_grid: Vec<f64>,
    pub r_values: Vec<Fraction>,
    /// Trapezoidal integral of `|r - q|` from the first grid point up to each point.
    pub area_cumulative: Vec<f64>,
    pub area_deviation: f64,
}

/// Depth counts of every data point, by the exact method for the data's
/// shape or by [`DEFAULT_DIRECTIONS`] random directions.
pub fn point_depths(data: &Dataset) -> Result<Vec<usize>> {
    let method = DepthMethod::auto(
        data.dim(),
        data.len(),
        DEFAULT_DIRECTIONS,
        crate::rng::derive_seed(HULL_DIRECTION_SEED, TAG_DIRECTIONS, 0),
    );
    data.rows().map(|row| depth(data, row, method).map(|r| r.count)).collect()
}

/// Indices sorted by decreasing depth, ties by index.
fn depth_order(depths: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..depths.len()).collect();
    order.sort_by(|&a, &b| depths[b].cmp(&depths[a]).then(a.cmp(&b)));
    order
}

/// `ceil(q n)`, clamped to `1..=n`. The small guard keeps products such as
/// `0.3 * 10` from rounding up past an integer.
pub fn hull_size(q: f64, n: usize) -> usize {
    let k = (q * n as f64 - 1e-9).ceil();
    (k.max(1.0) as usize).min(n)
}

fn check_q(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain("q must lie in (0, 1)"))
    }
}

/// Indices of the `q`-th central hull's points, deepest first.
pub fn central_hull_indices(data: &Dataset, q: f64) -> Result<Vec<usize>> {
    check_q(q)?;
    let mut order = depth_order(&point_depths(data)?);
    order.truncate(hull_size(q, data.len()));
    Ok(order)
}

/// The points of the `q`-th central hull, deepest first.
pub fn central_hull(data: &Dataset, q: f64) -> Result<Vec<Point>> {
    Ok(central_hull_indices(data, q)?.into_iter().map(|i| data.point(i)).collect())
}

/// Minimal closed Euclidean ball containing `points`.
///
/// Welzl's randomized incremental algorithm with move-to-front; the
/// shuffle is seeded, so the result is deterministic.
pub fn smallest_enclosing_ball<P: AsRef<[f64]>>(points: &[P]) -> Result<Ball> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let dim = first.as_ref().len();
    let mut pts: Vec<&[f64]> = Vec::with_capacity(points.len());
    for p in points {
        let p = p.as_ref();
        if p.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: p.len() });
        }
        if let Some(i) = p.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        pts.push(p);
    }
    let count = pts.len();
    pts.shuffle(&mut stream(0, TAG_BALL, count as u64));
    let mut support: Vec<&[f64]> = Vec::with_capacity(dim + 1);
    let (center, r2) = move_to_front(&mut pts, count, &mut support, dim);
    let radius = pts.iter().map(|p| dist_sq(&center, p)).fold(r2, f64::max).sqrt();
    Ok(Ball { center: Point::from_vec_unchecked(center), radius })
}

fn inside(center: &[f64], r2: f64, p: &[f64]) -> bool {
    dist_sq(center, p) <= r2 * (1.0 + 1e-12) + 1e-300
}

fn move_to_front<'a>(pts: &mut [&'a [f64]], end: usize, support: &mut Vec<&'a [f64]>, dim: usize) -> (Vec<f64>, f64) {
    let (mut center, mut r2) = support_ball(support, dim);
    if support.len() == dim + 1 {
        return (center, r2);
    }
    for i in 0..end {
        let p = pts[i];
        if !inside(&center, r2, p) {
            support.push(p);
            (center, r2) = move_to_front(pts, i, support, dim);
            support.pop();
            pts[..=i].rotate_right(1);
        }
    }
    (center, r2)
}

/// Smallest ball with all of `support` on its boundary; for an affinely
/// dependent support the smallest ball through a subset that still
/// contains the rest.
fn support_ball(support: &[&[f64]], dim: usize) -> (Vec<f64>, f64) {
    match support.len() {
        0 => (alloc::vec![0.0; dim], -1.0),
        1 => (support[0].to_vec(), 0.0),
        _ => circumball(support).unwrap_or_else(|| fallback_ball(support)),
    }
}

fn circumball(support: &[&[f64]]) -> Option<(Vec<f64>, f64)> {
    let p0 = support[0];
    let v: Vec<Vec<f64>> = support[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    let k = v.len();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let mut gram = alloc::vec![0.0; k * k];
    for i in 0..k {
        for j in 0..k {
            gram[i * k + j] = 2.0 * dot(&v[i], &v[j]);
        }
    }
    let rhs: Vec<f64> = v.iter().map(|vi| dot(vi, vi)).collect();
    let lambda = solve(gram, rhs)?;
    let mut center = p0.to_vec();
    for (l, vi) in lambda.iter().zip(&v) {
        center.iter_mut().zip(vi).for_each(|(c, x)| *c += l * x);
    }
    let r2 = support.iter().map(|p| dist_sq(&center, p)).fold(0.0, f64::max);
    Some((center, r2))
}

fn fallback_ball(support: &[&[f64]]) -> (Vec<f64>, f64) {
    let k = support.len();
    let mut best: Option<(Vec<f64>, f64)> = None;
    for mask in 1u32..(1 << k) {
        let subset: Vec<&[f64]> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| support[i]).collect();
        let ball = if subset.len() == 1 {
            Some((subset[0].to_vec(), 0.0))
        } else {
            circumball(&subset)
        };
        if let Some((c, r2)) = ball {
            let covers = support.iter().all(|p| inside(&c, r2, p));
            if covers && best.as_ref().is_none_or(|(_, b)| r2 < *b) {
                best = Some((c, r2));
            }
        }
    }
    best.expect("the two farthest support points always give a covering ball")
}

/// `r(q)` on `q_grid` and the area between the curve and the diagonal.
pub fn sphericity_curve(data: &Dataset, q_grid: &[f64]) -> Result<SphericityCurve> {
    if q_grid.is_empty() {
        return Err(Error::InvalidGrid("q grid is empty"));
    }
    for &q in q_grid {
        check_q(q)?;
    }
    if q_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid("q grid must be strictly increasing"));
    }
    let n = data.len();
    let order = depth_order(&point_depths(data)?);
    let mut r_values = Vec::with_capacity(q_grid.len());
    for &q in q_grid {
        let hull: Vec<&[f64]> = order[..hull_size(q, n)].iter().map(|&i| data.row(i)).collect();
        let ball = smallest_enclosing_ball(&hull)?;
        let inside = data.rows().filter(|row| ball.contains(row)).count();
        r_values.push(Fraction::new(inside, n));
    }
    let gaps: Vec<f64> = q_grid.iter().zip(&r_values).map(|(q, r)| (r.value() - q).abs()).collect();
    let mut area_cumulative = Vec::with_capacity(q_grid.len());
    let mut area = 0.0;
    area_cumulative.push(0.0);
    for i in 1..q_grid.len() {
        area += 0.5 * (gaps[i - 1] + gaps[i]) * (q_grid[i] - q_grid[i - 1]);
        area_cumulative.push(area);
    }
    Ok(SphericityCurve {
        q_grid: q_grid.to_vec(),
        r_values,
        area_cumulative,
        area_deviation: area,
    })
}

/// `start, start + step, ...` up to `stop` inclusive (within half a step
/// of rounding). Values are computed as `start + k * step`.
pub fn linear_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(Error::InvalidGrid("need start <= stop and a positive step"));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| start + k as f64 * step).collect())
}
