//! Exact bivariate depth by an angular sweep in `O(n log n)`.
//!
//! With `y_i = data_i - x`, a closed half-plane with inner normal `u`
//! contains `y_i` iff the angle of `y_i` lies in the closed half-circle
//! centred on `u`. The minimum over all `u` is attained on an open arc of
//! normals, where it equals the number of directions inside an open
//! half-circle; sliding that half-circle shows it suffices to look at
//! half-circles `(phi_j, phi_j + pi]` starting just after each data angle.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use crate::error::{Error, Result};
use crate::point::{Dataset, Point};

use super::{centered_nonzero, DepthResult, Method};

/// Exact Tukey depth of `x` with respect to bivariate `data`.
pub fn depth_2d_exact(data: &Dataset, x: &[f64]) -> Result<DepthResult> {
    if data.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: data.dim(),
        });
    }
    data.check_query(x)?;
    let (flat, coincident) = centered_nonzero(data, x);
    let ys: Vec<[f64; 2]> = flat.chunks_exact(2).map(|c| [c[0], c[1]]).collect();
    let (count, u) = open_halfplane_min(&ys);
    Ok(DepthResult {
        count: coincident + count,
        n: data.len(),
        method: Method::Exact2d,
        witness: Some(Point::from_vec_unchecked(alloc::vec![u[0], u[1]])),
        n_dirs: None,
    })
}

#[inline]
fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

#[inline]
fn dot(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

/// Whether `b` lies in the half-open half-circle `(angle(a), angle(a) + pi]`.
#[inline]
fn in_half_circle(a: [f64; 2], b: [f64; 2]) -> bool {
    let c = cross(a, b);
    c > 0.0 || (c == 0.0 && dot(a, b) < 0.0)
}

#[inline]
fn same_direction(a: [f64; 2], b: [f64; 2]) -> bool {
    cross(a, b) == 0.0 && dot(a, b) > 0.0
}

/// Minimum over directions `u` of `#{i : <u, y_i> >= 0}` for nonzero `ys`,
/// with a unit normal attaining it.
pub(crate) fn open_halfplane_min(ys: &[[f64; 2]]) -> (usize, [f64; 2]) {
    let m = ys.len();
    if m == 0 {
        return (0, [1.0, 0.0]);
    }
    let mut sorted: Vec<([f64; 2], f64)> = ys
        .iter()
        .map(|&y| {
            let a = y[1].atan2(y[0]);
            (y, if a < 0.0 { a + TAU } else { a })
        })
        .collect();
    sorted.sort_by(|a, b| a.1.total_cmp(&b.1));

    let at = |i: usize| sorted[i % m].0;
    let angle = |i: usize| sorted[i % m].1 + TAU * (i / m) as f64;

    let mut best = usize::MAX;
    let mut best_u = [1.0, 0.0];
    let mut end = 0usize;
    let mut j = 0usize;
    while j < m {
        let yj = at(j);
        let mut g = 1;
        while j + g < m && same_direction(yj, at(j + g)) {
            g += 1;
        }
        end = end.max(j + g);
        while end < j + m && in_half_circle(yj, at(end)) {
            end += 1;
        }
        let count = end - (j + g);
        if count < best {
            best = count;
            // rotate the half-circle start just past phi_j: stay before the
            // next direction and keep its far end before the first excluded one
            let phi = angle(j);
            let mut delta = angle(end) - (phi + PI);
            if count > 0 {
                delta = delta.min(angle(j + g) - phi);
            }
            let s = phi + 0.5 * delta.clamp(0.0, PI);
            let normal = s + 0.5 * PI;
            best_u = [normal.cos(), normal.sin()];
        }
        j += g;
    }
    (best, best_u)
}
