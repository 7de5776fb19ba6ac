//! Exact depth in small dimension by enumerating arrangement vertices.
//!
//! For nonzero `y_1..y_m` the closed count `#{<u, y_i> >= 0}` is minimized
//! on an open cell of the arrangement of great spheres `<u, y_i> = 0`.
//! When the `y_i` span `R^r`, every such cell is a pointed cone, so it
//! touches a vertex `u0` normal to `r - 1` independent `y_i`. Next to `u0`
//! the count is the number of strictly positive `<u0, y_i>` plus the best
//! achievable count among the `y_i` with `<u0, y_i> = 0`, which is the same
//! problem one dimension down. Rank-deficient inputs are first projected
//! onto their span.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{complement_basis, dot, lift, norm, normal_to, normalize, orthonormal_basis, project};
use crate::point::{Dataset, Point};

use super::{centered_nonzero, DepthResult, Method};

pub const COMBINATORIAL_MAX_DIM: usize = 4;
pub const COMBINATORIAL_MAX_N: usize = 60;

/// `|<u, y>| <= ZERO_TOL * |y|` is treated as lying on the hyperplane.
const ZERO_TOL: f64 = 1e-10;

/// Exact Tukey depth for `1 <= d <= 4`, `n <= 60` by vertex enumeration.
pub fn depth_exact_combinatorial(data: &Dataset, x: &[f64]) -> Result<DepthResult> {
    let (n, dim) = (data.len(), data.dim());
    if dim > COMBINATORIAL_MAX_DIM || n > COMBINATORIAL_MAX_N {
        return Err(Error::SizeLimit {
            n,
            d: dim,
            max_d: COMBINATORIAL_MAX_DIM,
            max_n: COMBINATORIAL_MAX_N,
        });
    }
    data.check_query(x)?;
    let (flat, coincident) = centered_nonzero(data, x);
    let ys: Vec<Vec<f64>> = flat.chunks_exact(dim).map(<[f64]>::to_vec).collect();
    let (count, u) = open_min(&ys, dim);
    Ok(DepthResult {
        count: coincident + count,
        n,
        method: Method::ExactCombinatorial,
        witness: Some(Point::from_vec_unchecked(u)),
        n_dirs: None,
    })
}

/// Minimum closed half-space count of nonzero vectors `ys` in `R^dim`,
/// with a unit direction attaining it.
fn open_min(ys: &[Vec<f64>], dim: usize) -> (usize, Vec<f64>) {
    if ys.is_empty() {
        let mut u = alloc::vec![0.0; dim];
        u[0] = 1.0;
        return (0, u);
    }
    let basis = orthonormal_basis(dim, ys.iter().map(Vec::as_slice), 1e-10);
    let rank = basis.len();
    if rank < dim {
        let projected: Vec<Vec<f64>> = ys.iter().map(|y| project(&basis, y)).collect();
        let (count, v) = open_min(&projected, rank);
        let mut u = lift(&basis, &v, dim);
        normalize(&mut u);
        return (count, u);
    }
    if dim == 1 {
        let pos = ys.iter().filter(|y| y[0] > 0.0).count();
        let neg = ys.len() - pos;
        return if pos <= neg { (pos, alloc::vec![1.0]) } else { (neg, alloc::vec![-1.0]) };
    }

    let mut best = usize::MAX;
    let mut best_u = Vec::new();
    let mut subset: Vec<usize> = (0..dim - 1).collect();
    loop {
        let vectors: Vec<&[f64]> = subset.iter().map(|&i| ys[i].as_slice()).collect();
        if let Some(u0) = normal_to(&vectors, dim) {
            for sign in [1.0, -1.0] {
                let u: Vec<f64> = u0.iter().map(|c| sign * c).collect();
                if let Some((count, w)) = vertex_count(ys, &u, best) {
                    best = count;
                    best_u = w;
                    if best == 0 {
                        return (best, best_u);
                    }
                }
            }
        }
        if !next_combination(&mut subset, ys.len()) {
            break;
        }
    }
    (best, best_u)
}

/// Best count in the cells around vertex `u`, if below `bound`.
fn vertex_count(ys: &[Vec<f64>], u: &[f64], bound: usize) -> Option<(usize, Vec<f64>)> {
    let dim = u.len();
    let mut positive = 0;
    let mut on_plane: Vec<&Vec<f64>> = Vec::new();
    let mut margin = f64::INFINITY;
    for y in ys {
        let t = dot(u, y);
        let scale = norm(y);
        if t.abs() <= ZERO_TOL * scale {
            on_plane.push(y);
        } else {
            if t > 0.0 {
                positive += 1;
            }
            margin = margin.min(t.abs() / scale);
        }
    }
    if positive >= bound {
        return None;
    }
    let complement = complement_basis(u);
    let projected: Vec<Vec<f64>> = on_plane.iter().map(|y| project(&complement, y)).collect();
    let (sub, v) = open_min(&projected, dim - 1);
    let count = positive + sub;
    if count >= bound {
        return None;
    }
    // tilt u towards v, little enough that no off-plane point changes side
    let eta = if margin.is_finite() { 0.5 * margin } else { 1.0 };
    let tilt = lift(&complement, &v, dim);
    let mut w: Vec<f64> = u.iter().zip(&tilt).map(|(a, b)| a + eta * b).collect();
    normalize(&mut w);
    Some((count, w))
}

/// Advances `subset` to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    if k == 0 || k > n {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
