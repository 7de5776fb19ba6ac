//! Dense helpers for the handful of tiny vectors and systems the crate needs.

use alloc::vec::Vec;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Normalizes `v` in place; returns false for a (numerically) zero vector.
pub(crate) fn normalize(v: &mut [f64]) -> bool {
    let n = norm(v);
    if n == 0.0 || !n.is_finite() {
        return false;
    }
    v.iter_mut().for_each(|c| *c /= n);
    true
}

/// Orthonormal basis of the span of `vectors` by modified Gram-Schmidt.
///
/// A vector is treated as dependent when its residual norm falls below
/// `rel_tol` times its original norm.
pub(crate) fn orthonormal_basis<'a>(
    dim: usize,
    vectors: impl IntoIterator<Item = &'a [f64]>,
    rel_tol: f64,
) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(dim);
    for v in vectors {
        if basis.len() == dim {
            break;
        }
        let scale = norm(v);
        if scale == 0.0 {
            continue;
        }
        let mut r = v.to_vec();
        // two passes keep the residual orthogonal in floating point
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&r, b);
                r.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        let rn = norm(&r);
        if rn > rel_tol * scale {
            r.iter_mut().for_each(|x| *x /= rn);
            basis.push(r);
        }
    }
    basis
}

/// Orthonormal basis of the orthogonal complement of the unit vector `u`.
pub(crate) fn complement_basis(u: &[f64]) -> Vec<Vec<f64>> {
    let dim = u.len();
    let units: Vec<Vec<f64>> = (0..dim)
        .map(|i| {
            let mut e = alloc::vec![0.0; dim];
            e[i] = 1.0;
            e
        })
        .collect();
    let mut seeds: Vec<&[f64]> = Vec::with_capacity(dim + 1);
    seeds.push(u);
    // start with the axes least aligned with u for better conditioning
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| u[a].abs().total_cmp(&u[b].abs()));
    seeds.extend(order.iter().map(|&i| units[i].as_slice()));
    let mut basis = orthonormal_basis(dim, seeds, 1e-8);
    basis.remove(0);
    basis
}

/// Coordinates of `v` in the orthonormal `basis`.
pub(crate) fn project(basis: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    basis.iter().map(|b| dot(b, v)).collect()
}

/// Maps coordinates in `basis` back to the ambient space.
pub(crate) fn lift(basis: &[Vec<f64>], coords: &[f64], dim: usize) -> Vec<f64> {
    let mut out = alloc::vec![0.0; dim];
    for (b, c) in basis.iter().zip(coords) {
        out.iter_mut().zip(b).for_each(|(o, x)| *o += c * x);
    }
    out
}

/// Unit normal to the span of `dim - 1` vectors in `R^dim`, or `None` when
/// they are linearly dependent. Computed as the last column of a QR
/// factorization, which is the generalized cross product up to scale.
pub(crate) fn normal_to(vectors: &[&[f64]], dim: usize) -> Option<Vec<f64>> {
    debug_assert_eq!(vectors.len() + 1, dim);
    let basis = orthonormal_basis(dim, vectors.iter().copied(), 1e-10);
    if basis.len() + 1 != dim {
        return None;
    }
    for i in 0..dim {
        let mut e = alloc::vec![0.0; dim];
        e[i] = 1.0;
        let mut r = e;
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&r, b);
                r.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        if norm(&r) > 0.5 / (dim as f64).sqrt() {
            normalize(&mut r);
            return Some(r);
        }
    }
    None
}

/// Solves the square system `a x = b` (row-major `a`) by Gaussian
/// elimination with partial pivoting. `None` when numerically singular.
pub(crate) fn solve(mut a: Vec<f64>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    debug_assert_eq!(a.len(), n * n);
    let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return if n == 0 { Some(Vec::new()) } else { None };
    }
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))
            .unwrap();
        if a[pivot * n + col].abs() <= 1e-12 * scale {
            return None;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
            }
            b.swap(pivot, col);
        }
        for row in col + 1..n {
            let f = a[row * n + col] / a[col * n + col];
            if f != 0.0 {
                for k in col..n {
                    a[row * n + k] -= f * a[col * n + k];
                }
                b[row] -= f * b[col];
            }
        }
    }
    let mut x = alloc::vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row * n + k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row * n + row];
    }
    Some(x)
}
