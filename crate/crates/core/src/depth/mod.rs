//! Empirical Tukey half-space depth.
//!
//! All methods use closed half-spaces whose boundary passes through the
//! query point: a data point on the boundary is counted, and data points
//! equal to the query are counted in every half-space. Exact methods return
//! `k / n` for an integer count `k`.

mod approx;
mod combinatorial;
mod grid;
mod planar;
mod univariate;

pub use approx::depth_approx;
pub use combinatorial::{depth_exact_combinatorial, COMBINATORIAL_MAX_DIM, COMBINATORIAL_MAX_N};
pub use grid::{depth_grid, GridSpec};
pub use planar::depth_2d_exact;
pub use univariate::depth_1d;

use core::fmt;

use crate::error::Result;
use crate::point::{Dataset, Fraction, Point};

/// Default number of random directions for [`depth_approx`].
pub const DEFAULT_DIRECTIONS: usize = 1000;

/// How a depth value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Exact1d,
    Exact2d,
    ExactCombinatorial,
    Approx,
}

impl Method {
    pub fn is_exact(self) -> bool {
        !matches!(self, Method::Approx)
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Exact1d => "exact1d",
            Method::Exact2d => "exact2d",
            Method::ExactCombinatorial => "combinatorial",
            Method::Approx => "approx",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A sample depth `count / n` with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthResult {
    /// Minimal number of data points in a closed half-space through the query.
    pub count: usize,
    pub n: usize,
    pub method: Method,
    /// Unit normal of a half-space attaining the minimum (`None` in 1-D).
    pub witness: Option<Point>,
    /// Number of directions tried, for [`Method::Approx`].
    pub n_dirs: Option<usize>,
}

impl DepthResult {
    pub fn value(&self) -> f64 {
        self.count as f64 / self.n as f64
    }

    pub fn fraction(&self) -> Fraction {
        Fraction::new(self.count, self.n)
    }
}

/// Depth algorithm selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DepthMethod {
    Exact1d,
    Exact2d,
    Combinatorial,
    Approx { n_dirs: usize, seed: u64 },
}

impl DepthMethod {
    /// The exact method for the data's shape when one applies, otherwise the
    /// random-direction approximation with the given budget.
    ///
    /// 1-D and 2-D data always get an exact method (the sweep has no size
    /// limit); `d = 3, 4` get the combinatorial method while `n` is within
    /// its guard.
    pub fn auto(dim: usize, n: usize, n_dirs: usize, seed: u64) -> Self {
        match dim {
            1 => DepthMethod::Exact1d,
            2 => DepthMethod::Exact2d,
            d if d <= COMBINATORIAL_MAX_DIM && n <= COMBINATORIAL_MAX_N => {
                DepthMethod::Combinatorial
            }
            _ => DepthMethod::Approx { n_dirs, seed },
        }
    }
}

/// Depth of `x` with respect to `data` using `method`.
pub fn depth(data: &Dataset, x: &[f64], method: DepthMethod) -> Result<DepthResult> {
    match method {
        DepthMethod::Exact1d => {
            data.check_query(x)?;
            depth_1d(data, x[0])
        }
        DepthMethod::Exact2d => depth_2d_exact(data, x),
        DepthMethod::Combinatorial => depth_exact_combinatorial(data, x),
        DepthMethod::Approx { n_dirs, seed } => depth_approx(data, x, n_dirs, seed),
    }
}

/// Closed half-space count `#{i : <u, data_i - x> >= 0}`.
pub fn halfspace_count(data: &Dataset, x: &[f64], u: &[f64]) -> usize {
    let ux: f64 = crate::linalg::dot(u, x);
    data.rows()
        .filter(|row| crate::linalg::dot(u, row) - ux >= 0.0 || is_same(row, x))
        .count()
}

fn is_same(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(p, q)| p == q)
}

/// Differences `data_i - x` for points not equal to `x`, and the number of
/// points equal to `x`.
pub(crate) fn centered_nonzero(data: &Dataset, x: &[f64]) -> (alloc::vec::Vec<f64>, usize) {
    let dim = data.dim();
    let mut ys = alloc::vec::Vec::with_capacity(data.as_flat().len());
    let mut coincident = 0;
    for row in data.rows() {
        if is_same(row, x) {
            coincident += 1;
        } else {
            ys.extend(row.iter().zip(x).map(|(a, b)| a - b));
        }
    }
    debug_assert_eq!(ys.len() % dim, 0);
    (ys, coincident)
}
