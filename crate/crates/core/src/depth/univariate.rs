use crate::error::{Error, Result};
use crate::point::Dataset;

use super::{DepthResult, Method};

/// Univariate depth `min(#{x_i <= x}, #{x_i >= x}) / n` with closed half-lines.
pub fn depth_1d(data: &Dataset, x: f64) -> Result<DepthResult> {
    if data.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: data.dim(),
        });
    }
    if !x.is_finite() {
        return Err(Error::NonFinite(0));
    }
    let values = data.as_flat();
    let below = values.iter().filter(|&&v| v <= x).count();
    let above = values.iter().filter(|&&v| v >= x).count();
    Ok(DepthResult {
        count: below.min(above),
        n: values.len(),
        method: Method::Exact1d,
        witness: None,
        n_dirs: None,
    })
}
