use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::normalize;
use crate::point::{Dataset, Point};
use crate::rng::{stream, TAG_DIRECTIONS};

use super::{halfspace_count, DepthResult, Method};

/// Random-direction upper approximation of the Tukey depth.
///
/// Minimizes the closed half-space count over `n_dirs` directions drawn
/// uniformly on the unit sphere (normalized standard Gaussian vectors) from
/// the stream selected by `seed`. The first `k` directions for a seed do not
/// depend on `n_dirs`, so larger budgets refine smaller ones and the value
/// never increases with `n_dirs`. Never below the exact depth.
pub fn depth_approx(data: &Dataset, x: &[f64], n_dirs: usize, seed: u64) -> Result<DepthResult> {
    if n_dirs == 0 {
        return Err(Error::InvalidParameter("n_dirs must be positive"));
    }
    data.check_query(x)?;
    let dim = data.dim();
    let mut rng = stream(seed, TAG_DIRECTIONS, 0);
    let mut u = alloc::vec![0.0; dim];
    let mut best = usize::MAX;
    let mut best_u = u.clone();
    for _ in 0..n_dirs {
        loop {
            u.iter_mut().for_each(|c| *c = rng.sample(StandardNormal));
            if normalize(&mut u) {
                break;
            }
        }
        let count = halfspace_count(data, x, &u);
        if count < best {
            best = count;
            best_u.copy_from_slice(&u);
        }
    }
    Ok(DepthResult {
        count: best,
        n: data.len(),
        method: Method::Approx,
        witness: Some(Point::from_vec_unchecked(best_u)),
        n_dirs: Some(n_dirs),
    })
}
