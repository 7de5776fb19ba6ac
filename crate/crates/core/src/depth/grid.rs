use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::point::Dataset;

use super::depth_2d_exact;

/// A rectangular lattice of `nx * ny` nodes spanning `[x_min, x_max] x [y_min, y_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64, nx: usize, ny: usize) -> Result<Self> {
        let grid = GridSpec { x_min, x_max, y_min, y_max, nx, ny };
        grid.validate()?;
        Ok(grid)
    }

    /// Square grid of `size * size` nodes over `[-half, half]^2`.
    pub fn centered(half: f64, size: usize) -> Result<Self> {
        Self::new(-half, half, -half, half, size, size)
    }

    pub fn validate(&self) -> Result<()> {
        if self.nx < 2 || self.ny < 2 {
            return Err(Error::InvalidGrid("at least two nodes per axis required"));
        }
        let finite = [self.x_min, self.x_max, self.y_min, self.y_max]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.x_min >= self.x_max || self.y_min >= self.y_max {
            return Err(Error::InvalidGrid("bounds must be finite with min < max"));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn x(&self, ix: usize) -> f64 {
        self.x_min + (self.x_max - self.x_min) * ix as f64 / (self.nx - 1) as f64
    }

    pub fn y(&self, iy: usize) -> f64 {
        self.y_min + (self.y_max - self.y_min) * iy as f64 / (self.ny - 1) as f64
    }

    /// Node at row-major index `k = iy * nx + ix`.
    pub fn node(&self, k: usize) -> [f64; 2] {
        [self.x(k % self.nx), self.y(k / self.nx)]
    }
}

/// Exact depth at every grid node, row-major (`iy * nx + ix`, `y` increasing).
pub fn depth_grid(data: &Dataset, grid: &GridSpec) -> Result<Vec<f64>> {
    grid.validate()?;
    if data.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: data.dim(),
        });
    }
    (0..grid.len())
        .map(|k| depth_2d_exact(data, &grid.node(k)).map(|r| r.value()))
        .collect()
}
