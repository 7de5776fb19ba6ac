//! Tukey half-space depth and the procedures built on it.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs and an explicit `u64` seed; there is no IO and no
//! global state. File formats, the CLI and the parallel experiment runners
//! live in the `depthlab` crate.
//!
//! Module map:
//!
//! * [`depth`]: empirical half-space depth (exact 1-D, exact 2-D angular sweep,
//!   exact combinatorial for small `d`, random-direction approximation) and
//!   grid evaluation.
//! * [`median`]: the Tukey median and the maximal sample depth.
//! * [`lp`]: product-form `l_p`-symmetric generalized Gaussian models, their
//!   samplers and closed-form population depth oracles.
//! * [`symmetry`]: the sign-flip bootstrap test for angular symmetry and the
//!   rejection-rate study harness.
//! * [`diagnostics`]: central hulls, smallest enclosing balls and the `r(q)`
//!   sphericity curve.
//! * [`infdim`]: Chebyshev depth bounds for Gaussian sequences in `l_2`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod depth;
pub mod diagnostics;
mod error;
pub mod infdim;
mod linalg;
pub mod lp;
pub mod median;
mod point;
pub mod quadrature;
pub mod rng;
pub mod special;
pub mod symmetry;

pub use error::{Error, Result};
pub use point::{Dataset, Fraction, Point};
