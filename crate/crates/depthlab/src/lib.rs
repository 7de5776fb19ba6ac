//! File formats, the `depthlab` command-line tool and parallel experiment
//! runners on top of [`depthlab_core`].
//!
//! * [`io`]: CSV datasets and provenance-stamped output files.
//! * [`config`]: study configuration files.
//! * [`contour`]: marching-squares iso-lines.
//! * [`svg`]: a small SVG polyline writer.
//! * [`parallel`]: rayon runners that reproduce the sequential results.
//! * [`cli`]: argument parsing and the subcommands.

pub mod cli;
pub mod config;
pub mod contour;
pub mod error;
pub mod io;
pub mod parallel;
pub mod svg;

pub use error::{CliError, Result};
