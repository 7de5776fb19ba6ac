//! Study configuration files.
//!
//! One `key = value` pair per line; `#` starts a comment. List values are
//! comma-separated.
//!
//! ```text
//! # level check on two stand-ins
//! distribution = D1s, D6
//! d = 2
//! n = 50, 100
//! alpha = 0.01, 0.05
//! M = 200
//! R = 200
//! seed = 7
//! ```
//!
//! `distribution`, `d`, `n`, `M` and `R` are required; `alpha` defaults to
//! 0.05 and `seed` may instead be given on the command line. The median
//! search can be tuned with `rounds`, `shrink` and `dirs`.

use std::collections::BTreeMap;
use std::path::Path;

use depthlab_core::median::MedianSettings;
use depthlab_core::symmetry::{Distribution, StudyConfig};

use crate::error::{CliError, Result};

const KEYS: &[&str] = &["distribution", "d", "n", "alpha", "M", "R", "seed", "rounds", "shrink", "dirs"];

/// A parsed config; `seed` is kept separate since the flag may supply it.
#[derive(Debug, Clone, PartialEq)]
pub struct StudyFile {
    pub config: StudyConfig,
    pub seed: Option<u64>,
}

pub fn read_study_config(path: &Path) -> Result<StudyFile> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    parse_study_config(&text)
}

pub fn parse_study_config(text: &str) -> Result<StudyFile> {
    let mut entries: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| CliError::Parse {
            line: line_no,
            message: "expected `key = value`".into(),
        })?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(CliError::Parse { line: line_no, message: format!("unknown key `{key}`") });
        }
        if entries.insert(key, (line_no, value.trim())).is_some() {
            return Err(CliError::Parse { line: line_no, message: format!("duplicate key `{key}`") });
        }
    }

    let required = |key: &str| {
        entries.get(key).copied().ok_or_else(|| CliError::Parse {
            line: 0,
            message: format!("missing required key `{key}`"),
        })
    };
    let defaults = MedianSettings::default();
    let config = StudyConfig {
        distributions: list(required("distribution")?, |t| t.parse::<Distribution>().ok())?,
        dims: list(required("d")?, |t| t.parse().ok())?,
        sizes: list(required("n")?, |t| t.parse().ok())?,
        alphas: match entries.get("alpha") {
            Some(&e) => list(e, |t| t.parse().ok())?,
            None => vec![0.05],
        },
        bootstrap: single(required("M")?)?,
        replications: single(required("R")?)?,
        seed: 0,
        median: MedianSettings {
            rounds: entries.get("rounds").map(|&e| single(e)).transpose()?.unwrap_or(defaults.rounds),
            shrink: entries.get("shrink").map(|&e| single(e)).transpose()?.unwrap_or(defaults.shrink),
            n_dirs: entries.get("dirs").map(|&e| single(e)).transpose()?.unwrap_or(defaults.n_dirs),
        },
    };
    let seed = entries.get("seed").map(|&e| single(e)).transpose()?;
    Ok(StudyFile { config, seed })
}

fn list<T>((line, value): (usize, &str), parse: impl Fn(&str) -> Option<T>) -> Result<Vec<T>> {
    value
        .split(',')
        .map(|t| {
            let t = t.trim();
            parse(t).ok_or_else(|| CliError::Parse { line, message: format!("invalid value `{t}`") })
        })
        .collect()
}

fn single<T: std::str::FromStr>((line, value): (usize, &str)) -> Result<T> {
    value
        .parse()
        .map_err(|_| CliError::Parse { line, message: format!("invalid value `{value}`") })
}
