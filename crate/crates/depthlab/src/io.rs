//! Plain CSV datasets and output files.
//!
//! Datasets are one observation per line, comma-separated, no header.
//! Blank lines and `#` comment lines are skipped so that files written by
//! this crate (which start with a provenance comment) read back unchanged.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use depthlab_core::Dataset;

use crate::error::{CliError, Result};

pub fn read_dataset(path: &Path) -> Result<Dataset> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    parse_dataset(&text)
}

pub fn parse_dataset(text: &str) -> Result<Dataset> {
    let mut dim = None;
    let mut coords = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let start = coords.len();
        for token in line.split(',') {
            let token = token.trim();
            let v: f64 = token.parse().map_err(|_| CliError::Parse {
                line: line_no,
                message: format!("cannot parse `{token}` as a number"),
            })?;
            if !v.is_finite() {
                return Err(CliError::Value { line: line_no, token: token.to_string() });
            }
            coords.push(v);
        }
        let found = coords.len() - start;
        match dim {
            None => dim = Some(found),
            Some(d) if d != found => {
                return Err(CliError::Parse {
                    line: line_no,
                    message: format!("expected {d} values, found {found}"),
                })
            }
            Some(_) => {}
        }
    }
    let dim = dim.ok_or(depthlab_core::Error::EmptyInput)?;
    Ok(Dataset::from_flat(dim, coords)?)
}

/// Shortest representation that parses back to the same `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

/// Comma-separated floats, for `--point` and `--levels`.
pub fn parse_floats(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::usage(format!("`{t}` is not a finite number")))
        })
        .collect()
}

/// First line of every output file.
#[derive(Debug, Clone)]
pub struct Provenance {
    pub seed: Option<u64>,
    pub cmd: String,
}

impl Provenance {
    pub fn header(&self) -> String {
        let seed = self.seed.map_or_else(|| "none".to_string(), |s| s.to_string());
        format!("# depthlab {} seed={seed} cmd={}\n", env!("CARGO_PKG_VERSION"), self.cmd)
    }
}

/// A CSV document built in memory and written in one go.
#[derive(Debug, Clone)]
pub struct Csv {
    text: String,
}

impl Csv {
    pub fn new(provenance: &Provenance, columns: &[&str]) -> Self {
        let mut text = provenance.header();
        text.push_str(&columns.join(","));
        text.push('\n');
        Csv { text }
    }

    pub fn row<I, S>(&mut self, fields: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut first = true;
        for f in fields {
            if !first {
                self.text.push(',');
            }
            first = false;
            self.text.push_str(f.as_ref());
        }
        self.text.push('\n');
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_text(path, &self.text)
    }
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Dataset in the input format, preceded by a provenance line.
pub fn dataset_text(data: &Dataset, provenance: &Provenance) -> String {
    let mut text = provenance.header();
    for row in data.rows() {
        let mut first = true;
        for v in row {
            if !first {
                text.push(',');
            }
            first = false;
            write!(text, "{v:?}").expect("writing to a String");
        }
        text.push('\n');
    }
    text
}

pub fn write_dataset(path: &Path, data: &Dataset, provenance: &Provenance) -> Result<()> {
    write_text(path, &dataset_text(data, provenance))
}

/// `dir/stem.suffix` next to `path`, e.g. `c.csv` -> `c.polylines.csv`.
pub fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}.{suffix}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let d = parse_dataset("1.0,2.0\n3.0,4.0").unwrap();
        assert_eq!((d.len(), d.dim()), (2, 2));
        let err = parse_dataset("1.0\n2.0,3.0").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }), "{err}");
        assert!(matches!(parse_dataset("nan,0").unwrap_err(), CliError::Value { line: 1, .. }));
        assert!(matches!(parse_dataset("1,inf").unwrap_err(), CliError::Value { .. }));
        assert!(matches!(
            parse_dataset("\n# only a comment\n").unwrap_err(),
            CliError::Core(depthlab_core::Error::EmptyInput)
        ));
        assert!(matches!(parse_dataset("1,x").unwrap_err(), CliError::Parse { line: 1, .. }));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::usage("x").exit_code(), 2);
        assert_eq!(parse_dataset("1\n1,2").unwrap_err().exit_code(), 3);
        assert_eq!(CliError::Core(depthlab_core::Error::EmptyInput).exit_code(), 3);
    }

    #[test]
    fn dataset_text_round_trips() {
        let values = [0.1, 1.0 / 3.0, -2.5e-300, 12345.678901234567, f64::MIN_POSITIVE];
        let data = Dataset::from_values(&values).unwrap();
        let prov = Provenance { seed: Some(3), cmd: "sample".into() };
        let text = dataset_text(&data, &prov);
        assert!(text.starts_with("# depthlab "));
        assert_eq!(parse_dataset(&text).unwrap(), data);
    }

    #[test]
    fn sibling_paths() {
        assert_eq!(sibling(Path::new("out/c.csv"), "polylines.csv"), Path::new("out/c.polylines.csv"));
    }

    #[test]
    fn float_lists() {
        assert_eq!(parse_floats("0.05, 0.1,0.2").unwrap(), [0.05, 0.1, 0.2]);
        assert!(parse_floats("0.1,,0.2").is_err());
    }
}
