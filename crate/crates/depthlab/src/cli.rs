//! Command-line interface.
//!
//! Every output CSV starts with `# depthlab <version> seed=<seed> cmd=<...>`
//! where `cmd` is rebuilt from the parsed arguments, so two invocations that
//! mean the same thing get the same header. `--threads` only sizes the
//! worker pool; it never changes results and is left out of the header.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use depthlab_core::depth::{depth, DepthMethod, GridSpec, Method, DEFAULT_DIRECTIONS};
use depthlab_core::diagnostics::{linear_grid, sphericity_curve};
use depthlab_core::infdim::{SequenceModel, SigmaProfile};
use depthlab_core::lp::{LpExponent, LpSymmetricModel};
use depthlab_core::median::{tukey_median_with, MedianSettings};
use depthlab_core::symmetry::{sample_distribution, Distribution, KNOWN_NAMES};
use depthlab_core::Dataset;

use crate::config::read_study_config;
use crate::contour::{iso_lines, Polyline};
use crate::error::{CliError, Result};
use crate::io::{fmt_f64, parse_floats, read_dataset, sibling, write_dataset, write_text, Csv, Provenance};
use crate::parallel;
use crate::svg::{Plot, Series};

#[derive(Debug, Parser)]
#[command(name = "depthlab", version, about = "Half-space depth, Tukey medians and symmetry diagnostics")]
pub struct Cli {
    /// Worker threads (default: all available cores). Results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Depth of one point with respect to a dataset.
    Depth(DepthArgs),
    /// Tukey median and maximal sample depth.
    Median(MedianArgs),
    /// Bootstrap test of angular symmetry.
    Symtest(SymtestArgs),
    /// r(q) sphericity curve.
    Diagnose(DiagnoseArgs),
    /// Depth and density contours of an l_p model sample.
    Contours(ContoursArgs),
    /// Chebyshev depth bounds for Gaussian l_2 sequences.
    Infdim(InfdimArgs),
    /// Rejection-rate study from a config file.
    Study(StudyArgs),
    /// Draw a dataset from a built-in distribution.
    Sample(SampleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact1d,
    Exact2d,
    Combinatorial,
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    /// sigma_i^2 = i^-2
    InverseSquare,
    /// sigma_i^2 = 2^-i
    Geometric,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Random directions when depth must be approximated.
    #[arg(long, default_value_t = DEFAULT_DIRECTIONS)]
    pub dirs: usize,
    /// Refinement rounds of the median search.
    #[arg(long, default_value_t = 200)]
    pub rounds: usize,
    /// Per-round radius factor of the median search.
    #[arg(long, default_value_t = 0.9)]
    pub shrink: f64,
}

impl SearchArgs {
    fn settings(&self) -> Result<MedianSettings> {
        if !(self.shrink > 0.0 && self.shrink <= 1.0) {
            return Err(CliError::usage("--shrink must lie in (0, 1]"));
        }
        if self.dirs == 0 {
            return Err(CliError::usage("--dirs must be positive"));
        }
        Ok(MedianSettings { rounds: self.rounds, shrink: self.shrink, n_dirs: self.dirs })
    }

    fn canonical(&self) -> String {
        format!("--dirs {} --rounds {} --shrink {}", self.dirs, self.rounds, fmt_f64(self.shrink))
    }
}

#[derive(Debug, Args)]
pub struct DepthArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Query point, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
    /// Default: exact for d <= 2 and small d, n; approx otherwise.
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long, default_value_t = DEFAULT_DIRECTIONS)]
    pub dirs: usize,
    /// Required when the approximate method is used.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MedianArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub seed: u64,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SymtestArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub seed: u64,
    /// Bootstrap replicates M.
    #[arg(long, default_value_t = 1000)]
    pub bootstrap: usize,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// l_p exponent (positive float or `inf`).
    #[arg(long)]
    pub p: Option<String>,
    /// Named distribution (D1s..D5s, D6, lp:<p>).
    #[arg(long)]
    pub dist: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long)]
    pub seed: Option<u64>,
}

impl ModelArgs {
    fn distribution(&self) -> Result<Option<Distribution>> {
        match (&self.p, &self.dist) {
            (Some(_), Some(_)) => Err(CliError::usage("give either --p or --dist, not both")),
            (Some(p), None) => Ok(Some(Distribution::Lp(parse_p(p)?))),
            (None, Some(name)) => name
                .parse()
                .map(Some)
                .map_err(|_| CliError::usage(format!("unknown distribution `{name}`; expected one of {KNOWN_NAMES}"))),
            (None, None) => Ok(None),
        }
    }

    /// Draws the sample described by the flags; `None` when no model was given.
    fn sample(&self) -> Result<Option<(Dataset, u64, String)>> {
        let Some(dist) = self.distribution()? else {
            return Ok(None);
        };
        let n = self.n.ok_or_else(|| CliError::usage("--n is required with a model"))?;
        let seed = self.seed.ok_or_else(|| CliError::usage("--seed is required to draw a sample"))?;
        let data = match dist {
            Distribution::Lp(p) => LpSymmetricModel::new(p, self.d)?.sample(n, seed)?,
            other => sample_distribution(other, self.d, n, seed)?,
        };
        let canonical = match dist {
            Distribution::Lp(p) => format!("--p {p} --n {n} --d {} --seed {seed}", self.d),
            other => format!("--dist {other} --n {n} --d {} --seed {seed}", self.d),
        };
        Ok(Some((data, seed, canonical)))
    }
}

#[derive(Debug, Args)]
pub struct DiagnoseArgs {
    /// Dataset file; alternatively draw a sample with --p/--dist, --n, --seed.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub model: ModelArgs,
    /// START:STOP:STEP within (0, 1).
    #[arg(long, default_value = "0.05:0.95:0.05")]
    pub qgrid: String,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ContoursArgs {
    #[arg(long)]
    pub p: String,
    #[arg(long)]
    pub n: usize,
    /// Nodes per axis.
    #[arg(long, default_value_t = 60)]
    pub grid: usize,
    #[arg(long, default_value = "0.05,0.1,0.2,0.3,0.4")]
    pub levels: String,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InfdimArgs {
    /// Largest truncation; bounds are reported for d = 1..=dmax.
    #[arg(long)]
    pub dmax: usize,
    #[arg(long)]
    pub draws: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ProfileArg::InverseSquare)]
    pub profile: ProfileArg,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct StudyArgs {
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Overrides the config's seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Overrides R.
    #[arg(long)]
    pub replications: Option<usize>,
    /// Overrides M.
    #[arg(long)]
    pub bootstrap: Option<usize>,
    /// Overrides the level list (comma-separated).
    #[arg(long)]
    pub alpha: Option<String>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub out: PathBuf,
}

/// Parses `inf` or a positive float.
pub fn parse_p(s: &str) -> Result<LpExponent> {
    match s.trim() {
        "inf" => Ok(LpExponent::Infinity),
        t => t
            .parse::<f64>()
            .ok()
            .filter(|p| *p > 0.0 && p.is_finite())
            .map(LpExponent::Finite)
            .ok_or_else(|| CliError::usage(format!("--p must be a positive number or `inf`, got `{t}`"))),
    }
}

/// Parses `START:STOP:STEP`.
pub fn parse_qgrid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(CliError::usage("--qgrid must be START:STOP:STEP"));
    };
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| CliError::usage(format!("bad --qgrid value `{t}`")));
    Ok(linear_grid(num(start)?, num(stop)?, num(step)?)?)
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn opt_path(flag: &str, p: &Option<PathBuf>) -> String {
    p.as_ref().map_or_else(String::new, |p| format!(" {flag} {}", path_str(p)))
}

/// Parses and runs `args`, printing messages, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed invocation, writing human-readable results to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let threads = match cli.threads {
        Some(0) => return Err(CliError::usage("--threads must be positive")),
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let command = cli.command;
    let mut text = String::new();
    parallel::with_threads(threads, || dispatch(command, &mut text))?;
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })
}

fn dispatch(command: Command, out: &mut String) -> Result<()> {
    match command {
        Command::Depth(a) => cmd_depth(a, out),
        Command::Median(a) => cmd_median(a, out),
        Command::Symtest(a) => cmd_symtest(a, out),
        Command::Diagnose(a) => cmd_diagnose(a, out),
        Command::Contours(a) => cmd_contours(a, out),
        Command::Infdim(a) => cmd_infdim(a, out),
        Command::Study(a) => cmd_study(a, out),
        Command::Sample(a) => cmd_sample(a, out),
    }
}

fn coord_columns(prefix: &str, d: usize) -> Vec<String> {
    (1..=d).map(|j| format!("{prefix}{j}")).collect()
}

fn cmd_depth(a: DepthArgs, out: &mut String) -> Result<()> {
    let data = read_dataset(&a.input)?;
    let x = parse_floats(&a.point)?;
    if x.len() != data.dim() {
        return Err(depthlab_core::Error::DimensionMismatch { expected: data.dim(), found: x.len() }.into());
    }
    if a.dirs == 0 {
        return Err(CliError::usage("--dirs must be positive"));
    }
    let needs_seed = |m: DepthMethod| matches!(m, DepthMethod::Approx { .. });
    let method = match a.method {
        Some(MethodArg::Exact1d) => DepthMethod::Exact1d,
        Some(MethodArg::Exact2d) => DepthMethod::Exact2d,
        Some(MethodArg::Combinatorial) => DepthMethod::Combinatorial,
        Some(MethodArg::Approx) => DepthMethod::Approx { n_dirs: a.dirs, seed: a.seed.unwrap_or(0) },
        None => DepthMethod::auto(data.dim(), data.len(), a.dirs, a.seed.unwrap_or(0)),
    };
    if needs_seed(method) && a.seed.is_none() {
        return Err(CliError::usage("--seed is required for the approximate method"));
    }
    let r = depth(&data, &x, method)?;
    out.push_str(&format!("{}\n", r.value()));

    if let Some(path) = &a.out {
        let method_flag = a.method.map_or_else(String::new, |_| format!(" --method {}", method_name(method)));
        let seed_flag = a.seed.map_or_else(String::new, |s| format!(" --seed {s}"));
        let prov = Provenance {
            seed: a.seed,
            cmd: format!(
                "depth --input {} --point {}{method_flag} --dirs {}{seed_flag} --out {}",
                path_str(&a.input),
                x.iter().map(|v| fmt_f64(*v)).collect::<Vec<_>>().join(","),
                a.dirs,
                path_str(path)
            ),
        };
        let d = data.dim();
        let mut cols = coord_columns("x", d);
        cols.push("depth".into());
        cols.push("method".into());
        cols.extend(coord_columns("w", d));
        let cols: Vec<&str> = cols.iter().map(String::as_str).collect();
        let mut csv = Csv::new(&prov, &cols);
        let mut row: Vec<String> = x.iter().map(|v| fmt_f64(*v)).collect();
        row.push(fmt_f64(r.value()));
        row.push(r.method.name().to_string());
        match &r.witness {
            Some(w) => row.extend(w.as_slice().iter().map(|v| fmt_f64(*v))),
            None => row.extend(std::iter::repeat_n(String::new(), d)),
        }
        csv.row(row);
        csv.write(path)?;
    }
    Ok(())
}

fn method_name(m: DepthMethod) -> &'static str {
    match m {
        DepthMethod::Exact1d => Method::Exact1d.name(),
        DepthMethod::Exact2d => Method::Exact2d.name(),
        DepthMethod::Combinatorial => Method::ExactCombinatorial.name(),
        DepthMethod::Approx { .. } => Method::Approx.name(),
    }
}

fn cmd_median(a: MedianArgs, out: &mut String) -> Result<()> {
    let data = read_dataset(&a.input)?;
    let settings = a.search.settings()?;
    let m = tukey_median_with(&data, a.seed, &settings)?;
    let coords: Vec<String> = m.point.as_slice().iter().map(|v| fmt_f64(*v)).collect();
    out.push_str(&format!("median {} depth {}\n", coords.join(","), m.depth.fraction()));
    if let Some(path) = &a.out {
        let prov = Provenance {
            seed: Some(a.seed),
            cmd: format!(
                "median --input {} --seed {} {} --out {}",
                path_str(&a.input),
                a.seed,
                a.search.canonical(),
                path_str(path)
            ),
        };
        let mut cols = coord_columns("m", data.dim());
        cols.push("depth".into());
        cols.push("candidates".into());
        let cols: Vec<&str> = cols.iter().map(String::as_str).collect();
        let mut csv = Csv::new(&prov, &cols);
        let mut row = coords;
        row.push(fmt_f64(m.depth.value()));
        row.push(m.candidates_evaluated.to_string());
        csv.row(row);
        csv.write(path)?;
    }
    Ok(())
}

fn cmd_symtest(a: SymtestArgs, out: &mut String) -> Result<()> {
    let data = read_dataset(&a.input)?;
    let settings = a.search.settings()?;
    if !(a.alpha > 0.0 && a.alpha < 1.0) {
        return Err(CliError::usage("--alpha must lie in (0, 1)"));
    }
    if a.bootstrap == 0 {
        return Err(CliError::usage("--bootstrap must be positive"));
    }
    let r = parallel::angular_symmetry_test(&data, a.bootstrap, a.alpha, a.seed, &settings)?;
    out.push_str(&format!(
        "delta_n {} p_value {} reject {}\n",
        r.delta_n,
        fmt_f64(r.p_value),
        r.reject
    ));
    if let Some(path) = &a.out {
        let prov = Provenance {
            seed: Some(a.seed),
            cmd: format!(
                "symtest --input {} --seed {} --bootstrap {} --alpha {} {} --out {}",
                path_str(&a.input),
                a.seed,
                a.bootstrap,
                fmt_f64(a.alpha),
                a.search.canonical(),
                path_str(path)
            ),
        };
        let mut cols = coord_columns("m", data.dim());
        cols.extend(["delta_n", "p_value", "alpha", "reject", "M"].map(String::from));
        let cols: Vec<&str> = cols.iter().map(String::as_str).collect();
        let mut csv = Csv::new(&prov, &cols);
        let mut row: Vec<String> = r.median.as_slice().iter().map(|v| fmt_f64(*v)).collect();
        row.push(fmt_f64(r.delta_n.value()));
        row.push(fmt_f64(r.p_value));
        row.push(fmt_f64(r.alpha));
        row.push(r.reject.to_string());
        row.push(r.bootstrap_count().to_string());
        csv.row(row);
        csv.write(path)?;
    }
    Ok(())
}

fn cmd_diagnose(a: DiagnoseArgs, out: &mut String) -> Result<()> {
    let (data, seed, source) = match (&a.input, a.model.sample()?) {
        (Some(_), Some(_)) => return Err(CliError::usage("give either --input or a model, not both")),
        (Some(path), None) => (read_dataset(path)?, None, format!("--input {}", path_str(path))),
        (None, Some((data, seed, canonical))) => (data, Some(seed), canonical),
        (None, None) => return Err(CliError::usage("give --input or a model (--p/--dist with --n and --seed)")),
    };
    let q_grid = parse_qgrid(&a.qgrid)?;
    let curve = sphericity_curve(&data, &q_grid)?;
    out.push_str(&format!("area_deviation {}\n", fmt_f64(curve.area_deviation)));

    let prov = Provenance {
        seed,
        cmd: format!(
            "diagnose {source} --qgrid {}{} --out {}",
            a.qgrid.trim(),
            opt_path("--svg", &a.svg),
            path_str(&a.out)
        ),
    };
    let mut csv = Csv::new(&prov, &["q", "r", "area_cumulative"]);
    for ((q, r), area) in curve.q_grid.iter().zip(&curve.r_values).zip(&curve.area_cumulative) {
        csv.row([fmt_f64(*q), fmt_f64(r.value()), fmt_f64(*area)]);
    }
    csv.write(&a.out)?;

    if let Some(svg) = &a.svg {
        let plot = Plot {
            title: format!("r(q), area deviation {:.4}", curve.area_deviation),
            x_label: "q".into(),
            y_label: "r(q)".into(),
            x_range: [0.0, 1.0],
            y_range: [0.0, 1.0],
            series: vec![
                Series { points: vec![[0.0, 0.0], [1.0, 1.0]], closed: false, stroke: "gray", dashed: true },
                Series {
                    points: curve.q_grid.iter().zip(&curve.r_values).map(|(q, r)| [*q, r.value()]).collect(),
                    closed: false,
                    stroke: "black",
                    dashed: false,
                },
            ],
        };
        write_text(svg, &plot.render())?;
    }
    Ok(())
}

/// Matching density level for each depth level: the model density at the
/// axis point whose population depth equals the level.
fn density_levels(model: &LpSymmetricModel, levels: &[f64]) -> Result<Vec<f64>> {
    levels
        .iter()
        .map(|&l| {
            let x = model.axis_quantile(l)?;
            Ok(model.density(&[x, 0.0])?)
        })
        .collect()
}

const PALETTE: [&str; 6] = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"];

fn cmd_contours(a: ContoursArgs, out: &mut String) -> Result<()> {
    let p = parse_p(&a.p)?;
    let levels = parse_floats(&a.levels)?;
    if levels.iter().any(|&l| !(l > 0.0 && l <= 0.5)) {
        return Err(CliError::usage("--levels must lie in (0, 0.5]"));
    }
    if a.grid < 2 {
        return Err(CliError::usage("--grid must be at least 2"));
    }
    let model = LpSymmetricModel::new(p, 2)?;
    let data = model.sample(a.n, a.seed)?;

    // population contours of every level lie within the box |x_j| <= axis quantile
    let lowest = levels.iter().copied().fold(f64::INFINITY, f64::min);
    let half = 1.15 * model.axis_quantile(lowest)?;
    let grid = GridSpec::centered(half, a.grid)?;
    let depths = parallel::depth_grid(&data, &grid)?;
    let densities: Vec<f64> = (0..grid.len())
        .map(|k| model.density(&grid.node(k)))
        .collect::<depthlab_core::Result<_>>()?;
    let dens_levels = density_levels(&model, &levels)?;

    let prov = Provenance {
        seed: Some(a.seed),
        cmd: format!(
            "contours --p {p} --n {} --grid {} --levels {} --seed {}{} --out {}",
            a.n,
            a.grid,
            levels.iter().map(|v| fmt_f64(*v)).collect::<Vec<_>>().join(","),
            a.seed,
            opt_path("--svg", &a.svg),
            path_str(&a.out)
        ),
    };
    let mut csv = Csv::new(&prov, &["gx", "gy", "depth", "density"]);
    for k in 0..grid.len() {
        let [x, y] = grid.node(k);
        csv.row([fmt_f64(x), fmt_f64(y), fmt_f64(depths[k]), fmt_f64(densities[k])]);
    }
    csv.write(&a.out)?;

    let mut lines: Vec<(&str, usize, Polyline)> = Vec::new();
    for (i, &level) in levels.iter().enumerate() {
        for line in iso_lines(&depths, &grid, level) {
            lines.push(("depth", i, line));
        }
        for mut line in iso_lines(&densities, &grid, dens_levels[i]) {
            line.level = level;
            lines.push(("density", i, line));
        }
    }
    let mut poly = Csv::new(&prov, &["kind", "level", "line", "x", "y"]);
    for (id, (kind, _, line)) in lines.iter().enumerate() {
        let closing = if line.closed { line.points.first() } else { None };
        for pt in line.points.iter().chain(closing) {
            poly.row([kind.to_string(), fmt_f64(line.level), id.to_string(), fmt_f64(pt[0]), fmt_f64(pt[1])]);
        }
    }
    poly.write(&sibling(&a.out, "polylines.csv"))?;
    out.push_str(&format!("{} grid nodes, {} polylines\n", grid.len(), lines.len()));

    if let Some(svg) = &a.svg {
        let plot = Plot {
            title: format!("depth (solid) and density (dashed) contours, p = {p}, n = {}", a.n),
            x_label: "x1".into(),
            y_label: "x2".into(),
            x_range: [grid.x_min, grid.x_max],
            y_range: [grid.y_min, grid.y_max],
            series: lines
                .iter()
                .map(|(kind, i, line)| Series {
                    points: line.points.clone(),
                    closed: line.closed,
                    stroke: PALETTE[i % PALETTE.len()],
                    dashed: *kind == "density",
                })
                .collect(),
        };
        write_text(svg, &plot.render())?;
    }
    Ok(())
}

fn cmd_infdim(a: InfdimArgs, out: &mut String) -> Result<()> {
    if a.dmax == 0 || a.draws == 0 {
        return Err(CliError::usage("--dmax and --draws must be positive"));
    }
    let (model, profile) = match a.profile {
        ProfileArg::InverseSquare => (SequenceModel::new(SigmaProfile::InverseSquare)?, "inverse-square"),
        ProfileArg::Geometric => (SequenceModel::new(SigmaProfile::Geometric)?, "geometric"),
    };
    let d_grid: Vec<usize> = (1..=a.dmax).collect();
    let table = parallel::decay_experiment(&model, a.draws, &d_grid, a.seed)?;

    let prov = Provenance {
        seed: Some(a.seed),
        cmd: format!(
            "infdim --dmax {} --draws {} --seed {} --profile {profile} --out {}",
            a.dmax,
            a.draws,
            a.seed,
            path_str(&a.out)
        ),
    };
    let mut csv = Csv::new(&prov, &["draw", "d", "bound"]);
    for (draw, row) in table.bounds.iter().enumerate() {
        for (d, b) in d_grid.iter().zip(row) {
            csv.row([draw.to_string(), d.to_string(), fmt_f64(b.value)]);
        }
    }
    csv.write(&a.out)?;
    let mut summary = Csv::new(&prov, &["d", "median", "max"]);
    for (k, d) in d_grid.iter().enumerate() {
        summary.row([d.to_string(), fmt_f64(table.median[k]), fmt_f64(table.max[k])]);
    }
    summary.write(&sibling(&a.out, "summary.csv"))?;
    let last = d_grid.len() - 1;
    out.push_str(&format!(
        "d {} median bound {} max bound {}\n",
        a.dmax,
        fmt_f64(table.median[last]),
        fmt_f64(table.max[last])
    ));
    Ok(())
}

fn cmd_study(a: StudyArgs, out: &mut String) -> Result<()> {
    let file = read_study_config(&a.config)?;
    let mut config = file.config;
    config.seed = a
        .seed
        .or(file.seed)
        .ok_or_else(|| CliError::usage("no seed: set `seed` in the config or pass --seed"))?;
    if let Some(r) = a.replications {
        config.replications = r;
    }
    if let Some(m) = a.bootstrap {
        config.bootstrap = m;
    }
    if let Some(alpha) = &a.alpha {
        config.alphas = parse_floats(alpha)?;
    }
    let rows = parallel::run_study(&config)?;

    let mut cmd = format!("study --config {} --out {} --seed {}", path_str(&a.config), path_str(&a.out), config.seed);
    if let Some(r) = a.replications {
        cmd.push_str(&format!(" --replications {r}"));
    }
    if let Some(m) = a.bootstrap {
        cmd.push_str(&format!(" --bootstrap {m}"));
    }
    if a.alpha.is_some() {
        let alphas: Vec<String> = config.alphas.iter().map(|v| fmt_f64(*v)).collect();
        cmd.push_str(&format!(" --alpha {}", alphas.join(",")));
    }
    let prov = Provenance { seed: Some(config.seed), cmd };
    let mut csv = Csv::new(&prov, &["dist", "d", "n", "alpha", "rate", "R", "M", "seed"]);
    for r in &rows {
        csv.row([
            r.dist.to_string(),
            r.d.to_string(),
            r.n.to_string(),
            fmt_f64(r.alpha),
            fmt_f64(r.rate()),
            r.replications.to_string(),
            r.bootstrap.to_string(),
            r.seed.to_string(),
        ]);
        out.push_str(&format!("{} d={} n={} alpha={} rate={}\n", r.dist, r.d, r.n, fmt_f64(r.alpha), fmt_f64(r.rate())));
    }
    csv.write(&a.out)?;
    Ok(())
}

fn cmd_sample(a: SampleArgs, out: &mut String) -> Result<()> {
    let (data, seed, canonical) = a
        .model
        .sample()?
        .ok_or_else(|| CliError::usage("give a model with --p or --dist"))?;
    let prov = Provenance { seed: Some(seed), cmd: format!("sample {canonical} --out {}", path_str(&a.out)) };
    write_dataset(&a.out, &data, &prov)?;
    out.push_str(&format!("{} points in d={}\n", data.len(), data.dim()));
    Ok(())
}
