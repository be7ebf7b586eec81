//! Library half of the `ninepoint` command: argument types, input
//! resolution and the four subcommands. `main.rs` only maps the outcome to
//! a process exit code.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use feuerbach_core::harness::{float_tolerance, run_fuzz, Backend, FuzzProfile, ProfileKind};
use feuerbach_core::{Error, Point2, Rational, Scalar, SideLengths, ToleranceProfile, Triangle};

pub mod report;
pub mod svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_RESIDUAL: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "ninepoint", version, about = "Triangle centers and nine-point circle tangency, exact or in floating point")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Metrics and classical centers of one triangle.
    Compute(InputArgs),
    /// Tangency of the nine-point circle with the incircle and excircles.
    Feuerbach(InputArgs),
    /// Run the identity suite over a seeded batch of random triangles.
    Fuzz(FuzzArgs),
    /// Draw the triangle, its centers and circles as SVG.
    Svg(InputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, default_value = "exact")]
    pub backend: Backend,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = ToleranceProfile::DEFAULT_REL_EPS)]
    pub rel_eps: f64,
    #[arg(long, default_value_t = ToleranceProfile::DEFAULT_ABS_EPS)]
    pub abs_eps: f64,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Side lengths `a,b,c` opposite A, B, C: integers, `p/q` or decimals.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "vertices", conflicts_with = "vertices")]
    pub sides: Option<String>,
    /// Vertex coordinates `ax,ay,bx,by,cx,cy`.
    #[arg(long, allow_hyphen_values = true)]
    pub vertices: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    #[arg(long, default_value = "generic")]
    pub profile: ProfileKind,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest integer drawn for heights and slope parameters.
    #[arg(long, default_value_t = 1000)]
    pub bound: u32,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Input(_) | CliError::Core(_) => EXIT_INVALID_INPUT,
        }
    }
}

/// What a successful run produced. `code` is nonzero when the run itself
/// worked but a residual or identity check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
    /// Set when the output went to a file.
    pub written_to: Option<PathBuf>,
}

/// A triangle in one backend, with a planar placement when one exists.
#[derive(Debug, Clone)]
pub struct Problem<S> {
    pub sides: SideLengths<S>,
    pub embedding: Option<Triangle<S>>,
    pub vertices_given: bool,
}

impl<S: Scalar> Problem<S> {
    fn from_sides(sides: SideLengths<S>) -> Self {
        let embedding = Triangle::from_sides(&sides);
        Problem { sides, embedding, vertices_given: false }
    }
}

impl Problem<Rational> {
    pub fn to_f64(&self) -> Result<Problem<f64>, CliError> {
        let [a, b, c] = self.sides.as_array().map(|x| x.to_f64());
        let sides = SideLengths::new(a, b, c)?;
        let embedding = match &self.embedding {
            Some(t) => Some(t.to_f64()),
            None => Triangle::from_sides(&sides),
        };
        Ok(Problem { sides, embedding, vertices_given: self.vertices_given })
    }
}

/// Resolved input. Exact coordinate input whose sides are irrational runs
/// in floats; `fell_back` records that.
#[derive(Debug, Clone)]
pub enum Resolved {
    Exact(Box<Problem<Rational>>),
    Float { problem: Problem<f64>, fell_back: bool },
}

fn split_values(raw: &str, want: usize, what: &str) -> Result<Vec<String>, CliError> {
    let parts: Vec<String> = raw.split(',').map(|s| s.trim().to_string()).collect();
    if parts.len() != want || parts.iter().any(|p| p.is_empty()) {
        return Err(CliError::Input(format!("--{what} expects {want} comma-separated values, got `{raw}`")));
    }
    Ok(parts)
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.parse::<Rational>().map_err(CliError::from)
}

fn parse_float(s: &str) -> Result<f64, CliError> {
    let x = match s.parse::<f64>() {
        Ok(x) => x,
        Err(_) => parse_rational(s)?.to_f64(),
    };
    if !x.is_finite() {
        return Err(Error::NonFinite(s.to_string()).into());
    }
    Ok(x)
}

fn points<S: Scalar>(v: Vec<S>) -> Result<Triangle<S>, CliError> {
    let mut it = v.into_iter();
    let mut next = || {
        let x = it.next().expect("six values");
        let y = it.next().expect("six values");
        Point2::new(x, y)
    };
    let (a, b, c) = (next(), next(), next());
    Ok(Triangle::new(a, b, c)?)
}

fn float_from_triangle(tri: Triangle<f64>) -> Result<Problem<f64>, CliError> {
    let sides = tri
        .side_lengths()
        .ok_or_else(|| CliError::Input("vertices do not form a triangle".into()))?;
    Ok(Problem { sides, embedding: Some(tri), vertices_given: true })
}

pub fn resolve_input(args: &InputArgs) -> Result<Resolved, CliError> {
    match (&args.sides, &args.vertices, args.common.backend) {
        (Some(raw), _, Backend::Exact) => {
            let v = split_values(raw, 3, "sides")?.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
            let [a, b, c]: [Rational; 3] = v.try_into().expect("three values");
            Ok(Resolved::Exact(Box::new(Problem::from_sides(SideLengths::new(a, b, c)?))))
        }
        (Some(raw), _, Backend::Float) => {
            let v = split_values(raw, 3, "sides")?.iter().map(|s| parse_float(s)).collect::<Result<Vec<_>, _>>()?;
            let [a, b, c]: [f64; 3] = v.try_into().expect("three values");
            Ok(Resolved::Float { problem: Problem::from_sides(SideLengths::new(a, b, c)?), fell_back: false })
        }
        (None, Some(raw), Backend::Exact) => {
            let v = split_values(raw, 6, "vertices")?.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
            let tri = points(v)?;
            match tri.side_lengths() {
                Some(sides) => Ok(Resolved::Exact(Box::new(Problem { sides, embedding: Some(tri), vertices_given: true }))),
                None => Ok(Resolved::Float { problem: float_from_triangle(tri.to_f64())?, fell_back: true }),
            }
        }
        (None, Some(raw), Backend::Float) => {
            let v = split_values(raw, 6, "vertices")?.iter().map(|s| parse_float(s)).collect::<Result<Vec<_>, _>>()?;
            Ok(Resolved::Float { problem: float_from_triangle(points(v)?)?, fell_back: false })
        }
        (None, None, _) => Err(CliError::Input("one of --sides or --vertices is required".into())),
    }
}

pub fn tolerance(common: &CommonArgs) -> Result<ToleranceProfile, CliError> {
    Ok(ToleranceProfile::new(common.rel_eps, common.abs_eps)?)
}

fn deliver(output: String, code: i32, common: &CommonArgs) -> Result<Outcome, CliError> {
    match &common.out {
        Some(path) => {
            fs::write(path, &output).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(Outcome { output, code, written_to: Some(path.clone()) })
        }
        None => Ok(Outcome { output, code, written_to: None }),
    }
}

fn render_figure(resolved: &Resolved) -> Result<String, CliError> {
    let figure = match resolved {
        Resolved::Exact(p) => match svg::Figure::from_problem(p.as_ref()) {
            Some(f) => f,
            None => {
                let equilateral = p.sides.is_equilateral();
                let mut f = svg::Figure::from_problem(&p.to_f64()?)
                    .ok_or_else(|| CliError::Input("triangle cannot be placed in the plane".into()))?;
                f.equilateral = equilateral;
                f
            }
        },
        Resolved::Float { problem, .. } => svg::Figure::from_problem(problem)
            .ok_or_else(|| CliError::Input("triangle cannot be placed in the plane".into()))?,
    };
    Ok(figure.render())
}

fn cmd_compute(args: &InputArgs) -> Result<Outcome, CliError> {
    let tol = tolerance(&args.common)?;
    let resolved = resolve_input(args)?;
    let output = match args.common.format.unwrap_or(Format::Json) {
        Format::Svg => render_figure(&resolved)?,
        format => {
            let value = match &resolved {
                Resolved::Exact(p) => report::compute_value(p, &tol, false),
                Resolved::Float { problem, fell_back } => report::compute_value(problem, &tol, *fell_back),
            };
            match format {
                Format::Json => report::to_canonical_json(&value),
                _ => report::compute_text(&value),
            }
        }
    };
    deliver(output, EXIT_OK, &args.common)
}

fn cmd_feuerbach(args: &InputArgs) -> Result<Outcome, CliError> {
    let tol = tolerance(&args.common)?;
    let resolved = resolve_input(args)?;
    let (value, ok) = match &resolved {
        Resolved::Exact(p) => report::feuerbach_value(p, &tol, false),
        Resolved::Float { problem, fell_back } => {
            let scaled = float_tolerance(&tol, problem.sides.conditioning())?;
            report::feuerbach_value(problem, &scaled, *fell_back)
        }
    };
    let output = match args.common.format.unwrap_or(Format::Json) {
        Format::Json => report::to_canonical_json(&value),
        Format::Text => report::feuerbach_text(&value),
        Format::Svg => render_figure(&resolved)?,
    };
    deliver(output, if ok { EXIT_OK } else { EXIT_RESIDUAL }, &args.common)
}

fn cmd_fuzz(args: &FuzzArgs) -> Result<Outcome, CliError> {
    let tol = tolerance(&args.common)?;
    let profile = FuzzProfile::new(args.profile, args.bound, args.count, args.seed)?;
    let summary = run_fuzz(&profile, args.common.backend, &tol)?;
    let output = match args.common.format.unwrap_or(Format::Text) {
        Format::Text => summary.to_string(),
        Format::Json => report::to_canonical_json(&serde_json::to_value(&summary).expect("summary serializes")),
        Format::Svg => return Err(CliError::Input("fuzz has no SVG output".into())),
    };
    deliver(output, if summary.all_passed() { EXIT_OK } else { EXIT_RESIDUAL }, &args.common)
}

fn cmd_svg(args: &InputArgs) -> Result<Outcome, CliError> {
    if matches!(args.common.format, Some(f) if f != Format::Svg) {
        return Err(CliError::Input("svg only writes SVG".into()));
    }
    let resolved = resolve_input(args)?;
    deliver(render_figure(&resolved)?, EXIT_OK, &args.common)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Feuerbach(a) => cmd_feuerbach(a),
        Command::Fuzz(a) => cmd_fuzz(a),
        Command::Svg(a) => cmd_svg(a),
    }
}

/// Parses `argv` (including the program name) and runs it.
pub fn run_args<I, T>(argv: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Input(e.to_string()))?;
    run(&cli)
}
