//! Command-line front end: argument parsing, dispatch and report output.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use reflect_vertex::bethe::{check_coordinate_relation, eval_f, momenta_from_spectral};
use reflect_vertex::detformula::{domain_wall_det, domain_wall_det_homogeneous, DomainWallInput};
use reflect_vertex::lattice::{dual_wavefunction_oracle, wavefunction_oracle};
use reflect_vertex::scalarfield::{fmt_scalar, parse_scalar, parse_scalar_list, sample_point};
use reflect_vertex::symfunc::{dual_symmetric_function, symmetric_function, SymFuncInput};
use reflect_vertex::verify::{
    check_bethe_auxiliary, check_domain_wall, check_domain_wall_homogeneous, check_lemma_identity, check_pairing,
    check_properties, check_wavefunction_symfunc, run_suite, Check, CheckContext, Columns, Property,
};
use reflect_vertex::{Constraints, ModelParams, OccupationConfig, SamplePoint, Scalar, VerificationReport};

pub const SEED_ENV: &str = "REFLECT_VERTEX_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Compute,
    Verify,
    Bench,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "wavefunction")]
    Wavefunction,
    #[value(name = "dual")]
    Dual,
    #[value(name = "symfunc")]
    Symfunc,
    #[value(name = "dual-symfunc")]
    DualSymfunc,
    #[value(name = "dwbc-det")]
    DwbcDet,
    #[value(name = "dwbc-hom")]
    DwbcHom,
    #[value(name = "bethe-f")]
    BetheF,
    #[value(name = "lemma")]
    Lemma,
    #[value(name = "properties")]
    Properties,
    #[value(name = "theorem52")]
    Theorem52,
    #[value(name = "pairing")]
    Pairing,
    #[value(name = "all")]
    All,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Wavefunction => "wavefunction",
            Target::Dual => "dual",
            Target::Symfunc => "symfunc",
            Target::DualSymfunc => "dual-symfunc",
            Target::DwbcDet => "dwbc-det",
            Target::DwbcHom => "dwbc-hom",
            Target::BetheF => "bethe-f",
            Target::Lemma => "lemma",
            Target::Properties => "properties",
            Target::Theorem52 => "theorem52",
            Target::Pairing => "pairing",
            Target::All => "all",
        }
    }

    /// Admissibility conditions an explicit point must meet for this target.
    pub fn constraints(self) -> Constraints {
        match self {
            Target::Wavefunction
            | Target::Dual
            | Target::Symfunc
            | Target::DualSymfunc
            | Target::Theorem52
            | Target::Lemma => Constraints::SKIP_QUADRATIC | Constraints::SKIP_COLUMNS,
            Target::Properties => Constraints::AVOID_CROSSING | Constraints::SKIP_QUADRATIC | Constraints::SKIP_COLUMNS,
            Target::DwbcDet | Target::Pairing => Constraints::SKIP_QUADRATIC,
            Target::DwbcHom | Target::BetheF => Constraints::HOMOGENEOUS | Constraints::AVOID_CROSSING,
            Target::All => Constraints::empty(),
        }
    }

    /// How many spectral parameters the target consumes at size (m, n).
    fn spectral_count(self, m: usize, n: usize) -> usize {
        match self {
            Target::DwbcDet | Target::DwbcHom | Target::Pairing => m,
            Target::Lemma => 1,
            _ => n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "reflect-vertex", version, about = "Exact wavefunctions of the reflecting six-vertex model")]
struct RawArgs {
    command: Command,
    #[arg(long, value_enum, default_value = "all")]
    target: Target,
    /// Lattice width
    #[arg(long = "M")]
    m: Option<usize>,
    /// Particle count
    #[arg(long = "N")]
    n: Option<usize>,
    /// Comma-separated particle (or hole) positions
    #[arg(long)]
    x: Option<String>,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    seed: u64,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Comma-separated spectral parameters
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Comma-separated inhomogeneities
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,
    /// Report measured elapsed times instead of zero
    #[arg(long)]
    timings: bool,
}

/// Explicit parameter values that replace sampled ones.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PointOverrides {
    pub a: Option<Scalar>,
    pub b: Option<Scalar>,
    pub z: Option<Vec<Scalar>>,
    pub w: Option<Vec<Scalar>>,
}

impl PointOverrides {
    pub fn is_empty(&self) -> bool {
        self.a.is_none() && self.b.is_none() && self.z.is_none() && self.w.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub target: Target,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub x: Option<Vec<usize>>,
    pub seed: u64,
    pub overrides: PointOverrides,
    pub output: OutputFormat,
    pub trials: u32,
    pub timings: bool,
}

#[derive(Debug)]
pub enum CliError {
    /// Help or version request, or a clap parse failure.
    Clap(clap::Error),
    Usage(String),
    Engine(reflect_vertex::Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Clap(e) => e.exit_code(),
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Clap(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "error: {msg}"),
            CliError::Engine(e) => write!(f, "error: {e}"),
            CliError::Io(e) => write!(f, "error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<reflect_vertex::Error> for CliError {
    fn from(e: reflect_vertex::Error) -> Self {
        CliError::Engine(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn flag_scalar(flag: &str, text: &Option<String>) -> Result<Option<Scalar>, CliError> {
    text.as_deref().map(|t| parse_scalar(t).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))).transpose()
}

fn flag_scalars(flag: &str, text: &Option<String>) -> Result<Option<Vec<Scalar>>, CliError> {
    text.as_deref().map(|t| parse_scalar_list(t).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))).transpose()
}

fn parse_positions(text: &str) -> Result<Vec<usize>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let xs = text
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("--x: malformed position '{s}'"))))
        .collect::<Result<Vec<_>, _>>()?;
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage(format!("--x: positions {xs:?} not increasing")));
    }
    if xs.first() == Some(&0) {
        return Err(CliError::Usage("--x: positions start at 1".into()));
    }
    Ok(xs)
}

/// Parses the arguments after the program name.
pub fn parse_args<I, S>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let raw = RawArgs::try_parse_from(std::iter::once("reflect-vertex".into()).chain(argv.into_iter().map(Into::into)))
        .map_err(CliError::Clap)?;
    let x = raw.x.as_deref().map(parse_positions).transpose()?;
    if let (Some(x), Some(m)) = (&x, raw.m) {
        if let Some(&p) = x.iter().find(|&&p| p > m) {
            return Err(CliError::Usage(format!("--x: position {p} outside 1..{m}")));
        }
    }
    if let (Some(m), Some(n)) = (raw.m, raw.n) {
        if n > m {
            return Err(CliError::Usage(format!("--N {n} exceeds --M {m}")));
        }
    }
    let overrides = PointOverrides {
        a: flag_scalar("a", &raw.a)?,
        b: flag_scalar("b", &raw.b)?,
        z: flag_scalars("z", &raw.z)?,
        w: flag_scalars("w", &raw.w)?,
    };
    let config = RunConfig {
        command: raw.command,
        target: raw.target,
        m: raw.m,
        n: raw.n,
        x,
        seed: raw.seed,
        overrides,
        output: raw.output,
        trials: raw.trials,
        timings: raw.timings,
    };
    if config.target == Target::All && !config.overrides.is_empty() {
        return Err(CliError::Usage("explicit point overrides need a single target, not 'all'".into()));
    }
    let o = &config.overrides;
    if let (Some(a), Some(b), Some(z), Some(w)) = (&o.a, &o.b, &o.z, &o.w) {
        let point = SamplePoint { a: a.clone(), b: b.clone(), z: z.clone(), w: w.clone(), seed: config.seed };
        point.validate(config.target.constraints())?;
    }
    Ok(config)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn join_scalars(xs: &[Scalar]) -> String {
    xs.iter().map(fmt_scalar).collect::<Vec<_>>().join(",")
}

impl RunConfig {
    /// Arguments that [`parse_args`] maps back to `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut args = vec![
            self.command.to_possible_value().expect("named").get_name().to_string(),
            "--target".into(),
            self.target.name().into(),
        ];
        let mut push = |flag: &str, value: String| {
            args.push(format!("--{flag}"));
            args.push(value);
        };
        if let Some(m) = self.m {
            push("M", m.to_string());
        }
        if let Some(n) = self.n {
            push("N", n.to_string());
        }
        if let Some(x) = &self.x {
            push("x", join(x));
        }
        push("seed", self.seed.to_string());
        if let Some(a) = &self.overrides.a {
            push("a", fmt_scalar(a));
        }
        if let Some(b) = &self.overrides.b {
            push("b", fmt_scalar(b));
        }
        if let Some(z) = &self.overrides.z {
            push("z", join_scalars(z));
        }
        if let Some(w) = &self.overrides.w {
            push("w", join_scalars(w));
        }
        push("output", self.output.to_possible_value().expect("named").get_name().into());
        push("trials", self.trials.to_string());
        if self.timings {
            args.push("--timings".into());
        }
        args
    }

    /// Lattice width and particle count after defaults.
    pub fn size(&self) -> (usize, usize) {
        let o = &self.overrides;
        let m = self.m.or(o.w.as_ref().map(Vec::len)).or(self.x.as_ref().and_then(|x| x.last().copied())).unwrap_or(3);
        let from_z = match self.target {
            Target::DwbcDet | Target::DwbcHom | Target::Lemma => None,
            _ => o.z.as_ref().map(Vec::len),
        };
        let n = match self.target {
            Target::DwbcDet | Target::DwbcHom => m,
            _ => self.n.or(self.x.as_ref().map(Vec::len)).or(from_z).unwrap_or(m.min(2)),
        };
        (m, n)
    }

    /// The sampled point for this run with explicit overrides applied.
    pub fn point(&self) -> Result<SamplePoint, CliError> {
        let (m, n) = self.size();
        let constraints = self.target.constraints();
        let mut point = sample_point(self.seed, m, self.target.spectral_count(m, n), constraints)?;
        let o = &self.overrides;
        if let Some(a) = &o.a {
            point.a = a.clone();
        }
        if let Some(b) = &o.b {
            point.b = b.clone();
        }
        if let Some(z) = &o.z {
            point.z = z.clone();
        }
        if let Some(w) = &o.w {
            point.w = w.clone();
        }
        if point.w.len() != m {
            return Err(CliError::Usage(format!("--w has {} entries, expected M = {m}", point.w.len())));
        }
        let need = self.target.spectral_count(m, n);
        if point.z.len() != need {
            return Err(CliError::Usage(format!("--z has {} entries, expected {need}", point.z.len())));
        }
        point.validate(constraints)?;
        Ok(point)
    }

    fn configurations(&self, m: usize, n: usize) -> Result<Vec<OccupationConfig>, CliError> {
        match &self.x {
            Some(x) => {
                if x.len() != n {
                    return Err(CliError::Usage(format!("--x has {} positions, expected N = {n}", x.len())));
                }
                Ok(vec![OccupationConfig::new(m, x.clone())?])
            }
            None => Ok(OccupationConfig::all(m, n)),
        }
    }
}

fn params_of(point: &SamplePoint) -> Result<ModelParams, CliError> {
    Ok(ModelParams::new(point.a.clone(), point.b.clone())?)
}

/// The quantity computed by `compute`.
pub fn compute(config: &RunConfig) -> Result<(SamplePoint, Scalar), CliError> {
    let (m, n) = config.size();
    let point = config.point()?;
    let params = params_of(&point)?;
    let single_x = || -> Result<OccupationConfig, CliError> {
        let x = config.x.clone().unwrap_or_else(|| (1..=n).collect());
        if x.len() != n {
            return Err(CliError::Usage(format!("--x has {} positions, expected N = {n}", x.len())));
        }
        Ok(OccupationConfig::new(m, x)?)
    };
    let value = match config.target {
        Target::Wavefunction => wavefunction_oracle(&params, &point.z, &point.w, &single_x()?)?,
        Target::Dual => dual_wavefunction_oracle(&params, &point.z, &point.w, &single_x()?)?,
        Target::Symfunc => {
            symmetric_function(&SymFuncInput::new(params, point.z.clone(), point.w.clone(), single_x()?)?)?
        }
        Target::DualSymfunc => {
            dual_symmetric_function(&SymFuncInput::new(params, point.z.clone(), point.w.clone(), single_x()?)?)?
        }
        Target::DwbcDet => domain_wall_det(&DomainWallInput::new(params, point.z.clone(), point.w.clone())?)?,
        Target::DwbcHom => domain_wall_det_homogeneous(&params, &point.z)?,
        Target::BetheF => eval_f(&momenta_from_spectral(&params, &point.z, m)?, &single_x()?)?,
        other => {
            return Err(CliError::Usage(format!("target '{}' is a verification target; use verify", other.name())))
        }
    };
    Ok((point, value))
}

/// Reports for `verify`.
pub fn verify(config: &RunConfig) -> Result<Vec<VerificationReport>, CliError> {
    if config.target == Target::All {
        let sizes: Vec<(usize, usize)> = match (config.m, config.n) {
            (Some(m), Some(n)) => vec![(m, n)],
            (Some(m), None) => (1..=m).map(|n| (m, n)).collect(),
            _ => (1..=3).flat_map(|m| (1..=m).map(move |n| (m, n))).collect(),
        };
        return Ok(run_suite(config.seed, &sizes, &Check::ALL)?);
    }
    let (m, n) = config.size();
    let point = config.point()?;
    let params = params_of(&point)?;
    let ctx = CheckContext::new(config.seed);
    let (z, w) = (&point.z, &point.w);
    let mut out = Vec::new();
    match config.target {
        Target::Wavefunction | Target::Symfunc | Target::Dual | Target::DualSymfunc | Target::Theorem52 => {
            let duals: &[bool] = match config.target {
                Target::Wavefunction | Target::Symfunc => &[false],
                Target::Dual | Target::DualSymfunc => &[true],
                _ => &[false, true],
            };
            for x in config.configurations(m, n)? {
                for &dual in duals {
                    out.push(check_wavefunction_symfunc(&ctx, &params, z, w, &x, dual)?);
                }
            }
        }
        Target::Properties => {
            for x in config.configurations(m, n)? {
                for dual in [false, true] {
                    out.extend(check_properties(&ctx, &params, z, w, &x, &Property::ALL, dual)?);
                }
            }
        }
        Target::Lemma => out.push(check_lemma_identity(&ctx, &params, &z[0], w, m + 1)?),
        Target::DwbcDet => out.push(check_domain_wall(&ctx, &params, z, w)?),
        Target::DwbcHom => out.push(check_domain_wall_homogeneous(&ctx, &params, z)?),
        Target::Pairing => {
            let columns = if w.iter().all(|w| *w == Scalar::from_integer(1.into())) {
                Columns::Homogeneous
            } else {
                Columns::Inhomogeneous(w)
            };
            out.push(check_pairing(&ctx, &params, z, columns, n)?);
        }
        Target::BetheF => {
            for x in config.configurations(m, n)? {
                out.push(check_coordinate_relation(&ctx, &params, z, &x)?);
            }
            if z.len() >= 2 {
                out.extend(check_bethe_auxiliary(&ctx, &params, &z[0], &z[1])?);
            }
        }
        Target::All => unreachable!("handled above"),
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct ReportJson<'a> {
    check_id: &'a str,
    paper_ref: &'a str,
    seed: u64,
    point: &'a str,
    lhs: String,
    rhs: String,
    passed: bool,
    elapsed_ms: f64,
}

/// Writes the reports; elapsed times are zeroed unless `timings` is set,
/// which keeps output byte-identical across runs.
pub fn emit_report(
    reports: &[VerificationReport],
    format: OutputFormat,
    timings: bool,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let elapsed = |r: &VerificationReport| if timings { r.elapsed.as_secs_f64() * 1e3 } else { 0.0 };
    match format {
        OutputFormat::Json => {
            let rows: Vec<ReportJson> = reports
                .iter()
                .map(|r| ReportJson {
                    check_id: &r.check_id,
                    paper_ref: &r.paper_ref,
                    seed: r.seed,
                    point: &r.point_summary,
                    lhs: fmt_scalar(&r.lhs),
                    rhs: fmt_scalar(&r.rhs),
                    passed: r.passed,
                    elapsed_ms: elapsed(r),
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)
        }
        OutputFormat::Text => {
            for r in reports {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                write!(
                    out,
                    "{verdict} {} seed={} {} lhs={} rhs={}",
                    r.check_id,
                    r.seed,
                    r.point_summary,
                    fmt_scalar(&r.lhs),
                    fmt_scalar(&r.rhs)
                )?;
                if timings {
                    write!(out, " {:.3}ms", elapsed(r))?;
                }
                writeln!(out)?;
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            writeln!(out, "{passed}/{} passed", reports.len())
        }
    }
}

/// 0 when every report passed, 1 otherwise.
pub fn exit_status(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.passed) {
        0
    } else {
        1
    }
}

#[derive(Debug, Serialize)]
struct BenchRow {
    quantity: &'static str,
    m: usize,
    n: usize,
    trials: u32,
    mean_ms: f64,
}

/// Wall-clock sweep of the symmetric function and the brute-force oracle.
pub fn bench(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let sizes: Vec<(usize, usize)> = match (config.m, config.n) {
        (Some(m), Some(n)) => vec![(m, n)],
        (Some(m), None) => (1..=m.min(6)).map(|n| (m, n)).collect(),
        _ => vec![(2, 1), (4, 2), (6, 3), (8, 4)],
    };
    let mut rows = Vec::new();
    for (m, n) in sizes {
        let point = sample_point(config.seed, m, n, Constraints::empty())?;
        let params = params_of(&point)?;
        let x = OccupationConfig::leading(m, n)?;
        let input = SymFuncInput::new(params.clone(), point.z.clone(), point.w.clone(), x.clone())?;
        let time = |f: &dyn Fn() -> reflect_vertex::Result<Scalar>| -> Result<f64, CliError> {
            let started = Instant::now();
            for _ in 0..config.trials {
                f()?;
            }
            Ok(started.elapsed().as_secs_f64() * 1e3 / f64::from(config.trials))
        };
        let f_ms = time(&|| symmetric_function(&input))?;
        let w_ms = time(&|| wavefunction_oracle(&params, &point.z, &point.w, &x))?;
        rows.push(BenchRow { quantity: "symmetric_function", m, n, trials: config.trials, mean_ms: f_ms });
        rows.push(BenchRow { quantity: "wavefunction_oracle", m, n, trials: config.trials, mean_ms: w_ms });
    }
    match config.output {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        OutputFormat::Text => {
            for r in &rows {
                writeln!(
                    out,
                    "{:<20} M={:<2} N={:<2} {:>12.3} ms (mean of {})",
                    r.quantity, r.m, r.n, r.mean_ms, r.trials
                )?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct ComputeJson<'a> {
    target: &'a str,
    point: String,
    value: String,
}

/// Executes a parsed configuration; returns the process exit status.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    match config.command {
        Command::Compute => {
            let (point, value) = compute(config)?;
            match config.output {
                OutputFormat::Text => writeln!(out, "{}", fmt_scalar(&value))?,
                OutputFormat::Json => {
                    let row =
                        ComputeJson { target: config.target.name(), point: point.summary(), value: fmt_scalar(&value) };
                    serde_json::to_writer_pretty(&mut *out, &row).map_err(std::io::Error::from)?;
                    writeln!(out)?;
                }
            }
            Ok(0)
        }
        Command::Verify => {
            let reports = verify(config)?;
            emit_report(&reports, config.output, config.timings, out)?;
            Ok(exit_status(&reports))
        }
        Command::Bench => {
            bench(config, out)?;
            Ok(0)
        }
    }
}
