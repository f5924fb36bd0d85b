//! Command-line front end: figure presets and generic solvers writing CSV.
//!
//! Exit codes: 0 on success, 1 for usage or input errors, 2 when a numerical
//! routine fails to converge (no output file is left behind).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::clifford::{
    dirac2_evolution, dirac4_evolution, exp_pauli, kappa_parametrization, pauli_line_power, position_evolution,
    sqrt_symbol_check, two_component_pseudoheat, Generator, GeneratorMatrix, KappaVariant, PositionParametrization,
    SquareMatrix,
};
use crate::error::Error;
use crate::evolution::{solve_affine_sqrt, solve_half_derivative, solve_pseudoheat, solve_symbol_spectral, SymbolSpec};
use crate::field::{Field, FieldResult};
use crate::relativistic::{
    commutator_xt_x0, f_function, packet_width, phi_transform, r_function, series_solution_grid,
    spectral_schrodinger, ObservableInputs, SeriesConfig,
};
use crate::special::quadrature::QuadratureConfig;
use crate::transforms::gauss_weierstrass;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "PSEUDOFLOW_THREADS";

#[derive(Debug, Parser)]
#[command(name = "pseudoflow", version, about = "Fractional and pseudodifferential evolution equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Heat vs pseudoheat flow of a Gaussian: columns x,initial,heat,pseudoheat.
    Fig1(Fig1Args),
    /// |Ψ| of the relativistic Schrödinger flow at τ = 0, 0.5, 1.
    Fig2(Fig2Args),
    /// The D̂ transform of x²e^{−x²}: columns x,initial,phi_re,phi_im.
    Fig3(Fig3Args),
    /// Spreading factors R(a) and F(a): columns a,R,F.
    Fig4(Fig4Args),
    /// Solve one evolution equation on a grid.
    Solve(SolveArgs),
    /// Emit a Pauli/Clifford matrix as row,col,re,im.
    Matrix(MatrixArgs),
    /// Packet observables at given a and t.
    Observables(ObservablesArgs),
}

#[derive(Debug, Args)]
struct Output {
    /// Output CSV path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Fig1Args {
    #[arg(long, default_value_t = 1.0)]
    tau: f64,
    #[arg(long, default_value = "-8:8:1024", allow_hyphen_values = true)]
    grid: String,
    #[arg(long, default_value = "gaussian")]
    ic: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Fig2Method {
    Spectral,
    Series,
}

#[derive(Debug, Args)]
struct Fig2Args {
    #[arg(long, default_value = "-8:8:512", allow_hyphen_values = true)]
    grid: String,
    #[arg(long, value_enum, default_value_t = Fig2Method::Spectral)]
    method: Fig2Method,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct Fig3Args {
    #[arg(long, default_value = "-10:10:512", allow_hyphen_values = true)]
    grid: String,
    #[arg(long, default_value = "fig3")]
    ic: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct Fig4Args {
    #[arg(long, default_value_t = 5.0)]
    a_max: f64,
    #[arg(long, default_value_t = 100)]
    steps: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Subordination or convolution integrals.
    Integral,
    /// FFT symbol evolution.
    Spectral,
    /// τ-power series (Schrödinger, Gaussian data only).
    Series,
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// heat, pseudoheat, schrodinger, half_derivative, affine or optics(n).
    #[arg(long)]
    equation: String,
    /// gaussian, gaussian(sigma), fig3 or file=<path>.
    #[arg(long, default_value = "gaussian")]
    ic: String,
    #[arg(long)]
    tau: f64,
    #[arg(long, value_enum, default_value_t = Method::Spectral)]
    method: Method,
    #[arg(long, default_value = "-8:8:1024", allow_hyphen_values = true)]
    grid: String,
    /// Shift `c` of the affine equation.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    c: f64,
    /// Also run the alternative method and report the largest pointwise difference.
    #[arg(long)]
    compare: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixOp {
    Generator,
    ExpPauli,
    Pseudoheat2,
    Dirac2,
    Dirac4,
    Position,
    SqrtSymbol,
    Kappa,
    LinePower,
}

#[derive(Debug, Args)]
struct MatrixArgs {
    #[arg(long, value_enum)]
    op: MatrixOp,
    /// Generator name, e.g. sigma2, alpha1, beta, gamma3, kappa1, delta.
    #[arg(long)]
    name: Option<String>,
    /// Momentum; three comma-separated components for dirac4.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pi: String,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    tau: f64,
    /// Exponent scale for exp-pauli, or time t for pseudoheat2.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    y: f64,
    /// Real three-vector `v1,v2,v3` (exp-pauli) or `w1,w2,w3` (kappa).
    #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
    v: String,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    k: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    r: f64,
    /// i_delta or plain_delta.
    #[arg(long, default_value = "i_delta")]
    variant: String,
    /// dirac or beta_diagonal.
    #[arg(long, default_value = "dirac")]
    parametrization: String,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    b: f64,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    p: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct ObservablesArgs {
    /// Comma-separated values of a = ƛc/σ.
    #[arg(long, default_value = "0.5,1,2")]
    a: String,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    t: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Numerical(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_numerical() {
            Failure::Numerical(e)
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("I/O error: {e}"))
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(msg.into()))
}

/// A finished table plus the figures for the summary line.
struct Table {
    header: Vec<String>,
    rows: Vec<Vec<f64>>,
    error: f64,
    compare: Option<f64>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            error: 0.0,
            compare: None,
        }
    }

    fn to_csv(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for row in &self.rows {
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    s.push(',');
                }
                write!(s, "{}", format_float(*v)).expect("writing to a String");
            }
            s.push('\n');
        }
        s
    }
}

/// Shortest round-trip decimal; exponent form outside `[1e-5, 1e16)`.
pub fn format_float(v: f64) -> String {
    format!("{v:?}")
}

/// Parses `min:max:n`.
pub fn parse_grid(spec: &str) -> Result<(f64, f64, usize), String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid must be min:max:n, got {spec:?}"));
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| format!("bad grid minimum {:?}", parts[0]))?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| format!("bad grid maximum {:?}", parts[1]))?;
    let n: usize = parts[2].trim().parse().map_err(|_| format!("bad grid size {:?}", parts[2]))?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(format!("grid needs finite min < max, got {lo}:{hi}"));
    }
    if n < 2 {
        return Err(format!("grid needs at least 2 points, got {n}"));
    }
    Ok((lo, hi, n))
}

/// Initial condition named on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialCondition {
    /// `e^{−x²}`.
    Gaussian,
    /// `e^{−(x/σ)²}`.
    GaussianWidth(f64),
    /// `x² e^{−x²}`.
    Fig3,
    /// Two-column CSV `x,value`, linearly interpolated, zero outside its range.
    Table(Vec<(f64, f64)>),
}

impl InitialCondition {
    pub fn parse(spec: &str) -> Result<Self, String> {
        let spec = spec.trim();
        if spec == "gaussian" {
            return Ok(Self::Gaussian);
        }
        if spec == "fig3" {
            return Ok(Self::Fig3);
        }
        if let Some(inner) = spec.strip_prefix("gaussian(").and_then(|s| s.strip_suffix(')')) {
            let sigma: f64 = inner.trim().parse().map_err(|_| format!("bad gaussian width {inner:?}"))?;
            if !(sigma > 0.0 && sigma.is_finite()) {
                return Err(format!("gaussian width must be positive, got {sigma}"));
            }
            return Ok(Self::GaussianWidth(sigma));
        }
        if let Some(path) = spec.strip_prefix("file=") {
            let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
            return Self::parse_table(&text).map(Self::Table);
        }
        Err(format!("unknown initial condition {spec:?}"))
    }

    fn parse_table(text: &str) -> Result<Vec<(f64, f64)>, String> {
        let mut pts = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split(',').map(str::trim);
            let (Some(a), Some(b)) = (cols.next(), cols.next()) else {
                return Err(format!("line {}: expected two columns", i + 1));
            };
            match (a.parse::<f64>(), b.parse::<f64>()) {
                (Ok(x), Ok(y)) => pts.push((x, y)),
                _ if pts.is_empty() && i == 0 => continue,
                _ => return Err(format!("line {}: cannot parse {line:?}", i + 1)),
            }
        }
        if pts.len() < 2 {
            return Err("initial-condition file needs at least two rows".into());
        }
        if pts.windows(2).any(|w| !(w[1].0 > w[0].0)) {
            return Err("initial-condition abscissae must increase strictly".into());
        }
        Ok(pts)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Self::Gaussian => (-x * x).exp(),
            Self::GaussianWidth(s) => (-(x / s) * (x / s)).exp(),
            Self::Fig3 => x * x * (-x * x).exp(),
            Self::Table(pts) => {
                let (first, last) = (pts[0], pts[pts.len() - 1]);
                if x < first.0 || x > last.0 {
                    return 0.0;
                }
                let j = pts.partition_point(|p| p.0 <= x).clamp(1, pts.len() - 1);
                let (x0, y0) = pts[j - 1];
                let (x1, y1) = pts[j];
                y0 + (y1 - y0) * (x - x0) / (x1 - x0)
            }
        }
    }

    fn sample(&self, grid: &str) -> CliResult<Field> {
        let (lo, hi, n) = parse_grid(grid).map_err(Failure::Usage)?;
        Ok(Field::from_real_fn(lo, hi, n, |x| self.eval(x))?)
    }
}

fn parse_ic(spec: &str) -> CliResult<InitialCondition> {
    InitialCondition::parse(spec).map_err(Failure::Usage)
}

fn parse_list(spec: &str) -> CliResult<Vec<f64>> {
    spec.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| Failure::Usage(format!("bad number {s:?} in {spec:?}"))))
        .collect()
}

fn parse_vec3(spec: &str) -> CliResult<[f64; 3]> {
    let v = parse_list(spec)?;
    <[f64; 3]>::try_from(v).map_err(|_| Failure::Usage(format!("expected three components, got {spec:?}")))
}

fn field_table(field: &Field, columns: &[(&str, &[Complex64])], complex: bool) -> Table {
    let mut header = vec!["x".to_string()];
    for (name, _) in columns {
        if complex {
            header.push(format!("{name}_re"));
            header.push(format!("{name}_im"));
        } else {
            header.push(name.to_string());
        }
    }
    let mut t = Table::new(&[]);
    t.header = header;
    t.rows = (0..field.len())
        .map(|j| {
            let mut row = vec![field.x(j)];
            for (_, vals) in columns {
                row.push(vals[j].re);
                if complex {
                    row.push(vals[j].im);
                }
            }
            row
        })
        .collect();
    t
}

fn fig1(args: &Fig1Args, cfg: &QuadratureConfig) -> CliResult<Table> {
    let f = parse_ic(&args.ic)?.sample(&args.grid)?;
    let heat = gauss_weierstrass(&f, args.tau, cfg)?;
    let pseudo = solve_pseudoheat(&f, args.tau, cfg)?;
    let mut t = field_table(
        &f,
        &[
            ("initial", f.values()),
            ("heat", heat.field.values()),
            ("pseudoheat", pseudo.field.values()),
        ],
        false,
    );
    t.error = heat.error_estimate.max(pseudo.error_estimate);
    Ok(t)
}

fn fig2(args: &Fig2Args, cfg: &QuadratureConfig) -> CliResult<Table> {
    let f = InitialCondition::Gaussian.sample(&args.grid)?;
    let mut cols = vec![f.values().iter().map(|z| Complex64::new(z.norm(), 0.0)).collect::<Vec<_>>()];
    let mut error = 0.0f64;
    for tau in [0.5, 1.0] {
        let r = match args.method {
            Fig2Method::Spectral => spectral_schrodinger(&f, tau)?,
            Fig2Method::Series => {
                series_solution_grid(f.x_min(), f.x_max(), f.len(), tau, &SeriesConfig::default(), cfg)?
            }
        };
        error = error.max(r.error_estimate);
        cols.push(r.field.values().iter().map(|z| Complex64::new(z.norm(), 0.0)).collect());
    }
    let mut t = field_table(
        &f,
        &[("abs_tau0", &cols[0]), ("abs_tau0.5", &cols[1]), ("abs_tau1", &cols[2])],
        false,
    );
    t.error = error;
    Ok(t)
}

fn fig3(args: &Fig3Args, cfg: &QuadratureConfig) -> CliResult<Table> {
    let f = parse_ic(&args.ic)?.sample(&args.grid)?;
    let phi = phi_transform(&f, cfg)?;
    let mut t = field_table(&f, &[("phi", phi.field.values())], true);
    t.header = ["x", "initial", "phi_re", "phi_im"].map(String::from).to_vec();
    for (row, z) in t.rows.iter_mut().zip(f.values()) {
        row.insert(1, z.re);
    }
    t.error = phi.error_estimate;
    Ok(t)
}

fn fig4(args: &Fig4Args, cfg: &QuadratureConfig) -> CliResult<Table> {
    if !(args.a_max > 0.0 && args.a_max.is_finite()) {
        return usage(format!("--a-max must be positive, got {}", args.a_max));
    }
    if args.steps == 0 {
        return usage("--steps must be positive");
    }
    let rows = (0..=args.steps)
        .into_par_iter()
        .map(|j| {
            let a = args.a_max * j as f64 / args.steps as f64;
            Ok(vec![a, r_function(a, cfg)?, f_function(a, cfg)?])
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mut t = Table::new(&["a", "R", "F"]);
    t.rows = rows;
    Ok(t)
}

fn solve_with(eq: &str, method: Method, f: &Field, tau: f64, c: f64, cfg: &QuadratureConfig) -> CliResult<FieldResult> {
    let r = match (eq, method) {
        ("heat", Method::Integral) => gauss_weierstrass(f, tau, cfg)?,
        ("pseudoheat", Method::Integral) => solve_pseudoheat(f, tau, cfg)?,
        ("half_derivative", Method::Integral) => solve_half_derivative(f, tau, cfg)?,
        ("affine", Method::Integral) => solve_affine_sqrt(f, tau, c, cfg)?,
        ("schrodinger", Method::Series) => {
            let ic = InitialCondition::Gaussian;
            if f.xs().zip(f.values()).any(|(x, z)| (z.re - ic.eval(x)).abs() > 0.0 || z.im != 0.0) {
                return usage("the series method needs --ic gaussian");
            }
            series_solution_grid(f.x_min(), f.x_max(), f.len(), tau, &SeriesConfig::default(), cfg)?
        }
        (_, Method::Spectral) => match SymbolSpec::preset(eq) {
            Some(sym) => solve_symbol_spectral(f, tau, &sym)?,
            None => return usage(format!("no spectral symbol for equation {eq:?}")),
        },
        _ => return usage(format!("method {method:?} is not available for equation {eq:?}")),
    };
    Ok(r)
}

fn alternative(eq: &str, method: Method) -> Option<Method> {
    match (eq, method) {
        ("schrodinger", Method::Spectral) => Some(Method::Series),
        ("affine", _) => None,
        (_, Method::Spectral) if eq.starts_with("optics") => None,
        (_, Method::Spectral) => Some(Method::Integral),
        _ => Some(Method::Spectral),
    }
}

fn solve(args: &SolveArgs, cfg: &QuadratureConfig) -> CliResult<Table> {
    let f = parse_ic(&args.ic)?.sample(&args.grid)?;
    let r = solve_with(&args.equation, args.method, &f, args.tau, args.c, cfg)?;
    let mut t = field_table(&f, &[("value", r.field.values())], true);
    t.error = r.error_estimate;
    if args.compare {
        let Some(other) = alternative(&args.equation, args.method) else {
            return usage(format!("no second method to compare for {:?}", args.equation));
        };
        let o = solve_with(&args.equation, other, &f, args.tau, args.c, cfg)?;
        let d = r
            .field
            .values()
            .iter()
            .zip(o.field.values())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        t.error = t.error.max(o.error_estimate);
        t.compare = Some(d);
    }
    Ok(t)
}

fn matrix_table<const N: usize>(m: &SquareMatrix<N>) -> Table {
    let mut t = Table::new(&["row", "col", "re", "im"]);
    for i in 0..N {
        for j in 0..N {
            t.rows.push(vec![i as f64, j as f64, m[(i, j)].re, m[(i, j)].im]);
        }
    }
    t
}

fn generator_by_name(name: &str) -> Option<Generator> {
    Generator::ALL
        .into_iter()
        .find(|g| format!("{g:?}").eq_ignore_ascii_case(name))
}

fn matrix(args: &MatrixArgs) -> CliResult<Table> {
    let scalar_pi = || -> CliResult<f64> {
        args.pi
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("--pi must be a number, got {:?}", args.pi)))
    };
    let t = match args.op {
        MatrixOp::Generator => {
            let Some(name) = args.name.as_deref() else {
                return usage("--name is required for --op generator");
            };
            match generator_by_name(name).map(Generator::matrix) {
                Some(GeneratorMatrix::Two(m)) => matrix_table(&m),
                Some(GeneratorMatrix::Four(m)) => matrix_table(&m),
                None => return usage(format!("unknown generator {name:?}")),
            }
        }
        MatrixOp::ExpPauli => {
            let v = parse_vec3(&args.v)?.map(Complex64::from);
            matrix_table(&exp_pauli(args.y.into(), v))
        }
        MatrixOp::Pseudoheat2 => matrix_table(&two_component_pseudoheat(args.y, args.k)),
        MatrixOp::Dirac2 => matrix_table(&dirac2_evolution(scalar_pi()?, args.tau)),
        MatrixOp::Dirac4 => matrix_table(&dirac4_evolution(parse_vec3(&args.pi)?, args.tau)),
        MatrixOp::Position => {
            let p = match args.parametrization.as_str() {
                "dirac" => PositionParametrization::Dirac,
                "beta_diagonal" => PositionParametrization::BetaDiagonal,
                other => return usage(format!("unknown parametrization {other:?}")),
            };
            matrix_table(&position_evolution(scalar_pi()?, args.tau, p))
        }
        MatrixOp::SqrtSymbol => matrix_table(&sqrt_symbol_check(args.k)),
        MatrixOp::Kappa => {
            let variant = match args.variant.as_str() {
                "i_delta" => KappaVariant::IDelta,
                "plain_delta" => KappaVariant::PlainDelta,
                other => return usage(format!("unknown kappa variant {other:?}")),
            };
            matrix_table(&kappa_parametrization(parse_vec3(&args.v)?, args.r, variant))
        }
        MatrixOp::LinePower => matrix_table(&pauli_line_power(args.a, args.b, args.p)?),
    };
    Ok(t)
}

fn observables(args: &ObservablesArgs, cfg: &QuadratureConfig) -> CliResult<Table> {
    let mut t = Table::new(&["a", "t", "R", "F", "width2", "commutator_re", "commutator_im"]);
    for a in parse_list(&args.a)? {
        let inputs = ObservableInputs::normalized(a, args.t)?;
        let c = commutator_xt_x0(&inputs, cfg)?;
        t.rows.push(vec![
            a,
            args.t,
            r_function(a, cfg)?,
            f_function(a, cfg)?,
            packet_width(&inputs, cfg)?,
            c.re,
            c.im,
        ]);
    }
    Ok(t)
}

fn output_of(cmd: &Command) -> Option<&Path> {
    let o = match cmd {
        Command::Fig1(a) => &a.output,
        Command::Fig2(a) => &a.output,
        Command::Fig3(a) => &a.output,
        Command::Fig4(a) => &a.output,
        Command::Solve(a) => &a.output,
        Command::Matrix(a) => &a.output,
        Command::Observables(a) => &a.output,
    };
    o.out.as_deref()
}

fn execute(cmd: &Command) -> CliResult<Table> {
    let cfg = QuadratureConfig::default();
    match cmd {
        Command::Fig1(a) => fig1(a, &cfg),
        Command::Fig2(a) => fig2(a, &cfg),
        Command::Fig3(a) => fig3(a, &cfg),
        Command::Fig4(a) => fig4(a, &cfg),
        Command::Solve(a) => solve(a, &cfg),
        Command::Matrix(a) => matrix(a),
        Command::Observables(a) => observables(a, &cfg),
    }
}

/// Writes via a sibling temporary file and a rename, so readers never see a
/// half-written CSV.
fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".partial");
    let tmp = PathBuf::from(tmp);
    let res = fs::write(&tmp, contents).and_then(|_| fs::rename(&tmp, path));
    if res.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    res
}

fn thread_count() -> CliResult<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => usage(format!("{THREADS_ENV}: {e}")),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => usage(format!("{THREADS_ENV} must be a positive integer, got {s:?}")),
        },
    }
}

fn run_command(cmd: &Command) -> CliResult<()> {
    let out = output_of(cmd);
    let table = match thread_count()? {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Failure::Usage(format!("cannot start worker pool: {e}")))?
            .install(|| execute(cmd)),
        None => execute(cmd),
    };
    let table = match table {
        Ok(t) => t,
        Err(e) => {
            // a stale file from an earlier run must not pass for this run's output
            if let (Failure::Numerical(_), Some(p)) = (&e, out) {
                let _ = fs::remove_file(p);
            }
            return Err(e);
        }
    };
    let csv = table.to_csv();
    let mut summary = format!("wrote {} rows", table.rows.len());
    match out {
        Some(p) => {
            write_atomic(p, &csv)?;
            write!(summary, " to {}", p.display()).expect("writing to a String");
        }
        None => io::stdout().write_all(csv.as_bytes())?,
    }
    write!(summary, "; max quadrature error {}", format_float(table.error)).expect("writing to a String");
    if let Some(d) = table.compare {
        write!(summary, "; compare max |Δ| {}", format_float(d)).expect("writing to a String");
    }
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match run_command(&cli.command) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Numerical(e)) => {
            eprintln!("numerical failure: {e}");
            2
        }
    }
}
