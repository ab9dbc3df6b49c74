//! Command-line front end. The binary is a thin wrapper around [`run`].

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fuzz::{self, FuzzConfig};
use crate::matrix::{Matrix, DEFAULT_DET_BOUND};
use crate::oracle;
use crate::polynomial::Polynomial;
use crate::scalar::Scalar;
use crate::spectral::{self, ids, Checker, TheoremVerdict};

/// Overrides the determinant enumeration bound when `--bound` is absent.
pub const BOUND_ENV: &str = "SUPERTROPICAL_DET_BOUND";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "supertropical",
    version,
    about = "Exact supertropical linear algebra"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest dimension for exhaustive permutation enumeration.
    #[arg(long, global = true, value_name = "N")]
    pub bound: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determinant (permanent) with dominant tracks and classification.
    Det(MatrixArgs),
    /// Characteristic polynomial of A, or of A^m with --power.
    Charpoly {
        #[command(flatten)]
        input: MatrixArgs,
        #[arg(short = 'm', long = "power", default_value_t = 1)]
        power: u32,
    },
    /// Corner roots and ghost root intervals of a polynomial.
    Roots {
        /// Polynomial such as "x^2 + 2x + 2".
        poly: Option<String>,
        #[arg(short, long, conflicts_with = "poly")]
        file: Option<PathBuf>,
    },
    /// Eigenvalues, ghost root region and lattice eigenvectors.
    Eigen(MatrixArgs),
    /// Run one theorem checker on given or generated inputs.
    Check(CheckArgs),
    /// Seeded random campaign over all checkers.
    Fuzz(FuzzArgs),
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Matrix file, plain rows or JSON.
    #[arg(short, long)]
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// One of thm13, frobenius, prop32, thm36, cor37, cor38, trace, claim35, charpoly-equiv.
    pub theorem: String,
    /// Matrix A; generated from --seed when absent.
    #[arg(short, long)]
    pub file: Option<PathBuf>,
    /// Matrix B for the determinant rule.
    #[arg(long = "file-b")]
    pub file_b: Option<PathBuf>,
    /// Power m (also the Frobenius exponent).
    #[arg(short = 'm', long = "power", default_value_t = 2)]
    pub power: u32,
    /// Dimension of generated matrices, or of the census.
    #[arg(short = 'n', default_value_t = 3)]
    pub n: usize,
    /// Census minor size; all sizes when absent.
    #[arg(short = 'k')]
    pub k: Option<usize>,
    /// Eigenvector entries separated by spaces or commas.
    #[arg(long)]
    pub vector: Option<String>,
    #[arg(long)]
    pub eigenvalue: Option<String>,
    /// Frobenius operands.
    #[arg(long = "a", allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long = "b", allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long = "min-n", default_value_t = 2)]
    pub min_n: usize,
    #[arg(long = "max-n", default_value_t = 4)]
    pub max_n: usize,
    #[arg(long = "min-m", default_value_t = 2)]
    pub min_m: u32,
    #[arg(long = "max-m", default_value_t = 3)]
    pub max_m: u32,
    #[arg(long = "min-value", default_value_t = -5, allow_hyphen_values = true)]
    pub min_value: i64,
    #[arg(long = "max-value", default_value_t = 5, allow_hyphen_values = true)]
    pub max_value: i64,
    #[arg(long = "ghost-prob", default_value_t = 0.2)]
    pub ghost_prob: f64,
    #[arg(long = "zero-prob", default_value_t = 0.05)]
    pub zero_prob: f64,
}

/// Parse `args` (including the program name) and run, writing to stdout/stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let bound_env = std::env::var(BOUND_ENV).ok();
    run_with(
        args,
        bound_env.as_deref(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    )
}

pub fn run_with<I, T>(
    args: I,
    bound_env: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = resolve_bound(cli.bound, bound_env).and_then(|bound| execute(&cli, bound));
    match result {
        Ok(report) => {
            let _ = out.write_all(report.text.as_bytes());
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } => EXIT_BOUND,
        _ => EXIT_INPUT,
    }
}

fn resolve_bound(flag: Option<usize>, env: Option<&str>) -> Result<usize> {
    let bound = match (flag, env) {
        (Some(b), _) => b,
        (None, Some(s)) => s.trim().parse().map_err(|_| {
            Error::InvalidArgument(format!("{BOUND_ENV} must be a natural number, got {s:?}"))
        })?,
        (None, None) => DEFAULT_DET_BOUND,
    };
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    Ok(bound)
}

struct Report {
    text: String,
    code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report {
            text,
            code: EXIT_OK,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<Matrix> {
    Matrix::parse_any(&read(path)?)
}

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn execute(cli: &Cli, bound: usize) -> Result<Report> {
    let json = cli.json;
    match &cli.command {
        Command::Det(input) => {
            let det = read_matrix(&input.file)?.det_with_bound(bound)?;
            Ok(Report::ok(if json {
                pretty(&det)
            } else {
                format!("{det}\n")
            }))
        }
        Command::Charpoly { input, power } => {
            if *power == 0 {
                return Err(Error::InvalidArgument("power must be at least 1".into()));
            }
            let a = read_matrix(&input.file)?;
            a.check_bound(bound)?;
            let f = a.pow(*power).char_poly_with_bound(bound)?;
            Ok(Report::ok(if json {
                pretty(&json!({ "power": power, "coefficients": f, "text": f.to_string() }))
            } else {
                format!("{f}\n")
            }))
        }
        Command::Roots { poly, file } => {
            let text = match (poly, file) {
                (Some(p), _) => p.clone(),
                (None, Some(path)) => read(path)?,
                (None, None) => {
                    return Err(Error::InvalidArgument("give a polynomial or --file".into()))
                }
            };
            let f = parse_polynomial(&text)?;
            let roots = f.roots();
            Ok(Report::ok(if json {
                pretty(&json!({ "polynomial": f, "roots": roots }))
            } else {
                format!("{roots}\n")
            }))
        }
        Command::Eigen(input) => eigen(&read_matrix(&input.file)?, bound, json),
        Command::Check(args) => check(args, bound, json),
        Command::Fuzz(args) => run_fuzz(args, bound, json),
    }
}

/// Text grammar, or a JSON coefficient array.
fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        serde_json::from_str(trimmed).map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))
    } else {
        trimmed.parse()
    }
}

const EIGENVECTOR_MAX_N: usize = 3;
const EIGENVECTOR_RADIUS: i64 = 6;

fn eigen(a: &Matrix, bound: usize, json: bool) -> Result<Report> {
    let report = Checker::new(bound).eigenvalues(a)?;
    let vectors: Vec<Option<Vec<Scalar>>> = report
        .eigenvalues
        .iter()
        .map(|e| {
            (a.dim() <= EIGENVECTOR_MAX_N)
                .then(|| fuzz::find_eigenvector(a, &e.root, EIGENVECTOR_RADIUS))
                .flatten()
        })
        .collect();
    if json {
        return Ok(Report::ok(pretty(&json!({
            "eigenvalues": report.eigenvalues,
            "ghost_root_region": report.ghost_root_region,
            "eigenvectors": vectors,
        }))));
    }
    let mut text = format!("{report}\n");
    for (e, v) in report.eigenvalues.iter().zip(&vectors) {
        match v {
            Some(v) => writeln!(
                text,
                "eigenvector for {}: {}",
                e.root,
                spectral::display_vec(v)
            ),
            None => writeln!(text, "eigenvector for {}: none on search lattice", e.root),
        }
        .expect("string write");
    }
    Ok(Report::ok(text))
}

fn parse_scalar(s: &str) -> Result<Scalar> {
    s.trim().parse()
}

fn parse_vector(s: &str) -> Result<Vec<Scalar>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(parse_scalar)
        .collect()
}

struct Generated {
    config: FuzzConfig,
    rng: rand_chacha::ChaCha8Rng,
    notes: Vec<String>,
}

impl Generated {
    fn new(seed: u64, bound: usize) -> Self {
        Generated {
            config: FuzzConfig {
                seed,
                det_bound: bound,
                ..FuzzConfig::default()
            },
            rng: fuzz::trial_rng(seed, 0),
            notes: Vec::new(),
        }
    }

    fn matrix(&mut self, path: Option<&PathBuf>, name: &str, n: usize) -> Result<Matrix> {
        if let Some(p) = path {
            return read_matrix(p);
        }
        if n == 0 {
            return Err(Error::InvalidArgument(
                "dimension must be at least 1".into(),
            ));
        }
        let m = fuzz::random_matrix(&mut self.rng, n, &self.config);
        self.notes.push(format!(
            "generated {name} (seed {}):\n{m}",
            self.config.seed
        ));
        Ok(m)
    }

    fn scalar(&mut self, given: Option<&String>, name: &str) -> Result<Scalar> {
        if let Some(s) = given {
            return parse_scalar(s);
        }
        let s = fuzz::random_scalar(&mut self.rng, &self.config);
        self.notes.push(format!(
            "generated {name} = {s} (seed {})",
            self.config.seed
        ));
        Ok(s)
    }
}

fn check(args: &CheckArgs, bound: usize, json: bool) -> Result<Report> {
    let checker = Checker::new(bound);
    let mut gen = Generated::new(args.seed, bound);
    let m = args.power;
    let theorem = args.theorem.as_str();
    if theorem == ids::POWER_MONOMIAL_CENSUS {
        return census(args, json);
    }
    let verdict = match theorem {
        ids::DET_RULE => {
            let a = gen.matrix(args.file.as_ref(), "A", args.n)?;
            let b = gen.matrix(args.file_b.as_ref(), "B", a.dim())?;
            checker.check_det_rule(&a, &b)?
        }
        ids::FROBENIUS => {
            let a = gen.scalar(args.a.as_ref(), "a")?;
            let b = gen.scalar(args.b.as_ref(), "b")?;
            spectral::check_frobenius(&a, &b, m)?
        }
        ids::EIGEN_POWER => {
            let a = gen.matrix(args.file.as_ref(), "A", args.n)?;
            eigen_power(&checker, &a, args, m, &mut gen.notes)?
        }
        ids::CHARPOLY_POWER => {
            checker.check_charpoly_power(&gen.matrix(args.file.as_ref(), "A", args.n)?, m)?
        }
        ids::TANGIBLE_EQUALITY => {
            checker.check_tangible_equality(&gen.matrix(args.file.as_ref(), "A", args.n)?, m)?
        }
        ids::CORNER_ROOT_POWER => {
            checker.check_corner_root_power(&gen.matrix(args.file.as_ref(), "A", args.n)?, m)?
        }
        ids::TRACE_POWER => {
            checker.check_trace_power(&gen.matrix(args.file.as_ref(), "A", args.n)?, m)?
        }
        ids::CHARPOLY_EQUIV => {
            let a = gen.matrix(args.file.as_ref(), "A", args.n)?;
            a.check_bound(bound)?;
            oracle::check_charpoly_equiv(&a)?
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown theorem {other:?}; expected one of {}",
                ids::ALL.join(", ")
            )))
        }
    };
    Ok(verdict_report(&verdict, &gen.notes, json))
}

fn eigen_power(
    checker: &Checker,
    a: &Matrix,
    args: &CheckArgs,
    m: u32,
    notes: &mut Vec<String>,
) -> Result<TheoremVerdict> {
    match (&args.vector, &args.eigenvalue) {
        (Some(v), Some(x)) => checker.check_eigen_power(a, &parse_vector(v)?, &parse_scalar(x)?, m),
        (None, None) => {
            for e in checker.eigenvalues(a)?.eigenvalues {
                if let Some(v) = fuzz::find_eigenvector(a, &e.root, EIGENVECTOR_RADIUS) {
                    notes.push(format!(
                        "eigenpair: v = {}, x = {}",
                        spectral::display_vec(&v),
                        e.root
                    ));
                    return checker.check_eigen_power(a, &v, &e.root, m);
                }
            }
            Ok(TheoremVerdict::not_applicable(ids::EIGEN_POWER, Vec::new()))
        }
        _ => Err(Error::InvalidArgument(
            "--vector and --eigenvalue go together".into(),
        )),
    }
}

fn verdict_report(verdict: &TheoremVerdict, notes: &[String], json: bool) -> Report {
    let code = if verdict.is_violated() {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    let text = if json {
        let mut s = verdict.to_json();
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for note in notes {
            writeln!(s, "{}", note.trim_end()).expect("string write");
        }
        s.push_str(&verdict.to_string());
        s
    };
    Report { text, code }
}

fn census(args: &CheckArgs, json: bool) -> Result<Report> {
    let ks: Vec<usize> = match args.k {
        Some(k) => vec![k],
        None => (0..=args.n).collect(),
    };
    let mut rows = Vec::new();
    for k in ks {
        rows.push(oracle::census(args.n, args.power, k)?);
    }
    let violated = rows.iter().any(|c| c.verdict.is_violated());
    let code = if violated { EXIT_VIOLATION } else { EXIT_OK };
    if json {
        let docs: Vec<Value> = rows
            .iter()
            .map(|c| serde_json::from_str(&c.to_json()).expect("census json"))
            .collect();
        return Ok(Report {
            text: pretty(
                &json!({ "theorem": ids::POWER_MONOMIAL_CENSUS, "holds": !violated, "census": docs }),
            ),
            code,
        });
    }
    let mut text = format!(
        "{}: {}\n",
        ids::POWER_MONOMIAL_CENSUS,
        if violated { "FAIL" } else { "PASS" }
    );
    writeln!(
        text,
        "  {:>2} {:>2} {:>2} {:>9} {:>6} {:>11} {:>10}",
        "n", "m", "k", "monomials", "powers", "occurrences", "odd-other"
    )
    .expect("string write");
    for c in &rows {
        writeln!(
            text,
            "  {:>2} {:>2} {:>2} {:>9} {:>6} {:>11} {:>10}",
            c.n,
            c.m,
            c.k,
            c.coefficient.terms().len(),
            c.power_monomials.len(),
            c.coefficient.total(),
            c.odd_non_power_counts()
        )
        .expect("string write");
    }
    for c in rows.iter().filter(|c| c.verdict.is_violated()) {
        text.push_str(&c.verdict.to_string());
    }
    Ok(Report { text, code })
}

fn run_fuzz(args: &FuzzArgs, bound: usize, json: bool) -> Result<Report> {
    let config = FuzzConfig {
        trials: args.trials,
        seed: args.seed,
        min_n: args.min_n,
        max_n: args.max_n,
        min_m: args.min_m,
        max_m: args.max_m,
        value_min: args.min_value,
        value_max: args.max_value,
        ghost_prob: args.ghost_prob,
        zero_prob: args.zero_prob,
        det_bound: bound,
        ..FuzzConfig::default()
    };
    let summary = fuzz::run_campaign(&config)?;
    let code = if summary.violations() > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    if json {
        let mut text = summary.to_json();
        text.push('\n');
        return Ok(Report { text, code });
    }
    let mut text = format!("fuzz: {} trials, seed {}\n", config.trials, config.seed);
    writeln!(
        text,
        "  {:<15} {:>6} {:>6} {:>6} {:>6}",
        "theorem", "pass", "fail", "n/a", "exact"
    )
    .expect("string write");
    for (name, t) in &summary.tallies {
        writeln!(
            text,
            "  {name:<15} {:>6} {:>6} {:>6} {:>6}",
            t.pass, t.fail, t.not_applicable, t.exact
        )
        .expect("string write");
    }
    writeln!(text, "violations: {}", summary.violations()).expect("string write");
    for f in &summary.failures {
        writeln!(text, "trial {} (seed {}):", f.trial, f.seed).expect("string write");
        text.push_str(&f.verdict.to_string());
    }
    Ok(Report { text, code })
}
