//! Command-line front end: `eval`, `table`, `series`, `compare`, `bench`
//! and `sr` subcommands over [`hilbert_core`].
//!
//! [`run`] takes the argument list and two writers so the whole tool can be
//! driven from tests; `main` only wires it to the process streams.

pub mod bench;
pub mod compare;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hilbert_core::engine::{DEFAULT_ENUM_CAP, DEFAULT_LATTICE_CAP};
use hilbert_core::parser::{
    parse_complex, parse_ideal, parse_order, parse_ring, ComplexInputError,
};
use hilbert_core::{
    expand_series, minimal_nonfaces, series_numerator, stanley_reisner_ideal, ComplexError, Engine,
    EngineConfig, HfError, MethodKind, MonomialIdeal, ParseError, Ring, SeriesError, VariableOrder,
};

use output::{Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hilbert",
    version,
    about = "Hilbert functions of monomial quotient rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function values for degrees 0..=max-degree.
    Eval(EvalArgs),
    /// Hilbert function table, one row per number of variables.
    Table(TableArgs),
    /// Hilbert series as numerator over (1 - t)^arity.
    Series(SeriesArgs),
    /// Run every method and report any disagreement.
    Compare(CompareArgs),
    /// Time the methods on seeded random ideals.
    Bench(BenchArgs),
    /// Stanley-Reisner ideal of a simplicial complex and its Hilbert function.
    Sr(SrArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Oracle,
    Lcm,
    Syzygy,
    Table,
    Auto,
}

impl From<MethodArg> for MethodKind {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Oracle => MethodKind::Oracle,
            MethodArg::Lcm => MethodKind::LcmLattice,
            MethodArg::Syzygy => MethodKind::Syzygy,
            MethodArg::Table => MethodKind::Table,
            MethodArg::Auto => MethodKind::Auto,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Caps {
    /// Largest number of degree-b monomials the oracle may enumerate.
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
    pub enum_cap: u64,
    /// Largest generator count for the lcm lattice.
    #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
    pub lattice_cap: usize,
}

impl Caps {
    fn config(&self) -> EngineConfig {
        EngineConfig {
            enum_cap: self.enum_cap,
            lattice_cap: self.lattice_cap,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct IdealInput {
    /// Comma-separated variable names, e.g. `x,y,z`.
    #[arg(long)]
    pub ring: String,
    /// Comma-separated generators, e.g. `x^2*y, x*z^2`; `0` and `1` allowed.
    #[arg(long, allow_hyphen_values = true)]
    pub ideal: String,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub input: IdealInput,
    #[arg(long, default_value_t = 10)]
    pub max_degree: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub input: IdealInput,
    /// Last row; defaults to the number of variables.
    #[arg(long)]
    pub max_row: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub max_degree: usize,
    /// Order in which variables are introduced; defaults to the ring order.
    #[arg(long)]
    pub order: Option<String>,
    /// Also print the annihilator values of each row.
    #[arg(long)]
    pub annihilators: bool,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub input: IdealInput,
    /// Also print the expansion coefficients for degrees 0..=N.
    #[arg(long, value_name = "N")]
    pub expand_to: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: IdealInput,
    #[arg(long, default_value_t = 10)]
    pub max_degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = bench::Suite::Standard)]
    pub suite: bench::Suite,
    #[arg(long, default_value_t = 3)]
    pub repetitions: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 12)]
    pub max_degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct SrArgs {
    /// Vertex names, used as the ring variables.
    #[arg(long)]
    pub ring: String,
    /// Facets separated by `;`, vertices by `,`, e.g. `x,y,z; xh,y,z`.
    #[arg(long)]
    pub facets: String,
    #[arg(long, default_value_t = 10)]
    pub max_degree: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[command(flatten)]
    pub caps: Caps,
}

/// Anything that ends a command early, with its exit code.
#[derive(Debug)]
pub enum Failure {
    Parse { input: String, error: ParseError },
    Input(String),
    Cap(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Parse { .. } | Failure::Input(_) => EXIT_INPUT,
            Failure::Cap(_) => EXIT_CAP,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Failure::Parse { input, error } => {
                format!("error: {error}\n{}", error.annotate(input))
            }
            Failure::Input(m) => format!("error: {m}"),
            Failure::Cap(m) => format!("error: resource cap exceeded: {m}"),
        }
    }

    fn parse(input: &str) -> impl FnOnce(ParseError) -> Failure + '_ {
        move |error| Failure::Parse {
            input: input.to_string(),
            error,
        }
    }
}

impl From<HfError> for Failure {
    fn from(e: HfError) -> Self {
        match e {
            HfError::EnumerationCap { .. } | HfError::LatticeCap { .. } => {
                Failure::Cap(e.to_string())
            }
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<SeriesError> for Failure {
    fn from(e: SeriesError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<ComplexError> for Failure {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::TooManyVertices { .. } => Failure::Cap(e.to_string()),
            ComplexError::Invalid(_) => Failure::Input(e.to_string()),
        }
    }
}

/// Parses and runs one invocation, writing results to `out` and diagnostics
/// to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Table(a) => cmd_table(a),
        Command::Series(a) => cmd_series(a),
        Command::Compare(a) => cmd_compare(a, |engine, ideal, b, m| engine.hf(ideal, b, m)),
        Command::Bench(a) => cmd_bench(a),
        Command::Sr(a) => cmd_sr(a),
    };
    match result {
        Ok(report) => {
            let _ = out.write_all(report.text.as_bytes());
            report.code
        }
        Err(f) => {
            let _ = writeln!(err, "{}", f.render());
            f.exit_code()
        }
    }
}

/// Sizes the global rayon pool from `HILBERT_THREADS`; `0` means serial.
/// Unset or unparsable leaves rayon's default.
pub fn configure_threads() {
    if let Some(n) = std::env::var("HILBERT_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

pub fn load_ideal(input: &IdealInput) -> Result<(Ring, MonomialIdeal), Failure> {
    let ring = parse_ring(&input.ring).map_err(Failure::parse(&input.ring))?;
    let ideal = parse_ideal(&input.ideal, &ring).map_err(Failure::parse(&input.ideal))?;
    Ok((ring, ideal))
}

pub fn cmd_eval(args: &EvalArgs) -> Result<Report, Failure> {
    let (ring, ideal) = load_ideal(&args.input)?;
    let method: MethodKind = args.method.into();
    let values = Engine::new(args.caps.config()).hf(&ideal, args.max_degree, method)?;
    Ok(Report::ok(output::hf_sequence(
        args.format,
        &ring,
        &ideal,
        method,
        &values,
    )))
}

pub fn cmd_table(args: &TableArgs) -> Result<Report, Failure> {
    let (ring, ideal) = load_ideal(&args.input)?;
    let order = match &args.order {
        Some(text) => parse_order(text, &ring).map_err(Failure::parse(text))?,
        None => VariableOrder::identity(ring.arity()),
    };
    let max_row = args.max_row.unwrap_or(ring.arity());
    if max_row == 0 {
        return Err(Failure::Input("--max-row must be at least 1".into()));
    }
    let table = Engine::new(args.caps.config()).table(&ideal, &order, max_row, args.max_degree)?;
    Ok(Report::ok(output::table(
        args.format,
        &ring,
        &ideal,
        &table,
        args.annihilators,
    )))
}

pub fn cmd_series(args: &SeriesArgs) -> Result<Report, Failure> {
    let (ring, ideal) = load_ideal(&args.input)?;
    let num = series_numerator(&ideal, args.caps.lattice_cap)?;
    let expansion = match args.expand_to {
        Some(n) => Some(expand_series(&num, n)?),
        None => None,
    };
    Ok(Report::ok(output::series(
        args.format,
        &ring,
        &ideal,
        &num,
        expansion.as_deref(),
    )))
}

/// Runs all four methods through `evaluate` and diffs them. Tests pass a
/// deliberately wrong `evaluate` to exercise the disagreement path.
pub fn cmd_compare<F>(args: &CompareArgs, mut evaluate: F) -> Result<Report, Failure>
where
    F: FnMut(
        &mut Engine,
        &MonomialIdeal,
        usize,
        MethodKind,
    ) -> Result<Vec<hilbert_core::Count>, HfError>,
{
    let (ring, ideal) = load_ideal(&args.input)?;
    let mut engine = Engine::new(args.caps.config());
    let mut results = Vec::new();
    for method in compare::METHODS {
        results.push((
            method,
            evaluate(&mut engine, &ideal, args.max_degree, method)?,
        ));
    }
    let cmp = compare::compare(&results);
    let code = if cmp.agree() { EXIT_OK } else { EXIT_DISAGREE };
    Ok(Report {
        text: output::comparison(args.format, &ring, &ideal, &cmp),
        code,
    })
}

pub fn cmd_bench(args: &BenchArgs) -> Result<Report, Failure> {
    let report = bench::run_bench(
        args.suite,
        args.seed,
        args.repetitions.max(1),
        args.max_degree,
        args.caps.config(),
    );
    Ok(Report::ok(output::bench(args.format, &report)))
}

pub fn cmd_sr(args: &SrArgs) -> Result<Report, Failure> {
    let ring = parse_ring(&args.ring).map_err(Failure::parse(&args.ring))?;
    let complex = match parse_complex(&args.facets, &ring) {
        Ok(c) => c,
        Err(ComplexInputError::Parse(error)) => {
            return Err(Failure::Parse {
                input: args.facets.clone(),
                error,
            })
        }
        Err(ComplexInputError::Invalid(v)) => return Err(ComplexError::Invalid(v).into()),
    };
    let nonfaces = minimal_nonfaces(&complex)?;
    let ideal = stanley_reisner_ideal(&complex)?;
    let method: MethodKind = args.method.into();
    let values = Engine::new(args.caps.config()).hf(&ideal, args.max_degree, method)?;
    Ok(Report::ok(output::stanley_reisner(
        args.format,
        &ring,
        &nonfaces,
        &ideal,
        method,
        &values,
    )))
}
