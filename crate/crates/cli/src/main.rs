mod commands;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ambitoric_core::exactmath::rational;
use ambitoric_core::{AmbitoricType, Rational};

use report::CliError;

#[derive(Parser, Debug)]
#[command(name = "ambitoric", version, about = "Ambitoric Kähler data: validation, oracles, polytopes, stability, catalogs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for every random choice; recorded in the report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate data and report the coefficient conditions.
    Check { file: PathBuf },
    /// Run the finite-difference oracles against the closed forms.
    Verify(VerifyArgs),
    /// Labelled polytope, moments and extremal affine function.
    Polytope { file: PathBuf },
    /// K-polystability verdict, with an optional crease to evaluate.
    Stability {
        file: PathBuf,
        /// `x0=VALUE` or `y0=VALUE`.
        #[arg(long, value_parser = parse_crease)]
        crease: Option<CreaseArg>,
    },
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Random interior points for the closedness check.
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u32).range(1..))]
    pub points: u32,
    /// Side of the curvature grid.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub grid: u32,
    /// Samples per facet for the boundary conditions.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    pub samples: u32,
    /// Perturb a coefficient of `A` seen by the oracles (self-test; must fail).
    #[arg(long)]
    pub inject_error: bool,
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// Bochner-flat weighted projective plane from `0 < b1 < b2 < b3 < b4`.
    Wpp {
        #[arg(long, num_args = 4, value_parser = parse_rational, allow_negative_numbers = true)]
        beta: Vec<Rational>,
    },
    /// Extremal hyperbolic family near a weighted projective seed.
    Extremal(FamilyArgs),
    /// Bach-flat hyperbolic family near a weighted projective seed.
    Bachflat(FamilyArgs),
    /// Random extremal data satisfying the boundary conditions.
    Random {
        #[arg(long = "type", value_parser = parse_kind)]
        kind: AmbitoricType,
        /// Put both free roots of `A` inside `(alpha1, alpha2)`.
        #[arg(long)]
        interior: bool,
        #[arg(long, default_value_t = 50_000)]
        tries: usize,
    },
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[arg(long, num_args = 4, value_parser = parse_rational, allow_negative_numbers = true)]
    pub beta: Vec<Rational>,
    #[arg(long, num_args = 2, value_parser = parse_rational, allow_negative_numbers = true)]
    pub alpha: Vec<Rational>,
    /// Halve the offset from the seed until the datum is valid.
    #[arg(long)]
    pub bisect: bool,
}

#[derive(Clone, Debug)]
pub enum CreaseArg {
    X(Rational),
    Y(Rational),
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| format!("{s:?}: {e}"))
}

fn parse_kind(s: &str) -> Result<AmbitoricType, String> {
    AmbitoricType::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown type {s:?} (parabolic, hyperbolic, elliptic)"))
}

fn parse_crease(s: &str) -> Result<CreaseArg, String> {
    let (k, v) = s.split_once('=').ok_or("expected x0=VALUE or y0=VALUE")?;
    let v = parse_rational(v.trim())?;
    match k.trim() {
        "x0" => Ok(CreaseArg::X(v)),
        "y0" => Ok(CreaseArg::Y(v)),
        other => Err(format!("unknown crease coordinate {other:?}")),
    }
}

fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("AMBITORIC_THREADS") else { return Ok(()) };
    let n: usize = v.trim().parse().ok().filter(|n| *n > 0).ok_or_else(|| CliError::Usage(format!("AMBITORIC_THREADS={v:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    init_threads()?;
    let ctx = report::Context { seed: cli.seed, format: cli.format };
    match cli.command {
        Command::Check { file } => commands::check(&ctx, &file),
        Command::Verify(args) => verify::run(&ctx, &args),
        Command::Polytope { file } => commands::polytope(&ctx, &file),
        Command::Stability { file, crease } => commands::stability(&ctx, &file, crease),
        Command::Catalog(c) => match c {
            CatalogCommand::Wpp { beta } => commands::wpp(&ctx, &beta),
            CatalogCommand::Extremal(a) => commands::family(&ctx, &a, false),
            CatalogCommand::Bachflat(a) => commands::family(&ctx, &a, true),
            CatalogCommand::Random { kind, interior, tries } => commands::random(&ctx, kind, interior, tries),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { report::EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
