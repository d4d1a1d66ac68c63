use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use detres::commands::{self, parse_scroll, Failure, EXIT_INVALID};
use detres::format::{morphism_from_json, plane_from_json, PolyJson, SpecJson};
use detres::{OutputFormat, RayonBackend};
use detres_core::ProblemSpec;
use serde::de::DeserializeOwned;

#[derive(Parser)]
#[command(name = "detres", version, about = "Determinantal resultants on projective space")]
struct Cli {
    /// Output format; only JSON output is stable.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct SpecArg {
    /// Problem spec: {"m":..,"n":..,"r":..,"d":[..],"k":[..]}
    #[arg(long)]
    spec: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Existence check, multidegree, total and critical degree.
    Degree(SpecArg),
    /// The matrix sigma_d for the generic or a given morphism.
    Matrix {
        #[command(flatten)]
        spec: SpecArg,
        /// Working degree (default: the critical degree).
        #[arg(long)]
        degree: Option<u32>,
        /// Use the generic morphism (the default).
        #[arg(long, conflicts_with = "phi")]
        generic: bool,
        /// n x m array of polynomials.
        #[arg(long)]
        phi: Option<PathBuf>,
    },
    /// The resultant as a gcd of maximal minors.
    Resultant {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        degree: Option<u32>,
        /// Maximum number of minors to expand.
        #[arg(long, default_value_t = 8)]
        budget: usize,
    },
    /// Rank test: exit 10 if the resultant vanishes at phi, 0 otherwise.
    Test {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        phi: PathBuf,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Chow matrix and Chow form of a rational normal scroll.
    Chow {
        /// Block degrees, e.g. 2,1.
        #[arg(long)]
        scroll: String,
        /// Maximum number of minors; 0 prints the matrix only.
        #[arg(long, default_value_t = 8)]
        budget: usize,
    },
    /// Whether a plane meets the scroll: exit 10 if it does, 0 otherwise.
    ChowTest {
        #[arg(long)]
        scroll: String,
        /// Rows of exact rational strings.
        #[arg(long)]
        plane: PathBuf,
    },
    /// Term shapes of the complex in homological index p.
    Complex {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(short = 'p', long = "index", allow_hyphen_values = true)]
        p: i64,
    },
}

fn read_json<T: DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn load_spec(arg: &SpecArg) -> anyhow::Result<ProblemSpec> {
    Ok(read_json::<SpecJson>(&arg.spec)?.to_spec()?)
}

fn load_phi(spec: &ProblemSpec, path: &Path) -> anyhow::Result<detres_core::resultant::ConcreteMorphism> {
    let rows: Vec<Vec<PolyJson>> = read_json(path)?;
    morphism_from_json(spec, &rows).with_context(|| format!("bad morphism in {}", path.display()))
}

fn backend() -> Result<RayonBackend, Failure> {
    RayonBackend::from_env().map_err(Failure::invalid)
}

fn run(cli: Cli) -> Result<commands::Outcome, Failure> {
    let format = match cli.format {
        Format::Json => OutputFormat::Json,
        Format::Text => OutputFormat::Text,
    };
    let invalid = |e: anyhow::Error| Failure::invalid(format!("{:#}", e));
    match cli.command {
        Command::Degree(s) => commands::degree(&load_spec(&s).map_err(invalid)?, format),
        Command::Matrix { spec, degree, phi, .. } => {
            let spec = load_spec(&spec).map_err(invalid)?;
            let phi = phi.map(|p| load_phi(&spec, &p)).transpose().map_err(invalid)?;
            commands::matrix(&spec, degree, phi.as_ref(), format)
        }
        Command::Resultant { spec, degree, budget } => {
            let spec = load_spec(&spec).map_err(invalid)?;
            commands::resultant(&spec, degree, budget, &backend()?, format)
        }
        Command::Test { spec, phi, degree } => {
            let spec = load_spec(&spec).map_err(invalid)?;
            let phi = load_phi(&spec, &phi).map_err(invalid)?;
            commands::test(&spec, &phi, degree, format)
        }
        Command::Chow { scroll, budget } => commands::chow(&parse_scroll(&scroll)?, budget, &backend()?, format),
        Command::ChowTest { scroll, plane } => {
            let scroll = parse_scroll(&scroll)?;
            let rows: Vec<Vec<String>> = read_json(&plane).map_err(invalid)?;
            let rows = plane_from_json(&rows).map_err(|e| Failure::invalid(e.to_string()))?;
            commands::chow_test(&scroll, rows, format)
        }
        Command::Complex { spec, p } => commands::complex(&load_spec(&spec).map_err(invalid)?, p, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.output);
            ExitCode::from(out.code as u8)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
