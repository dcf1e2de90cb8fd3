mod cmd;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::output::{CliError, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Shared analysis bounds; defaults come from the library configuration.
#[derive(Debug, Clone, clap::Args)]
pub struct Bounds {
    /// Window bound N.
    #[arg(long = "N", global = true, default_value_t = gtorsion::config::DEFAULT_WINDOW, value_parser = clap::value_parser!(u64).range(1..))]
    pub window: u64,
    /// Degree bound for certificate searches (default 4·deg + 16).
    #[arg(long, global = true)]
    pub deg_bound: Option<usize>,
    /// Largest prime power used in resultant obstructions.
    #[arg(long, global = true, default_value_t = gtorsion::config::DEFAULT_K_MAX, value_parser = clap::value_parser!(u64).range(1..))]
    pub k_max: u64,
    /// Tolerance for the Mahler measure.
    #[arg(long, global = true, default_value_t = gtorsion::config::MAHLER_TOL)]
    pub tol: f64,
}

#[derive(Debug, Parser)]
#[command(name = "gtorsion", version, about = "Generalized torsion order obstructions")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    bounds: Bounds,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Polynomial kernels.
    Poly(cmd::poly::PolyArgs),
    /// Spectrum t(h) of an irreducible polynomial.
    Spectrum(cmd::spectrum::SpectrumArgs),
    /// Knot screening.
    Knot(cmd::knot::KnotArgs),
    /// Module presentations and integer actions.
    Module(cmd::module::ModuleArgs),
    /// Finite groups.
    Group(cmd::group::GroupArgs),
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Poly(a) => cmd::poly::run(a, &cli.bounds),
        Command::Spectrum(a) => cmd::spectrum::run(a, &cli.bounds),
        Command::Knot(a) => cmd::knot::run(a, &cli.bounds),
        Command::Module(a) => cmd::module::run(a, &cli.bounds),
        Command::Group(a) => cmd::group::run(a, &cli.bounds),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            report.print(cli.format);
            ExitCode::SUCCESS
        }
        Err(e) => {
            e.print(cli.format);
            ExitCode::from(e.exit_code())
        }
    }
}
