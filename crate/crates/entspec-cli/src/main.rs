//! `entspec`: spectral densities, phase boundaries, and finite-size
//! validation of bipartite entanglement spectra from the command line.
//!
//! Every command writes CSV data next to a JSON report carrying a run
//! manifest (command, parameters, tool version, seed, timestamp); rerunning
//! with the same flags and seed reproduces the numeric output byte for
//! byte. Exit codes: 0 success, 1 io or failed verification, 2 flag usage,
//! 3 domain or phase input errors, 4 numerical non-convergence.

mod cmd;
mod json;
mod manifest;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "entspec",
    version,
    about = "Entanglement spectra of bipartite random pure states at fixed Renyi entropy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the spectral density at one point of the phase diagram.
    Spectrum(SpectrumArgs),
    /// Tabulate the two critical curves over a range of entropy orders.
    Critical(CriticalArgs),
    /// Run the built-in self-checks and print a pass/fail report.
    Verify(VerifyArgs),
    /// Solve or sample the N-eigenvalue gas and compare with the continuum.
    Oracle(OracleArgs),
    /// Sample Haar-random pure states and estimate their entropy deficits.
    Haar(HaarArgs),
}

/// How data and metadata are laid out on disk.
#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Data as CSV next to a JSON metadata file (the default).
    Csv,
    /// One JSON file embedding the data columns as arrays.
    Json,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Level {
    /// Closed-form and solver consistency checks, a few seconds.
    Fast,
    /// Adds Monte Carlo and eigensolver cross-checks, under a minute.
    Full,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Deterministic constrained minimization of the gas potential.
    Newton,
    /// Metropolis sampling of the gas at fixed inverse temperature.
    Metropolis,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Entropy order q > 1/2.
    #[arg(long, allow_negative_numbers = true)]
    q: f64,
    /// Entropy deficit u = ln N - S_q.
    #[arg(long, allow_negative_numbers = true)]
    u: f64,
    /// Subsystem dimension; required past the evaporation line.
    #[arg(long = "N")]
    n: Option<u64>,
    /// Number of density samples across the support.
    #[arg(long, default_value_t = 256)]
    grid_points: usize,
    /// Output base path: writes <base>.csv and <base>.json.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct CriticalArgs {
    /// Lower end of the tabulated order range, > 1/2.
    #[arg(long, allow_negative_numbers = true)]
    q_min: f64,
    /// Upper end of the tabulated order range.
    #[arg(long, allow_negative_numbers = true)]
    q_max: f64,
    /// Number of rows, endpoints included.
    #[arg(long)]
    steps: usize,
    /// Output base path: writes <base>.csv and <base>.json.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Level::Fast)]
    level: Level,
    /// Seed for the stochastic checks of the full level.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Exactly one of the two conjugate targets.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct TargetArg {
    /// Entropy deficit the solver holds fixed (newton).
    #[arg(long, allow_negative_numbers = true)]
    u: Option<f64>,
    /// Inverse temperature of the Gibbs weight (metropolis).
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
}

#[derive(Args)]
struct OracleArgs {
    /// Number of eigenvalues, at least 8.
    #[arg(long = "N")]
    n: usize,
    /// Entropy order.
    #[arg(long, allow_negative_numbers = true)]
    q: f64,
    #[command(flatten)]
    target: TargetArg,
    #[arg(long, value_enum)]
    method: Method,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Recorded sweeps for metropolis; defaults to 100 N.
    #[arg(long)]
    sweeps: Option<usize>,
    /// Output base path: writes <base>.csv and <base>.json.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct HaarArgs {
    /// Subsystem dimension of each sampled pure state.
    #[arg(long = "N")]
    n: usize,
    /// Number of independent states to draw.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Entropy orders for the deficit estimates; repeatable.
    #[arg(long = "q", allow_negative_numbers = true, default_values_t = [1.0, 2.0, 5.0])]
    q_list: Vec<f64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output base path: writes <base>.csv and <base>.json.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spectrum(args) => cmd::spectrum::run(args),
        Command::Critical(args) => cmd::critical::run(args),
        Command::Verify(args) => cmd::verify::run(args),
        Command::Oracle(args) => cmd::oracle::run(args),
        Command::Haar(args) => cmd::haar::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", failure.error_json());
            ExitCode::from(failure.exit_code())
        }
    }
}
