use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use commands::Failure;

/// Entropies of coherent-state mixtures, cat-state sweeps and purity gaps,
/// with a truncated Fock-space cross-check.
#[derive(Debug, Parser)]
#[command(name = "replica-entropy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entropy of a mixture supported on two coherent states
    EntropyTwoState(TwoStateArgs),
    /// Mode-1 reduced entropy of the two-mode cat mixture versus |α₁|
    Fig1Sweep(SweepArgs),
    /// Purities and the purity-inequality gap
    #[command(subcommand)]
    Purity(PurityCommand),
    /// Run the closed forms against the Fock-space oracle on fixed grids
    OracleCompare(CompareArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct TwoStateArgs {
    /// Weight of |α⟩⟨α|
    #[arg(long)]
    pub a: f64,
    /// Weight of |β⟩⟨β|
    #[arg(long)]
    pub b: f64,
    #[arg(long, default_value_t = 0.0)]
    pub c_re: f64,
    #[arg(long, default_value_t = 0.0)]
    pub c_im: f64,
    #[arg(long)]
    pub alpha_re: f64,
    #[arg(long, default_value_t = 0.0)]
    pub alpha_im: f64,
    #[arg(long)]
    pub beta_re: f64,
    #[arg(long, default_value_t = 0.0)]
    pub beta_im: f64,
    /// Report the entropy in bits instead of nats
    #[arg(long)]
    pub bits: bool,
    /// Also diagonalize the truncated Fock matrix
    #[arg(long)]
    pub oracle: bool,
    /// Emit JSON Lines instead of CSV
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SweepArgs {
    /// Values of |α₂|/|α₁|
    #[arg(long, value_delimiter = ',', default_value = "0.5,1,2")]
    pub ratios: Vec<f64>,
    #[arg(long, default_value_t = 0.01)]
    pub grid_min: f64,
    #[arg(long, default_value_t = 4.0)]
    pub grid_max: f64,
    /// Grid points per ratio, endpoints included
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    /// Even-cat weight
    #[arg(long, default_value_t = 0.5)]
    pub a: f64,
    /// Odd-cat weight
    #[arg(long, default_value_t = 0.5)]
    pub b: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Attach the Fock-oracle entropy to every K-th row
    #[arg(long, value_name = "K")]
    pub oracle_every: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum PurityCommand {
    /// Mixture of the products |α₁,α₂⟩ and |-α₁,-α₂⟩
    Cat(CatPurityArgs),
    /// Equal mixture of a thermal–coherent and a coherent–thermal product
    Thermal(ThermalPurityArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct CatPurityArgs {
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub b: f64,
    #[arg(long)]
    pub alpha1_re: f64,
    #[arg(long, default_value_t = 0.0)]
    pub alpha1_im: f64,
    #[arg(long)]
    pub alpha2_re: f64,
    #[arg(long, default_value_t = 0.0)]
    pub alpha2_im: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
#[command(group(ArgGroup::new("thermal").required(true).args(["mean_photons", "temperature"])))]
pub struct ThermalPurityArgs {
    #[arg(long)]
    pub alpha1_re: f64,
    #[arg(long, default_value_t = 0.0)]
    pub alpha1_im: f64,
    #[arg(long)]
    pub alpha2_re: f64,
    #[arg(long, default_value_t = 0.0)]
    pub alpha2_im: f64,
    /// Mean photon number N of the thermal state
    #[arg(long)]
    pub mean_photons: Option<f64>,
    /// Temperature in units of ħω/k_B
    #[arg(long)]
    pub temperature: Option<f64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Quick,
    Full,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::Quick)]
    pub suite: SuiteArg,
    /// Largest accepted |closed form - oracle|
    #[arg(long, default_value_t = replica_entropy::compare::DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::EntropyTwoState(args) => commands::entropy_two_state(args),
        Command::Fig1Sweep(args) => commands::fig1_sweep(args),
        Command::Purity(PurityCommand::Cat(args)) => commands::purity_cat(args),
        Command::Purity(PurityCommand::Thermal(args)) => commands::purity_thermal(args),
        Command::OracleCompare(args) => commands::oracle_compare(args),
    };
    let (stdout, failure) = match result {
        Ok(out) => (out, None),
        Err(Failure::WithOutput(out, inner)) => (out, Some(*inner)),
        Err(f) => (String::new(), Some(f)),
    };
    // a closed pipe downstream is not our error
    let _ = std::io::stdout().lock().write_all(stdout.as_bytes());
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
