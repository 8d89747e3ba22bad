//! Flag definitions. Every value flag is optional here; merging with the
//! config file and defaults happens in [`crate::config`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_CODES: &str = "EXIT CODES:
  0  success
  2  parse/config error (unknown command or key, missing or malformed parameter)
  3  precondition violation (e.g. n = 0, degenerate split 2m = n)
  4  verification failure (oracle sweep mismatch beyond tolerance)
  5  I/O failure

The environment variable LITHO_SIM_THREADS caps sweep concurrency.";

#[derive(Debug, Parser)]
#[command(
    name = "litho-sim",
    version,
    about = "Entangled-photon lithography simulator: deposition curves, resolution tables, pattern fitting, and oracle verification",
    after_help = EXIT_CODES
)]
pub struct Cli {
    /// JSON run configuration; explicit flags override file values
    #[arg(long, value_name = "FILE", global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<CommandArgs>,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Deposition-rate curve of one entangled branch over the phase grid
    Deposition(DepositionArgs),
    /// Complex dosing matrix element between two mode splits over the grid
    #[command(name = "matrix-element")]
    MatrixElement(MatrixElementArgs),
    /// Deposition curve under the resonant relation 2 gamma = k N phi
    Resonant(ResonantArgs),
    /// Resolution table: formula values plus measured fringe half-periods
    Resolution(ResolutionArgs),
    /// Exposure curve of a superposition recipe (JSON file)
    Pattern(PatternArgs),
    /// Compile target Fourier coefficients (JSON) into a recipe (JSON)
    Fit(FitArgs),
    /// Reproduce the |sin phi| pattern study at n-max = 2, 6, 12
    #[command(name = "figure1")]
    Figure1(Figure1Args),
    /// Sweep every closed form against the Fock-space ladder oracle
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Default, Args)]
pub struct GridOutputArgs {
    /// Grid start in radians (default 0)
    #[arg(long)]
    pub phi_min: Option<f64>,
    /// Grid end in radians (default 2 pi)
    #[arg(long)]
    pub phi_max: Option<f64>,
    /// Number of grid samples (default 512)
    #[arg(long)]
    pub samples: Option<usize>,
    /// Output format (default csv; fit always emits json)
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Output path (stdout when omitted; a directory for figure1)
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DepositionArgs {
    /// Photon number N
    #[arg(long)]
    pub n: Option<u32>,
    /// Mode split m (default 0)
    #[arg(long)]
    pub m: Option<u32>,
    /// Entanglement angle in radians (default pi/4)
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Subsidiary phase theta_m in radians (default 0)
    #[arg(long)]
    pub theta: Option<f64>,
    #[command(flatten)]
    pub grid_output: GridOutputArgs,
}

#[derive(Debug, Args)]
pub struct MatrixElementArgs {
    /// Photon number N
    #[arg(long)]
    pub n: Option<u32>,
    /// Bra mode split m
    #[arg(long)]
    pub m: Option<u32>,
    /// Ket mode split m'
    #[arg(long)]
    pub m_prime: Option<u32>,
    /// Entanglement angle in radians (default pi/4)
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Bra subsidiary phase theta_m (default 0)
    #[arg(long)]
    pub theta: Option<f64>,
    /// Ket subsidiary phase theta_m' (default 0)
    #[arg(long)]
    pub theta_prime: Option<f64>,
    #[command(flatten)]
    pub grid_output: GridOutputArgs,
}

#[derive(Debug, Args)]
pub struct ResonantArgs {
    /// Photon number N
    #[arg(long)]
    pub n: Option<u32>,
    /// Resonance integer k in 2 gamma = k N phi
    #[arg(long)]
    pub k: Option<u32>,
    #[command(flatten)]
    pub grid_output: GridOutputArgs,
}

#[derive(Debug, Args)]
pub struct ResolutionArgs {
    /// Photon number N
    #[arg(long)]
    pub n: Option<u32>,
    /// Resonance integer k (adds the resonant row)
    #[arg(long)]
    pub k: Option<u32>,
    /// Optical wavelength (default 1)
    #[arg(long)]
    pub lambda: Option<f64>,
    #[command(flatten)]
    pub grid_output: GridOutputArgs,
}

#[derive(Debug, Args)]
pub struct PatternArgs {
    /// Recipe JSON file
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub grid_output: GridOutputArgs,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Target Fourier coefficients JSON file
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Entanglement angle in radians (default pi/4)
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Exposure time (default 1)
    #[arg(long)]
    pub t: Option<f64>,
    #[command(flatten)]
    pub grid_output: GridOutputArgs,
}

#[derive(Debug, Args)]
pub struct Figure1Args {
    #[command(flatten)]
    pub grid_output: GridOutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest photon number in the sweep (default 12)
    #[arg(long)]
    pub n_max: Option<u32>,
    #[command(flatten)]
    pub grid_output: GridOutputArgs,
}
