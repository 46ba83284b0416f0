//! `polylandau`: univalence radii, verification batteries and parameter
//! sweeps for poly-analytic Landau-type classes.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

mod commands;
mod output;
mod params;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use params::{Range, ScalarParams};

#[derive(Parser)]
#[command(
    name = "polylandau",
    version,
    about = "Landau-type radii for poly-analytic functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Univalence and schlicht radius for one parameter set.
    Radius(RadiusArgs),
    /// Run the verification battery on the class witness function.
    Verify(VerifyArgs),
    /// Radii over a parameter grid.
    Sweep(SweepArgs),
    /// Classical and harmonic Landau constants.
    Constants(ConstantsArgs),
    /// Boundary values of the class witness on the circle of the univalence radius.
    PlotData(PlotDataArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassName {
    F1,
    F2,
    F3,
    C,
    D,
    E,
}

impl ClassName {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::F1 => "f1",
            ClassName::F2 => "f2",
            ClassName::F3 => "f3",
            ClassName::C => "c",
            ClassName::D => "d",
            ClassName::E => "e",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Membership,
    Colipschitz,
    Lipschitz,
    Schlicht,
    Collision,
    CoefficientBounds,
}

#[derive(Args)]
pub struct RadiusArgs {
    #[arg(long, value_enum)]
    pub class: ClassName,
    #[command(flatten)]
    pub params: ScalarParams,
    /// Bisection bracket width.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// f1, f2 or f3. Without it the battery runs on f3 with Λ0 = 2, Λ1 = 1
    /// unless those are given.
    #[arg(long, value_enum)]
    pub class: Option<ClassName>,
    #[command(flatten)]
    pub params: ScalarParams,
    /// Pairs are sampled on the disc of radius rho-frac times the univalence radius.
    #[arg(long, default_value_t = 0.9)]
    pub rho_frac: f64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 100_000)]
    pub pairs: usize,
    #[arg(long, default_value_t = 720)]
    pub boundary_points: usize,
    /// Collision search radius above r3 (f3 only).
    #[arg(long, default_value_t = 0.05)]
    pub r_offset: f64,
    /// Run only these checks; repeatable. Default: every check that applies.
    #[arg(long, value_enum)]
    pub check: Vec<CheckName>,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// json writes one report per line.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Ranges are `a,b,c` lists or `start:stop:steps` grids (endpoints included).
#[derive(Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub class: ClassName,
    /// Λ for f1 and e.
    #[arg(long)]
    pub lambda: Option<Range>,
    /// Λ0 for f3.
    #[arg(long)]
    pub lambda0: Option<Range>,
    /// M for f2 and c.
    #[arg(long = "M")]
    pub m_bound: Option<Range>,
    /// Order m for c.
    #[arg(long)]
    pub order: Option<Range>,
    /// Λ1 for d.
    #[arg(long)]
    pub lambda1: Option<Range>,
    /// Λ2 for d.
    #[arg(long)]
    pub lambda2: Option<Range>,
    /// Tail parameter k (M_k for f1, Λ_k for f2/f3); repeat once per k.
    #[arg(long)]
    pub tail: Vec<Range>,
    /// Lipschitz constants are reported at rho-frac times the univalence radius.
    #[arg(long, default_value_t = 0.9)]
    pub rho_frac: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args)]
pub struct ConstantsArgs {
    #[arg(long = "M", default_value_t = 1.0)]
    pub m_bound: f64,
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args)]
pub struct PlotDataArgs {
    #[arg(long, value_enum, default_value_t = ClassName::F3)]
    pub class: ClassName,
    #[command(flatten)]
    pub params: ScalarParams,
    #[arg(long, default_value_t = 720)]
    pub boundary_points: usize,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Radius(a) => commands::radius(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Sweep(a) => commands::sweep(&a),
        Command::Constants(a) => commands::constants(&a),
        Command::PlotData(a) => commands::plot_data(&a),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth a non-zero exit
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            if out.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
