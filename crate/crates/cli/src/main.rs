use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use focal_cli::record::{parse_rational, OutputRecord};
use focal_cli::render::text_report;
use focal_cli::verify::{run_checks, VerifyOptions, VerifySummary};
use focal_core::jacobi::{compute_spectrum_with, SpectrumOptions};
use focal_core::normalization::{FocalSpace, FocalSpaceId};
use focal_core::rep_core::DEFAULT_DIM_GUARD;
use focal_core::Rational;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Index and nullity of the cubic focal manifolds CP2, HP2, OP2 from exact
/// Casimir spectra.
#[derive(Parser, Debug)]
#[command(name = "focal", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Jacobi spectrum up to the null eigenvalue (plus margin)
    Spectrum {
        #[arg(long, value_enum)]
        space: Space,

        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,

        /// Extra Casimir headroom above 2d, as "p/q" or an integer
        #[arg(long, default_value = "0", value_parser = parse_margin)]
        margin: Rational,

        /// Largest representation dimension to expand into weights
        #[arg(long, default_value_t = DEFAULT_DIM_GUARD)]
        dim_guard: u64,
    },
    /// Recompute every tabulated constant and count; exit 1 on any mismatch
    Verify {
        /// Machine-readable pass/fail list
        #[arg(long)]
        json: bool,

        #[arg(long, default_value_t = DEFAULT_DIM_GUARD)]
        dim_guard: u64,

        /// Negative control: use a wrong Casimir scale for this space
        #[arg(long, value_enum, hide = true)]
        perturb_scale: Option<Space>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Space {
    Cp2,
    Hp2,
    Op2,
}

impl From<Space> for FocalSpaceId {
    fn from(s: Space) -> Self {
        match s {
            Space::Cp2 => FocalSpaceId::CP2,
            Space::Hp2 => FocalSpaceId::HP2,
            Space::Op2 => FocalSpaceId::OP2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_margin(s: &str) -> Result<Rational, String> {
    let m = parse_rational(s)?;
    if m < Rational::from_integer(0) {
        return Err(format!("margin must be non-negative, got {m}"));
    }
    Ok(m)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Spectrum {
            space,
            format,
            margin,
            dim_guard,
        } => {
            let space = FocalSpace::new(space.into());
            let opts = SpectrumOptions {
                margin,
                dim_guard,
                ..Default::default()
            };
            let report = match compute_spectrum_with(&space, &opts) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            match format {
                Format::Text => print!("{}", text_report(&report)),
                Format::Json => println!("{}", OutputRecord::from(&report).to_json()),
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            json,
            dim_guard,
            perturb_scale,
        } => {
            let opts = VerifyOptions {
                dim_guard,
                perturb: perturb_scale.map(Into::into),
            };
            let summary = VerifySummary::new(run_checks(&opts));
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&summary).expect("summary serializes")
                );
            } else {
                for c in &summary.checks {
                    println!("{}", c.line());
                }
                println!("{} passed, {} failed", summary.passed, summary.failed);
            }
            if summary.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
    }
}
