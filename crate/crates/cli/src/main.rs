use std::io::Write;
use std::process::ExitCode;

use amalgam_cli::commands::{cmd_report, cmd_spectrum, cmd_verify, parse_format, CommonOptions, Format};
use amalgam_cli::suite::{DEFAULT_SAMPLES, DEFAULT_SEED};
use amalgam_core::ideal::DEFAULT_LATTICE_CAP;
use clap::{Args, Parser, Subcommand};

/// Amalgamated duplication of commutative rings along an ideal.
#[derive(Parser)]
#[command(name = "amalgam", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check ring properties of R, and of dup(R; I) when --ideal is given.
    Report {
        /// Ring spec, e.g. "Z/6" or "GF(2)[x]/(x^2)".
        spec: String,
        /// Comma-separated generators of I.
        #[arg(long)]
        ideal: Option<String>,
        /// Comma-separated property names; all when omitted.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Lift every prime of R to dup(R; I) and compare with Spec(dup(R; I)).
    Spectrum {
        spec: String,
        /// Comma-separated generators of I; empty for the zero ideal.
        #[arg(long, default_value = "")]
        ideal: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite over the built-in corpus.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Output format: table or json.
    #[arg(long, default_value = "table", value_parser = parse_format)]
    format: Format,
    /// Largest ring whose ideal lattice is enumerated.
    #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
    cap: u128,
}

impl From<Common> for CommonOptions {
    fn from(c: Common) -> Self {
        CommonOptions {
            seed: c.seed,
            samples: c.samples,
            format: c.format,
            cap: c.cap,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Report { spec, ideal, props, common } => cmd_report(&spec, ideal.as_deref(), &props, &common.into()),
        Command::Spectrum { spec, ideal, common } => cmd_spectrum(&spec, &ideal, &common.into()),
        Command::Verify { suite, common } => cmd_verify(&suite, &common.into()),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.status as u8)
}
