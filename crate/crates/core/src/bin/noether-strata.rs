use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use noether_strata::render::{self, Document, OutputFormat};
use noether_strata::Error;

/// Stratification of the moduli space of canonical threefolds on the
/// Noether line.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report a single stratum of type (d, d0).
    Stratum {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        d0: i64,
        #[arg(long, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Summarize the moduli space for a given p_g (or d, with p_g = 3d - 2).
    #[command(group(ArgGroup::new("genus").required(true).args(["pg", "d"])))]
    Moduli {
        #[arg(long, allow_negative_numbers = true)]
        pg: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        d: Option<i64>,
        #[arg(long, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Print the piecewise linear dimension profile for a given d.
    Profile {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Check every closed form against brute-force enumeration.
    Verify {
        #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, default_value_t = 60, allow_negative_numbers = true)]
        to: i64,
        #[arg(long, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
}

fn run(command: Command) -> Result<(Document, OutputFormat), Error> {
    match command {
        Command::Stratum { d, d0, format } => Ok((render::stratum_document(d, d0)?, format)),
        Command::Moduli { pg, d, format } => {
            let p_g = match (pg, d) {
                (Some(p_g), _) => p_g,
                (None, Some(d)) => d
                    .checked_mul(3)
                    .and_then(|x| x.checked_sub(2))
                    .ok_or(Error::Overflow("p_g from d"))?,
                (None, None) => unreachable!("clap requires one of --pg, --d"),
            };
            Ok((render::moduli_document(p_g)?, format))
        }
        Command::Profile { d, format } => Ok((render::profile_document(d)?, format)),
        Command::Verify { from, to, format } => {
            Ok((render::verification_document(from, to)?, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((doc, format)) => {
            print!("{}", render::render(&doc, format));
            match &doc {
                Document::Verification(v) if !v.passed() => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
