//! `qpart`: exact partition counts, Gaussian coefficients and their
//! polynomial parts from the command line.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qpart_core::Integer;

use render::Format;

#[derive(Parser)]
#[command(name = "qpart", version, about = "Exact restricted and vector partition functions")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "plain")]
    format: Format,
    /// Print a header line in CSV output.
    #[arg(long, global = true)]
    header: bool,
    #[command(subcommand)]
    command: Command,
}

fn integer(text: &str) -> Result<Integer, String> {
    text.trim().parse().map_err(|_| format!("not an integer: {text:?}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EulerianType {
    A,
    B,
}

#[derive(Subcommand)]
pub enum Command {
    /// Number of partitions of s into parts from --gens (or a named closed form).
    Partition {
        #[arg(
            long,
            value_parser = integer,
            value_delimiter = ',',
            allow_negative_numbers = true,
            conflicts_with = "form",
            required_unless_present = "form"
        )]
        gens: Option<Vec<Integer>>,
        /// Closed form name such as W3 or W2u3.
        #[arg(long)]
        form: Option<String>,
        #[arg(long, value_parser = integer)]
        s: Integer,
    },
    /// Solutions of a two-row system read from a JSON file.
    Vpf {
        /// JSON file `{"matrix": [[..],[..]], "rhs": [r, rho]}`; an optional
        /// `ineq_rhs` marks trailing rows as inequalities.
        #[arg(long)]
        matrix: PathBuf,
        /// Overrides the right-hand side in the file.
        #[arg(long, value_parser = integer, value_delimiter = ',', allow_negative_numbers = true)]
        rhs: Option<Vec<Integer>>,
        /// List the reduction terms.
        #[arg(long)]
        terms: bool,
        /// List the chamber walls instead of counting.
        #[arg(long)]
        walls: bool,
    },
    /// Coefficients of the Gaussian polynomial [m+n choose m].
    Gauss(GaussArgs),
    /// Chamber sum for chamber r at s.
    Chamber {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_parser = integer)]
        r: Integer,
        #[arg(long, value_parser = integer)]
        s: Integer,
    },
    /// Maximal coefficient and where it sits.
    Maxcoeff {
        #[command(flatten)]
        size: Size,
    },
    /// Polynomial part of the chamber sum (with --r) or of the maximal coefficient.
    Polypart {
        #[arg(long, value_parser = integer)]
        m: Integer,
        #[arg(long, value_parser = integer)]
        r: Option<Integer>,
        #[arg(long, value_enum, default_value = "even", conflicts_with = "r")]
        parity: ParityArg,
    },
    /// Leading term of the maximal coefficient.
    Leading {
        #[arg(long, value_parser = integer)]
        m: Integer,
    },
    /// Eulerian numbers; a whole row without --k.
    Eulerian {
        #[arg(long, value_parser = integer)]
        n: Integer,
        #[arg(long, value_parser = integer)]
        k: Option<Integer>,
        #[arg(long = "type", value_enum, default_value = "a")]
        kind: EulerianType,
    },
    /// Cross-check every fast route against its oracle.
    Verify {
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        #[arg(long)]
        full: bool,
        /// Run a single criterion (1..=9).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=9))]
        criterion: Option<u8>,
    },
}

#[derive(Args)]
pub struct Size {
    #[arg(long, value_parser = integer)]
    pub m: Integer,
    #[arg(long, value_parser = integer)]
    pub n: Integer,
}

#[derive(Args)]
pub struct GaussArgs {
    #[command(flatten)]
    pub size: Size,
    /// A single coefficient instead of the whole row.
    #[arg(long, value_parser = integer)]
    pub s: Option<Integer>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok((rendered, success)) => {
            println!("{}", rendered.to_text(cli.format, cli.header));
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
