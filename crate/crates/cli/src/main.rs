//! `rbar`: bigraded Poincaré series of arrangements from the command line.

mod commands;
mod error;
mod expr;
mod render;
mod spec_file;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "rbar", version, about = "Poincaré series of rational functions regular off a hyperplane arrangement")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Arrangement JSON file, `-` for stdin
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    /// Built-in family (see `family-list`)
    #[arg(long, requires = "ell")]
    pub family: Option<String>,
    /// Ambient dimension for --family
    #[arg(long)]
    pub ell: Option<usize>,
    /// Emit JSON instead of a text table
    #[arg(long)]
    pub json: bool,
}

/// Truncation for the closed-form series.
#[derive(Args, Debug, Clone)]
pub struct SeriesGrid {
    /// Largest numerator degree p (inclusive)
    #[arg(long = "max-p", default_value_t = 8)]
    pub max_p: usize,
    /// Largest denominator degree q (inclusive)
    #[arg(long = "max-q", default_value_t = 8)]
    pub max_q: usize,
}

/// Truncation for the rank oracle, which is far more expensive.
#[derive(Args, Debug, Clone)]
pub struct OracleGrid {
    /// Largest numerator degree p (inclusive)
    #[arg(long = "max-p", default_value_t = 3)]
    pub max_p: usize,
    /// Largest denominator degree q (inclusive)
    #[arg(long = "max-q", default_value_t = 3)]
    pub max_q: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Flats of the intersection lattice with codimension and Möbius value
    Lattice {
        #[command(flatten)]
        source: Source,
    },
    /// Poincaré polynomial of the arrangement
    Poincare {
        #[command(flatten)]
        source: Source,
    },
    /// Coefficients dim R̄^p_q of the bigraded Poincaré series
    Series {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        grid: SeriesGrid,
        /// Also print dim R^p_q
        #[arg(long)]
        cumulative: bool,
        /// Exponents "d1,d2,..." to cross-check the product formula
        #[arg(long)]
        exponents: Option<String>,
    },
    /// Dimensions of the reciprocal spaces C_{q,X}, per flat and in total
    Cseries {
        #[command(flatten)]
        source: Source,
        #[arg(long = "max-q", default_value_t = 8)]
        max_q: usize,
    },
    /// Brute-force dimensions dim R^p_q and dim R̄^p_q by exact rank
    Dims {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        grid: OracleGrid,
        /// Also split cell "p,q" over the flats and list a basis of R̄^p_q
        #[arg(long)]
        cell: Option<String>,
    },
    /// Compare the closed-form series against the rank oracle
    Verify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        grid: OracleGrid,
        /// Exponents "d1,d2,..." to cross-check the product formula
        #[arg(long)]
        exponents: Option<String>,
    },
    /// Coordinates of a fraction's class in R̄^p_q
    Decompose {
        #[command(flatten)]
        source: Source,
        /// Numerator polynomial in x1..xℓ
        #[arg(long)]
        numerator: String,
        /// Denominator: a product of forms of the arrangement
        #[arg(long)]
        denominator: String,
        /// Cell p (default: numerator degree)
        #[arg(long)]
        p: Option<usize>,
        /// Cell q (default: number of denominator factors)
        #[arg(long)]
        q: Option<usize>,
        /// JSON list of {"numerator": ..., "denominator": ...} used as the basis
        #[arg(long = "basis-file")]
        basis_file: Option<PathBuf>,
    },
    /// List the built-in families
    FamilyList {
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> Result<commands::Output, CliError> {
    match cli.command {
        Command::Lattice { source } => commands::lattice(&source),
        Command::Poincare { source } => commands::poincare(&source),
        Command::Series {
            source,
            grid,
            cumulative,
            exponents,
        } => commands::series(&source, grid.max_p, grid.max_q, cumulative, exponents.as_deref()),
        Command::Cseries { source, max_q } => commands::cseries(&source, max_q),
        Command::Dims { source, grid, cell } => commands::dims(&source, grid.max_p, grid.max_q, cell.as_deref()),
        Command::Verify { source, grid, exponents } => {
            commands::verify(&source, grid.max_p, grid.max_q, exponents.as_deref())
        }
        Command::Decompose {
            source,
            numerator,
            denominator,
            p,
            q,
            basis_file,
        } => commands::decompose(&source, &numerator, &denominator, p, q, basis_file.as_deref()),
        Command::FamilyList { json } => Ok(commands::family_list(json)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let message = rendered.trim_start_matches("error: ");
            eprint!("error: usage: {message}");
            return ExitCode::from(error::EXIT_INPUT as u8);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.body.as_bytes());
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
