use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sylvester_cli::{cmd_poly, cmd_scalar, cmd_vector, CliError, Family, Globals, PolyArgs, VectorArgs};

/// Exact restricted and vector partition functions.
#[derive(Parser, Debug)]
#[command(name = "sylvester", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Compare against the enumeration oracle.
    #[arg(long, global = true)]
    verify: bool,
    /// Largest s checked by scalar verification.
    #[arg(long, global = true, default_value_t = 50)]
    max_s: u64,
    /// Largest coordinate of the vector verification grid.
    #[arg(long, global = true, default_value_t = 12)]
    grid: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a member of a polynomial family.
    Poly {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        args: PolyFlags,
    },
    /// Restricted partition function of a part list.
    Scalar {
        /// Parts, e.g. `1,2,3`.
        #[arg(long)]
        parts: String,
        /// Argument of the count.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<i64>,
    },
    /// Vector partition function of a matrix.
    Vector {
        /// Rows separated by `;`, e.g. `1,2,0;1,0,1`.
        #[arg(long)]
        matrix: String,
        /// Argument vector, e.g. `3,5`.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// Chamber direction, components `re` or `re+im i`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Evaluate as a limit along alpha + eps * direction.
        #[arg(long)]
        limit: bool,
        /// Perturbation direction for --limit; all ones by default.
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
    },
}

#[derive(Args, Debug)]
struct PolyFlags {
    /// Scalar index.
    #[arg(long)]
    k: Option<u32>,
    /// Vector index, e.g. `1,0`.
    #[arg(long)]
    n: Option<String>,
    /// Parameters of a higher-order family, e.g. `1,2,3`.
    #[arg(long)]
    params: Option<String>,
    /// Matrix of a vector family of higher order.
    #[arg(long)]
    matrix: Option<String>,
    /// Eulerian parameter; one value or one per factor.
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<String>,
}

fn run(cli: Cli) -> Result<sylvester_cli::Report, CliError> {
    let globals = Globals { json: cli.json, verify: cli.verify, max_s: cli.max_s, grid: cli.grid };
    match cli.command {
        Command::Poly { family, args } => {
            let args = PolyArgs { k: args.k, n: args.n, params: args.params, matrix: args.matrix, rho: args.rho };
            cmd_poly(family, &args, &globals)
        }
        Command::Scalar { parts, s } => cmd_scalar(&parts, s, &globals),
        Command::Vector { matrix, s, alpha, limit, direction } => {
            cmd_vector(&VectorArgs { matrix, s, alpha, limit, direction }, &globals)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if let Err(e) = writeln!(out, "{}", report.stdout) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
