//! `qexpand`: compute base-change matrices and expansions, and run the
//! symbolic and numeric verification suites.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on a
//! usage or parse error.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "qexpand", version, about = "Exact q-expansion engine and identity verifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Truncation order N.
    #[arg(long = "n", default_value_t = 10)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Seed for randomized cases.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Run the suites on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Args, Clone, Debug)]
pub struct Params {
    /// Base parameter `a` as a rational-function literal.
    #[arg(long, default_value = "a", allow_hyphen_values = true)]
    pub a: String,
    /// Base parameter `b` as a rational-function literal.
    #[arg(long, default_value = "b", allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Args, Clone, Debug)]
pub struct Precision {
    /// Mantissa bits for numeric checks.
    #[arg(long, default_value_t = qexpand_core::numeric::DEFAULT_PRECISION)]
    pub precision: usize,
    /// Absolute tolerance for numeric checks.
    #[arg(long, default_value = "1e-25")]
    pub tol: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    #[value(name = "coogan_ono")]
    CooganOno,
    One,
    Basek,
}

#[derive(Subcommand)]
enum Command {
    /// Print the base matrix A or its inverse B.
    Matrix {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = Which::A)]
        which: Which,
    },
    /// Expand F in the base by both coefficient routes.
    Expand {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, conflicts_with = "coeffs")]
        builtin: Option<Builtin>,
        /// Index for `--builtin basek`.
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Comma-separated z-coefficients of F.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
    },
    /// Print g_1..g_N and check B_{n,1}(a, aq) = g_n a^{n-1}.
    Gn {
        #[command(flatten)]
        common: Common,
    },
    /// Run the named symbolic checks.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(required = true)]
        names: Vec<String>,
    },
    /// Run every symbolic check and the default numeric grid.
    VerifyAll {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        precision: Precision,
        /// Skip the numeric grid.
        #[arg(long)]
        symbolic_only: bool,
    },
    /// Check one identity numerically at the given or default points.
    NumericVerify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        precision: Precision,
        #[arg(long)]
        identity: String,
        /// JSON file: [{"q": "0.1", "a": "0.3", ...}, ...].
        #[arg(long)]
        points: Option<std::path::PathBuf>,
    },
    /// Time the symbolic suite sequentially and in parallel.
    Bench {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
    },
}

/// Error carried to the exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed,
}

impl From<qexpand_core::Error> for CliError {
    fn from(e: qexpand_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = std::panic::catch_unwind(|| dispatch(cli.command));
    match result {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError::Failed)) => ExitCode::from(1),
        Ok(Err(CliError::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(1),
    }
}

fn dispatch(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Matrix { common, params, which } => commands::matrix(&common, &params, which),
        Command::Expand { common, params, builtin, k, coeffs } => {
            commands::expand(&common, &params, builtin, k, coeffs.as_deref())
        }
        Command::Gn { common } => commands::gn(&common),
        Command::Verify { common, names } => commands::verify(&common, &names),
        Command::VerifyAll { common, precision, symbolic_only } => {
            commands::verify_all(&common, &precision, symbolic_only)
        }
        Command::NumericVerify { common, precision, identity, points } => {
            commands::numeric_verify(&common, &precision, &identity, points.as_deref())
        }
        Command::Bench { common, repeats } => commands::bench(&common, repeats),
    }
}
