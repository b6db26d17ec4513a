//! `degix`: certified GA/ABC comparisons from the command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O, parse or evaluation error,
//! 3 a theorem inconsistency or conjecture violation was certified.

mod commands;
mod input;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::output::Format;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Failed(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => m,
        }
    }
}

/// Finished command output plus whether it certifies an inconsistency.
pub struct Rendered {
    pub text: String,
    pub inconsistency: Option<String>,
}

impl Rendered {
    pub fn ok(text: String) -> Self {
        Rendered { text, inconsistency: None }
    }
}

#[derive(Parser, Debug)]
#[command(name = "degix", version, about = "Certified GA/ABC index comparison for simple graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Maximum working precision in bits for certified comparisons.
    #[arg(long, global = true, env = "DEGIX_MAX_PRECISION", default_value_t = 512, value_parser = parse_precision)]
    pub precision: u32,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

fn parse_precision(s: &str) -> Result<u32, String> {
    match s.trim().parse::<u32>() {
        Ok(p @ (64 | 128 | 256 | 512)) => Ok(p),
        _ => Err(format!("precision must be one of 64, 128, 256, 512 (got `{s}`)")),
    }
}

/// Exactly one graph source.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Family specification such as `wheel:195`, `starlike:4,3,2,2` or `tstar`.
    #[arg(long)]
    pub family: Option<String>,
    /// graph6 file, one graph per line.
    #[arg(long)]
    pub g6: Option<PathBuf>,
    /// Edge-list file: a header `n m` followed by `m` lines `u v`.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// GA, ABC and the certified sign of GA - ABC.
    Compute(Source),
    /// Edge-degree census and degree statistics.
    Census(Source),
    /// Generate a family member.
    Family {
        #[arg(long)]
        family: String,
    },
    /// Line graph of the input.
    Linegraph(Source),
    /// Line-graph recognition with a witness when the answer is no.
    Recognize(Source),
    /// Check a theorem's hypothesis and certify its conclusion.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Theorem id, e.g. `dt_delta3` or `line_molecular`.
        #[arg(long)]
        theorem: String,
    },
    /// Certify both sandwich bounds relating ABC to GA.
    Sandwich(Source),
    /// Certified sign of GA(W_n) - ABC(W_n) over a range of wheel orders.
    Crossover {
        #[arg(long, default_value = "4..300")]
        range: String,
    },
    /// List non-isomorphic connected graphs (or trees) by order.
    Enumerate {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Enumerate trees instead of connected graphs.
        #[arg(long)]
        trees: bool,
    },
    /// Search for a connected non-trivial graph with GA = ABC.
    Conjecture {
        /// Scan all connected graphs up to this order (ignored with --g6).
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Also scan all trees up to this order.
        #[arg(long)]
        trees_max_n: Option<usize>,
        /// Scan the graphs in this graph6 file instead.
        #[arg(long)]
        g6: Option<PathBuf>,
    },
    /// Sweep a family over parameter ranges.
    Sweep {
        /// Family keyword, e.g. `wheel`, `kbip`, `bridge`, `starlike`.
        #[arg(long)]
        family: String,
        /// One `LO..HI` range per parameter (inclusive).
        #[arg(long, required = true)]
        range: Vec<String>,
        /// Test each instance against this theorem instead of a plain comparison.
        #[arg(long)]
        theorem: Option<String>,
    },
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Failed(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Failed(format!("writing output: {e}")))
        }
    }
}

fn exit_code(result: &Result<Rendered, CliError>) -> u8 {
    match result {
        Ok(Rendered { inconsistency: None, .. }) => 0,
        Ok(Rendered { inconsistency: Some(_), .. }) => 3,
        Err(e) => e.code(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = commands::run(&cli).and_then(|r| emit(&cli, &r.text).map(|_| r));
    match &result {
        Ok(Rendered { inconsistency: Some(why), .. }) => eprintln!("degix: inconsistency detected: {why}"),
        Err(e) => eprintln!("degix: {}", e.message()),
        Ok(_) => {}
    }
    ExitCode::from(exit_code(&result))
}
