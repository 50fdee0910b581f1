//! `hangable`: command-line front end for the graph-metrics library.
//!
//! Exit codes: 0 success (or hangable), 1 connected but not hangable (or
//! an oracle mismatch), 2 malformed input or usage, 3 disconnected input,
//! 4 refused (precondition or budget).

mod commands;
mod input;
mod output;

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hangable::explorer::DEFAULT_SUBSET_BUDGET;
use hangable::GraphError;

pub const EXIT_NOT_HANGABLE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_DISCONNECTED: u8 = 3;
pub const EXIT_REFUSED: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    pub fn refused(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_REFUSED,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        let code = match &e {
            GraphError::Disconnected { .. } => EXIT_DISCONNECTED,
            e if e.is_parse_error() => EXIT_INPUT,
            GraphError::EmptyGraph | GraphError::InvalidSize(_) | GraphError::UnknownVertex { .. } => EXIT_INPUT,
            _ => EXIT_REFUSED,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(format!("I/O error: {e}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
    Graph6,
}

#[derive(Debug, Parser)]
#[command(name = "hangable", version, about = "Eccentricity, periphery and hangability of simple graphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Print only graph outputs; reports are reduced to the exit code.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Maximum number of vertex subsets a subgraph search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSET_BUDGET)]
    pub budget: u128,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductArg {
    Corona,
    Cartesian,
    Join,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Induced,
    ConnectedInduced,
}

/// Graph inputs are a file path, `-` for stdin, `g6:<code>`, or a
/// generator expression such as `grid:3x4` or `cycle:7`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eccentricities, peripheries and the hangability verdict.
    Analyze { input: String },
    /// Build a corona, cartesian or join product.
    Product {
        kind: ProductArg,
        g: String,
        h: String,
        /// Compare closed-form metrics against BFS on the product.
        #[arg(long)]
        oracle_check: bool,
    },
    /// A hangable supergraph containing the input as an induced subgraph.
    Embed { input: String },
    /// The k-th power, or the least k whose power is hangable.
    Power {
        input: String,
        #[arg(long, short = 'k', conflicts_with = "smallest", required_unless_present = "smallest")]
        k: Option<usize>,
        #[arg(long)]
        smallest: bool,
    },
    /// Blocks and cut vertices.
    Blocks { input: String },
    /// Classify a stream of graph6 lines, one record per line.
    Classify {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Emit a graph from a named family, e.g. `generate grid 3 4`.
    Generate { family: String, params: Vec<usize> },
    /// Count hangable induced subgraphs of a host graph by size.
    SubgraphSearch {
        host: String,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Induced)]
        mode: ModeArg,
        /// List every hangable subgraph found.
        #[arg(long)]
        emit: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("hangable: {e}");
            ExitCode::from(e.code)
        }
    }
}
