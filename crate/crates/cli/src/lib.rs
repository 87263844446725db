//! Command-line front end: each subcommand returns a [`RunReport`].

pub mod commands;
pub mod field;
pub mod report;

use clap::{Parser, Subcommand};
use quintic_core::FieldTag;

pub use commands::ledger::Emit;
pub use report::{CheckResult, RunReport};

#[derive(Debug, Parser)]
#[command(name = "quintic", version, about = "Linear systems of plane quintics and Borel-Moore bookkeeping")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample generic configurations and check dim L(K) against the type table.
    Dims {
        /// Type id 1..=42 or `all`.
        #[arg(long = "type", default_value = "all")]
        types: String,
        /// `qq` or `fp:<p>`.
        #[arg(long, default_value = "fp:65521", value_parser = field::parse_field)]
        field: FieldTag,
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compute the singular set of a quintic and classify it.
    Classify {
        /// Polynomial text or a file holding it.
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "fp:31", value_parser = field::parse_field)]
        field: FieldTag,
        /// Expected type id, `none` or `nonsingular`.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Run a spectral-sequence dataset through the bookkeeping pipeline.
    Ledger {
        #[arg(long, default_value = "quintic5")]
        dataset: String,
        #[arg(long, value_enum, default_value = "poincare")]
        emit: Emit,
    },
    /// Twisted homology of a cell-complex model.
    Homology {
        /// Built-in model name or a JSON file.
        #[arg(long)]
        model: String,
        #[arg(long, default_value = "qq", value_parser = field::parse_field)]
        field: FieldTag,
    },
}

pub fn run(cli: &Cli) -> RunReport {
    match &cli.command {
        Command::Dims { types, field, seeds, seed } => commands::dims::run(types, *field, *seeds, *seed),
        Command::Classify { poly, field, expect } => commands::classify::run(poly, *field, expect.as_deref()),
        Command::Ledger { dataset, emit } => commands::ledger::run(dataset, *emit),
        Command::Homology { model, field } => commands::homology::run(model, *field),
    }
}
