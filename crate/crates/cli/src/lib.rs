//! Batch front end for `tca-lab`: flag handling, the ideal file format,
//! deterministic reports and the acceptance suite.
//!
//! Exit codes: 0 PASS, 2 FAIL, 3 INCONCLUSIVE, 4 bad input.

pub mod accept;
pub mod commands;
pub mod config;
pub mod parse;
pub mod report;

use commands::InputError;
use config::{Cli, Command, PosetTask, RunConfig};
use report::Report;

pub const INPUT_ERROR_EXIT: i32 = 4;

pub fn run(cli: &Cli) -> Result<Report, InputError> {
    let cfg = RunConfig::resolve(&cli.common).map_err(InputError::Usage)?;
    match &cli.command {
        Command::Decompose => Ok(commands::decompose(&cfg)),
        Command::Poset { task } => match task {
            PosetTask::VerifyExample => commands::verify_example(&cfg),
            PosetTask::Compare { a, b, order } => commands::compare(&cfg, a, b, *order),
            PosetTask::Antichain { edges, order } => commands::antichain(&cfg, *edges, *order),
            PosetTask::Sandbox => Ok(commands::sandbox(&cfg)),
        },
        Command::Ideal { check, reading } => commands::ideal(&cfg, *check, (*reading).into()),
        Command::Tor { rank_bound } => commands::tor(&cfg, *rank_bound),
        Command::Accept => Ok(accept::accept(&cfg)),
    }
}
