//! Library surface of the scenario runner: the scenario file model and
//! parser, the execution pipeline, and the deterministic artifact emitters.
//! The `nullsteer` binary is a thin argument-parsing wrapper over
//! [`run::execute`].

pub mod emit;
pub mod error;
pub mod run;
pub mod scenario;

pub use error::CliError;
pub use run::{execute, RunOptions, RunSummary};
pub use scenario::{emit_scenario, parse_scenario, ParseError, Scenario};
