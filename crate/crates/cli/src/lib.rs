//! Library side of the `equimon` command-line tool: the JSON instance
//! format, reports, and the subcommands.

pub mod commands;
pub mod dot;
pub mod instance;
pub mod report;

pub use instance::{InputError, Instance, InstanceFile, Limits};
pub use report::{CheckVerdict, Report, Verdict};
