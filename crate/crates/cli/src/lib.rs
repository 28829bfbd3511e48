//! Library half of the `qhankel` command: object computation, verification
//! suites, OEIS cross-checks, output rendering and the result cache.

pub mod cache;
pub mod compute;
pub mod config;
pub mod error;
pub mod oeis;
pub mod report;
pub mod suites;

pub use config::{Format, OeisMode, Object, RunConfig};
pub use error::CliError;
pub use report::{Case, Status, VerifyReport};
