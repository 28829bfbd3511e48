use std::path::PathBuf;

use clap::ValueEnum;
use qhankel_core::hankel::DEFAULT_ORACLE_BOUND;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OeisMode {
    #[default]
    Embedded,
    Online,
}

/// Which polynomial family `compute` evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Object {
    /// r_{m,n}
    R,
    /// u(n, q)
    U,
    /// d_{m,n}
    D,
    /// det V_{k,n}
    V,
    /// <n k>_q
    Triangle,
}

impl Object {
    pub fn name(self) -> &'static str {
        match self {
            Object::R => "r",
            Object::U => "u",
            Object::D => "d",
            Object::V => "v",
            Object::Triangle => "triangle",
        }
    }
}

/// Parameters shared by every command after argument parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub k: Option<i64>,
    pub q0: Option<i64>,
    pub max_n: Option<usize>,
    pub max_m: Option<usize>,
    pub format: Format,
    pub oracle_bound: usize,
    pub oeis_mode: OeisMode,
    pub cache_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m: None,
            n: None,
            k: None,
            q0: None,
            max_n: None,
            max_m: None,
            format: Format::Text,
            oracle_bound: DEFAULT_ORACLE_BOUND,
            oeis_mode: OeisMode::Embedded,
            cache_path: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.oracle_bound < 1 {
            return Err(CliError::Usage("--oracle-bound must be at least 1".into()));
        }
        Ok(())
    }

    pub fn require(&self, value: Option<i64>, flag: &str) -> Result<i64, CliError> {
        value.ok_or_else(|| CliError::Usage(format!("missing required flag --{flag}")))
    }

    pub fn require_nonneg(&self, value: Option<i64>, flag: &str) -> Result<usize, CliError> {
        let v = self.require(value, flag)?;
        usize::try_from(v).map_err(|_| CliError::Usage(format!("--{flag} must be nonnegative, got {v}")))
    }
}
