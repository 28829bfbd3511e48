use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("network: {0}")]
    Network(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] qhankel_core::Error),
}

impl CliError {
    /// 2 for usage errors, 3 for network and IO, 1 for anything the engine
    /// itself rejects.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Network(_) | CliError::Io(_) => 3,
            CliError::Core(_) => 1,
        }
    }
}
