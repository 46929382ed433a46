use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("invalid partition file: {0}")]
    Partition(String),
    #[error(transparent)]
    Core(#[from] simplex_walk::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) => 2,
            CliError::Core(simplex_walk::Error::Numerical(_)) => 3,
            CliError::Usage(_) | CliError::Partition(_) | CliError::Core(_) => 1,
        }
    }
}
