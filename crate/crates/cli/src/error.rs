use thiserror::Error;

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PRECISION: u8 = 3;
pub const EXIT_NETWORK: u8 = 4;
pub const EXIT_PARSE: u8 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precision(String),
    #[error("network error: {0}")]
    Network(String),
    #[error("{id} is not cached and --offline is set")]
    CacheMiss { id: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cache error: {0}")]
    Cache(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Cache(_) => EXIT_USAGE,
            CliError::Precision(_) => EXIT_PRECISION,
            CliError::Network(_) | CliError::CacheMiss { .. } => EXIT_NETWORK,
            CliError::Parse(_) => EXIT_PARSE,
        }
    }
}

impl From<riordan_core::Error> for CliError {
    fn from(e: riordan_core::Error) -> Self {
        use riordan_core::Error as E;
        match e {
            E::InsufficientOrder { .. } | E::NonIntegral { .. } => CliError::Precision(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
