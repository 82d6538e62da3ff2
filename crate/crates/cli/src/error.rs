use pcb_core::decomp::DecompError;
use pcb_core::poly::OracleError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    BadPrime(String),
    #[error("verification failed: {}", .0.join(", "))]
    Verification(Vec<String>),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Validation(_) => 3,
            CliError::BadPrime(_) => 4,
            CliError::Verification(_) => 5,
        }
    }
}

impl From<DecompError> for CliError {
    fn from(e: DecompError) -> Self {
        match e {
            DecompError::BadPrime { .. } | DecompError::Oracle(OracleError::UnsupportedField(_)) => {
                CliError::BadPrime(e.to_string())
            }
            DecompError::VerificationFailed { .. } | DecompError::HypothesisFailed(_) => {
                CliError::Verification(vec![e.to_string()])
            }
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        DecompError::from(e).into()
    }
}

impl From<pcb_core::pcb::PcbError> for CliError {
    fn from(e: pcb_core::pcb::PcbError) -> Self {
        CliError::Validation(e.to_string())
    }
}
