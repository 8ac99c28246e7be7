use std::path::Path;

use thiserror::Error;

/// Errors surfaced by the CLI, mapped onto process exit codes:
/// 1 for anything wrong with the input, 2 for I/O failures.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("parse error in {path}: {source}")]
    Parse { path: String, source: serde_json::Error },
    #[error("invalid scenario: {0}")]
    Validation(String),
    #[error("unknown shipment {0:?}")]
    UnknownShipment(String),
    #[error("shipment {id:?} cannot be quoted: {why}")]
    ShipmentNotQuotable { id: String, why: String },
    #[error("bad range: {0}")]
    BadRange(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Write { .. } => 2,
            _ => 1,
        }
    }

    pub fn read(path: &Path, source: std::io::Error) -> Self {
        CliError::Read { path: path.display().to_string(), source }
    }

    pub fn write(path: &Path, source: std::io::Error) -> Self {
        CliError::Write { path: path.display().to_string(), source }
    }
}
