//! File I/O, configuration, and the command implementations behind the
//! `prseq` binary. The algorithmic work lives in `prseq-core`; this crate
//! adds the filesystem, manifests, and the paper-style experiment presets.

pub mod commands;
pub mod config;
pub mod families;
pub mod io;
pub mod manifest;
pub mod polyparse;

use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes: 0 success, 1 violation or test failure of interest,
/// 2 usage, 3 I/O or malformed data.
pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE_OF_INTEREST: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Data { path: PathBuf, message: String },
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        Self::Usage(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } | CliError::Data { .. } => EXIT_IO,
            CliError::Failure(_) => EXIT_FAILURE_OF_INTEREST,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
