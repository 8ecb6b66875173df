//! Sequence file reading and writing in the two on-disk formats.

use std::path::Path;

use prseq_core::sequence::{decode_ascii, decode_packed, encode_ascii, encode_packed, BinarySequence};

use crate::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FileFormat {
    /// One '0'/'1' character per bit; whitespace ignored on read.
    Ascii,
    /// 8-byte little-endian bit count, then packed little-endian bits.
    Packed,
}

impl FileFormat {
    pub fn name(self) -> &'static str {
        match self {
            FileFormat::Ascii => "ascii",
            FileFormat::Packed => "packed",
        }
    }

    pub fn from_name(s: &str) -> CliResult<Self> {
        match s {
            "ascii" => Ok(FileFormat::Ascii),
            "packed" => Ok(FileFormat::Packed),
            _ => Err(CliError::usage(format!("unknown format {s:?}"))),
        }
    }
}

pub fn read_sequence(path: &Path, format: FileFormat) -> CliResult<BinarySequence> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let decoded = match format {
        FileFormat::Ascii => decode_ascii(&bytes),
        FileFormat::Packed => decode_packed(&bytes),
    };
    decoded.map_err(|e| CliError::Data {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

pub fn write_sequence(path: &Path, format: FileFormat, e: &BinarySequence) -> CliResult<()> {
    let bytes = match format {
        FileFormat::Ascii => encode_ascii(e),
        FileFormat::Packed => encode_packed(e),
    };
    std::fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
