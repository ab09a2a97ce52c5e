//! Key-file readers and writers.
//!
//! Text format: one unsigned decimal per line, LF-terminated. Binary
//! format: magic `APS1`, an 8-byte little-endian count, then that many
//! 8-byte little-endian words. Both round-trip byte-identically for
//! canonical files.

use std::fmt;
use std::fs;
use std::path::Path;

pub const BINARY_MAGIC: &[u8; 4] = b"APS1";

/// Supported key-file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Binary,
}

/// A malformed or unreadable key file.
#[derive(Debug)]
pub struct FileError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

impl std::error::Error for FileError {}

fn file_error(path: &Path, message: impl Into<String>) -> FileError {
    FileError { path: path.display().to_string(), message: message.into() }
}

pub fn read_keys(path: &Path, format: Format) -> Result<Vec<u64>, FileError> {
    match format {
        Format::Text => {
            let content = fs::read_to_string(path)
                .map_err(|e| file_error(path, e.to_string()))?;
            content
                .lines()
                .enumerate()
                .map(|(lineno, line)| {
                    line.trim().parse::<u64>().map_err(|_| {
                        file_error(path, format!("line {}: invalid key {:?}", lineno + 1, line))
                    })
                })
                .collect()
        }
        Format::Binary => {
            let bytes = fs::read(path).map_err(|e| file_error(path, e.to_string()))?;
            if bytes.len() < 12 || &bytes[..4] != BINARY_MAGIC {
                return Err(file_error(path, "missing APS1 header"));
            }
            let count = u64::from_le_bytes(bytes[4..12].try_into().unwrap()) as usize;
            let body = &bytes[12..];
            if body.len() != count * 8 {
                return Err(file_error(
                    path,
                    format!("expected {count} words, found {} bytes of data", body.len()),
                ));
            }
            Ok(body
                .chunks_exact(8)
                .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
                .collect())
        }
    }
}

pub fn write_keys(path: &Path, format: Format, keys: &[u64]) -> Result<(), FileError> {
    let bytes = match format {
        Format::Text => {
            let mut out = String::new();
            for k in keys {
                out.push_str(&k.to_string());
                out.push('\n');
            }
            out.into_bytes()
        }
        Format::Binary => {
            let mut out = Vec::with_capacity(12 + keys.len() * 8);
            out.extend_from_slice(BINARY_MAGIC);
            out.extend_from_slice(&(keys.len() as u64).to_le_bytes());
            for k in keys {
                out.extend_from_slice(&k.to_le_bytes());
            }
            out
        }
    };
    fs::write(path, bytes).map_err(|e| file_error(path, e.to_string()))
}

/// Text output with the original index of each key in a second column.
pub fn write_keys_with_indices(
    path: &Path,
    keys: &[u64],
    indices: &[usize],
) -> Result<(), FileError> {
    let mut out = String::new();
    for (k, i) in keys.iter().zip(indices) {
        out.push_str(&format!("{k}\t{i}\n"));
    }
    fs::write(path, out).map_err(|e| file_error(path, e.to_string()))
}
