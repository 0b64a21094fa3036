//! On-disk value lists.
//!
//! `text`: one unsigned decimal per line; the trailing newline is optional.
//! `bin`: raw little-endian words of the configured width, no header.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::AppError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Bin,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "bin" => Ok(Format::Bin),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

pub fn decode(bytes: &[u8], format: Format, width: u32) -> Result<Vec<u64>, AppError> {
    let max = if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    };
    match format {
        Format::Text => {
            let text = std::str::from_utf8(bytes)
                .map_err(|_| AppError::Malformed("input is not UTF-8".into()))?;
            let body = text.strip_suffix('\n').unwrap_or(text);
            if body.is_empty() {
                return Ok(Vec::new());
            }
            body.split('\n')
                .enumerate()
                .map(|(line, raw)| {
                    let s = raw.trim_end_matches('\r').trim();
                    let v: u64 = s.parse().map_err(|_| {
                        AppError::Malformed(format!(
                            "line {}: `{s}` is not an unsigned integer",
                            line + 1
                        ))
                    })?;
                    if v > max {
                        return Err(AppError::Malformed(format!(
                            "line {}: {v} does not fit in {width} bits",
                            line + 1
                        )));
                    }
                    Ok(v)
                })
                .collect()
        }
        Format::Bin => {
            let size = width as usize / 8;
            if !bytes.len().is_multiple_of(size) {
                return Err(AppError::Malformed(format!(
                    "{} bytes is not a whole number of {width}-bit words",
                    bytes.len()
                )));
            }
            Ok(bytes
                .chunks_exact(size)
                .map(|c| {
                    let mut buf = [0u8; 8];
                    buf[..size].copy_from_slice(c);
                    u64::from_le_bytes(buf)
                })
                .collect())
        }
    }
}

pub fn encode(values: &[u64], format: Format, width: u32) -> Vec<u8> {
    match format {
        Format::Text => {
            let mut out = String::with_capacity(values.len() * 8);
            for v in values {
                out.push_str(&v.to_string());
                out.push('\n');
            }
            out.into_bytes()
        }
        Format::Bin => {
            let size = width as usize / 8;
            values
                .iter()
                .flat_map(|v| v.to_le_bytes().into_iter().take(size))
                .collect()
        }
    }
}

pub fn read_values(path: &Path, format: Format, width: u32) -> Result<Vec<u64>, AppError> {
    let bytes = fs::read(path).map_err(|e| AppError::io(path, e))?;
    decode(&bytes, format, width)
}

pub fn write_values(
    path: &Path,
    values: &[u64],
    format: Format,
    width: u32,
) -> Result<(), AppError> {
    fs::write(path, encode(values, format, width)).map_err(|e| AppError::io(path, e))
}
