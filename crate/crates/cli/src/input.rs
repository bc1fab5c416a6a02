//! Loading a sequence from a file in one of the supported formats.

use std::path::{Path, PathBuf};

use kmismatch::sequence::{SENTINEL_1, SENTINEL_2};
use kmismatch::Sequence;
use thiserror::Error;

use crate::config::InputFormat;
use crate::fasta::{read_fasta, FastaError, FastaOptions};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FastaError },
    #[error("{path}: record {record} requested but the file has {count}")]
    RecordOutOfRange { path: PathBuf, record: usize, count: usize },
}

/// Plain text: every byte is a symbol, except that one trailing `\n` or
/// `\r\n` is dropped.
pub fn parse_plain(data: &[u8], opts: FastaOptions) -> Result<Sequence, FastaError> {
    let data = data.strip_suffix(b"\n").map_or(data, |d| d.strip_suffix(b"\r").unwrap_or(d));
    let mut bytes = Vec::with_capacity(data.len());
    for (offset, &b) in data.iter().enumerate() {
        if b == SENTINEL_1 || b == SENTINEL_2 {
            return Err(FastaError::Sentinel { byte: b, offset });
        }
        if !opts.binary && b > 0x7f {
            return Err(FastaError::NonAscii { byte: b, offset });
        }
        bytes.push(if opts.normalize_case { b.to_ascii_uppercase() } else { b });
    }
    Ok(Sequence::new(bytes).expect("sentinels rejected above"))
}

/// Reads `path`; for FASTA, `record` (1-based) picks the record.
pub fn load_sequence(
    path: &Path,
    format: InputFormat,
    record: usize,
    opts: FastaOptions,
) -> Result<Sequence, InputError> {
    let data = std::fs::read(path).map_err(|source| InputError::Io { path: path.to_owned(), source })?;
    let parse_err = |source| InputError::Parse { path: path.to_owned(), source };
    match format {
        InputFormat::Plain => parse_plain(&data, opts).map_err(parse_err),
        InputFormat::Fasta => {
            let records = read_fasta(&data, opts).map_err(parse_err)?;
            let count = records.len();
            records
                .into_iter()
                .nth(record.saturating_sub(1))
                .map(|r| r.sequence)
                .ok_or(InputError::RecordOutOfRange { path: path.to_owned(), record, count })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_strips_one_newline() {
        let o = FastaOptions::default();
        assert_eq!(parse_plain(b"abc\n", o).unwrap().as_bytes(), b"abc");
        assert_eq!(parse_plain(b"abc\r\n", o).unwrap().as_bytes(), b"abc");
        assert_eq!(parse_plain(b"abc\n\n", o).unwrap().as_bytes(), b"abc\n");
        assert_eq!(parse_plain(b"", o).unwrap().as_bytes(), b"");
        assert_eq!(parse_plain(b"ab\x01c", o), Err(FastaError::Sentinel { byte: 1, offset: 2 }));
        assert!(parse_plain(b"\xff", o).is_err());
        assert!(parse_plain(b"\xff", FastaOptions { binary: true, ..o }).is_ok());
    }
}
