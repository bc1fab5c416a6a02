//! Minimal FASTA reader.

use kmismatch::{Sequence, SequenceError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FastaError {
    #[error("empty input")]
    Empty,
    #[error("no FASTA records found")]
    NoRecords,
    #[error("sequence data before the first header on line {line}")]
    DataBeforeHeader { line: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside printable ASCII (use --binary to allow it)")]
    NonAscii { byte: u8, offset: usize },
    #[error("reserved sentinel byte {byte:#04x} at offset {offset}")]
    Sentinel { byte: u8, offset: usize },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FastaOptions {
    /// Map ASCII lowercase to uppercase.
    pub normalize_case: bool,
    /// Accept any byte except the two sentinels.
    pub binary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    pub header: String,
    pub sequence: Sequence,
}

/// Parses every record. Offsets in errors are byte offsets into `data`.
pub fn read_fasta(data: &[u8], opts: FastaOptions) -> Result<Vec<FastaRecord>, FastaError> {
    if data.is_empty() {
        return Err(FastaError::Empty);
    }
    let mut records: Vec<(String, Vec<u8>)> = Vec::new();
    let mut offset = 0;
    for (line_no, line) in data.split(|&b| b == b'\n').enumerate() {
        let line_start = offset;
        offset += line.len() + 1;
        if let Some(header) = line.strip_prefix(b">") {
            let header = String::from_utf8_lossy(header).trim().to_string();
            records.push((header, Vec::new()));
            continue;
        }
        let Some((_, seq)) = records.last_mut() else {
            if line.iter().any(|b| !b.is_ascii_whitespace()) {
                return Err(FastaError::DataBeforeHeader { line: line_no + 1 });
            }
            continue;
        };
        for (x, &b) in line.iter().enumerate() {
            if b.is_ascii_whitespace() {
                continue;
            }
            let at = line_start + x;
            if b == kmismatch::sequence::SENTINEL_1 || b == kmismatch::sequence::SENTINEL_2 {
                return Err(FastaError::Sentinel { byte: b, offset: at });
            }
            if !opts.binary && b > 0x7f {
                return Err(FastaError::NonAscii { byte: b, offset: at });
            }
            seq.push(if opts.normalize_case { b.to_ascii_uppercase() } else { b });
        }
    }
    if records.is_empty() {
        return Err(FastaError::NoRecords);
    }
    records
        .into_iter()
        .map(|(header, seq)| {
            let sequence = Sequence::new(seq).map_err(|SequenceError::ReservedByte { byte, offset }| {
                FastaError::Sentinel { byte, offset }
            })?;
            Ok(FastaRecord { header, sequence })
        })
        .collect()
}
