use std::fmt;
use std::ops::Deref;

use thiserror::Error;

/// Terminator appended to the first string inside suffix structures.
pub const SENTINEL_1: u8 = 0x00;
/// Terminator appended to the second string inside suffix structures.
pub const SENTINEL_2: u8 = 0x01;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("reserved sentinel byte {byte:#04x} at offset {offset}")]
    ReservedByte { byte: u8, offset: usize },
}

/// A byte string guaranteed not to contain either sentinel value.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Sequence(Vec<u8>);

impl Sequence {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self, SequenceError> {
        let bytes = bytes.into();
        if let Some(offset) = bytes.iter().position(|&b| is_sentinel(b)) {
            return Err(SequenceError::ReservedByte {
                byte: bytes[offset],
                offset,
            });
        }
        Ok(Sequence(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    /// The reversed sequence.
    pub fn reversed(&self) -> Sequence {
        Sequence(self.0.iter().rev().copied().collect())
    }

    /// Copy of `self[range]`; slicing cannot introduce a sentinel.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Sequence {
        Sequence(self.0[range].to_vec())
    }
}

pub(crate) fn is_sentinel(b: u8) -> bool {
    b == SENTINEL_1 || b == SENTINEL_2
}

impl Deref for Sequence {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl TryFrom<&str> for Sequence {
    type Error = SequenceError;

    fn try_from(s: &str) -> Result<Self, Self::Error> {
        Sequence::new(s.as_bytes())
    }
}

impl TryFrom<&[u8]> for Sequence {
    type Error = SequenceError;

    fn try_from(s: &[u8]) -> Result<Self, Self::Error> {
        Sequence::new(s)
    }
}

impl TryFrom<Vec<u8>> for Sequence {
    type Error = SequenceError;

    fn try_from(s: Vec<u8>) -> Result<Self, Self::Error> {
        Sequence::new(s)
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence({:?})", String::from_utf8_lossy(&self.0))
    }
}

/// Number of positions where `a` and `b` differ. Panics if lengths differ.
pub fn hamming(a: &[u8], b: &[u8]) -> usize {
    assert_eq!(a.len(), b.len(), "hamming distance needs equal lengths");
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}
