//! Suffix-tree machinery: generalized suffix trees with constant-time
//! lowest common ancestors, and their binary expansion.

mod array;
mod binary;
mod rmq;
mod tree;

use thiserror::Error;

pub use array::{lcp_array, suffix_array};
pub use binary::{BinaryKind, BinaryNode, BinarySuffixTree};
pub use rmq::SparseTable;
pub use tree::{GeneralizedSuffixTree, NodeRef, StringId, SuffixLabel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuffixError {
    #[error("node handle belongs to a different tree")]
    ForeignNode,
    #[error("node is not a leaf")]
    NotALeaf,
    #[error("no suffix starting at {start} in string {string}")]
    InvalidSuffix { string: usize, start: usize },
    #[error("rank {rank} out of range for {leaves} leaves")]
    RankOutOfRange { rank: usize, leaves: usize },
    #[error("tree was built over strings of lengths {found:?}, expected {expected:?}")]
    TreeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
}
