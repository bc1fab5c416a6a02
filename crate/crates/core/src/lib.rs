//! Longest common substrings and matching statistics under Hamming distance.
//!
//! * [`scan`] holds the diagonal algorithms for any mismatch budget `k`.
//! * [`one_mismatch`] solves the `k = 1` case in `O(n log m)` with suffix
//!   trees.
//! * [`suffix`] is the suffix-tree infrastructure both rely on.
//! * [`oracle`] has slow, obviously correct versions of everything.
//!
//! ```
//! use kmismatch::{scan, Sequence};
//!
//! let a = Sequence::try_from("GATTACA").unwrap();
//! let b = Sequence::try_from("TTTACCA").unwrap();
//! let best = scan::lcf_queue(&a, &b, 1);
//! assert_eq!(best.length, 5);
//! assert!(best.is_valid_for(&a, &b, 1));
//! ```

pub mod one_mismatch;
pub mod oracle;
pub mod scan;
pub mod sequence;
pub mod suffix;

pub use scan::{LcfResult, MsArray, Orientation};
pub use sequence::{hamming, Sequence, SequenceError};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/diagonal-scan.md")]
    mod diagonal_scan {}
    #[doc = include_str!("../../../book/src/matching-statistics.md")]
    mod matching_statistics {}
    #[doc = include_str!("../../../book/src/suffix-trees.md")]
    mod suffix_trees {}
    #[doc = include_str!("../../../book/src/one-mismatch.md")]
    mod one_mismatch {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
