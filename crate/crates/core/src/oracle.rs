//! Brute-force reference implementations.
//!
//! Nothing in here shares code with the optimized paths. Every function is a
//! direct transcription of a definition and is meant to be read, not run on
//! large inputs.

use thiserror::Error;

use crate::scan::{LcfResult, MsArray, Orientation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("cell ({i}, {j}) outside a {n} x {m} matrix")]
    OutOfRange {
        i: usize,
        j: usize,
        n: usize,
        m: usize,
    },
}

/// Length of the longest common suffixes of `s1[..=i]` and `s2[..=j]` with
/// at most `k` mismatches, by walking backwards and counting.
pub fn phi_naive(s1: &[u8], s2: &[u8], k: usize, i: usize, j: usize) -> Result<usize, OracleError> {
    if i >= s1.len() || j >= s2.len() {
        return Err(OracleError::OutOfRange {
            i,
            j,
            n: s1.len(),
            m: s2.len(),
        });
    }
    let mut mismatches = 0;
    let mut len = 0;
    while len <= i.min(j) {
        if s1[i - len] != s2[j - len] {
            mismatches += 1;
            if mismatches > k {
                break;
            }
        }
        len += 1;
    }
    Ok(len)
}

/// Maximum of `phi_naive` over every cell, with the first argmax in row-major
/// order as the witness.
pub fn lcf_naive(s1: &[u8], s2: &[u8], k: usize) -> LcfResult {
    let mut best = LcfResult::default();
    for i in 0..s1.len() {
        for j in 0..s2.len() {
            let len = phi_naive(s1, s2, k, i, j).expect("in range");
            if len > best.length {
                best = LcfResult {
                    length: len,
                    start1: i + 1 - len,
                    start2: j + 1 - len,
                };
            }
        }
    }
    best
}

/// For every start in `s2`, the longest prefix that occurs in `s1` with at
/// most `k` mismatches, trying every alignment.
pub fn ms_naive(s1: &[u8], s2: &[u8], k: usize) -> MsArray {
    let values = (0..s2.len())
        .map(|i| {
            (0..s1.len())
                .map(|a| {
                    let mut mismatches = 0;
                    let mut len = 0;
                    while a + len < s1.len() && i + len < s2.len() {
                        if s1[a + len] != s2[i + len] {
                            mismatches += 1;
                            if mismatches > k {
                                break;
                            }
                        }
                        len += 1;
                    }
                    len
                })
                .max()
                .unwrap_or(0)
        })
        .collect();
    MsArray::new(values, Orientation::Prefix)
}

/// Length of the longest pattern `u *^k v` matching two distinct substrings
/// of `s`, by enumerating every pair of starts and every left-part length.
pub fn longest_k_repeat_naive(s: &[u8], k: usize) -> usize {
    let n = s.len();
    let mut best = 0;
    for p1 in 0..n {
        for p2 in p1 + 1..n {
            // p2 > p1, so the gap fitting at p2 implies it fits at p1.
            let mut u = 0;
            loop {
                if p2 + u + k > n {
                    break;
                }
                let mut v = 0;
                while p2 + u + k + v < n && s[p1 + u + k + v] == s[p2 + u + k + v] {
                    v += 1;
                }
                best = best.max(u + k + v);
                if p2 + u >= n || s[p1 + u] != s[p2 + u] {
                    break;
                }
                u += 1;
            }
        }
    }
    best
}

/// Longest substring pair with at most `k` mismatches where the witness is
/// listed explicitly; used to check maximality claims.
pub fn exists_match_of_length(s1: &[u8], s2: &[u8], k: usize, len: usize) -> bool {
    if len > s1.len() || len > s2.len() {
        return false;
    }
    (0..=s1.len() - len).any(|a| {
        (0..=s2.len() - len).any(|b| {
            s1[a..a + len]
                .iter()
                .zip(&s2[b..b + len])
                .filter(|(x, y)| x != y)
                .count()
                <= k
        })
    })
}
