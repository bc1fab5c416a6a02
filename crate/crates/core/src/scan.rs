//! Diagonal scans over the matrix of longest approximate common suffixes.
//!
//! Cell `(i, j)` of that matrix holds the length of the longest common suffix
//! of `s1[..=i]` and `s2[..=j]` with at most `k` mismatches. Every diagonal is
//! scanned left to right while a window `[s, p)` of the diagonal is kept with
//! at most `k` mismatches inside it; `p - s` is then the value of the cell
//! just before `p`.

use crate::sequence::hamming;
use crate::suffix::{GeneralizedSuffixTree, StringId, SuffixError};

/// A longest common substring with at most `k` mismatches.
///
/// When `length == 0` both starts are zero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct LcfResult {
    pub length: usize,
    pub start1: usize,
    pub start2: usize,
}

impl LcfResult {
    /// Whether the witness fits inside both strings and has Hamming distance
    /// at most `k`.
    pub fn is_valid_for(&self, s1: &[u8], s2: &[u8], k: usize) -> bool {
        if self.length == 0 {
            return true;
        }
        let (Some(end1), Some(end2)) = (
            self.start1.checked_add(self.length),
            self.start2.checked_add(self.length),
        ) else {
            return false;
        };
        end1 <= s1.len()
            && end2 <= s2.len()
            && hamming(&s1[self.start1..end1], &s2[self.start2..end2]) <= k
    }

    pub fn witness<'a>(&self, s1: &'a [u8], s2: &'a [u8]) -> (&'a [u8], &'a [u8]) {
        (
            &s1[self.start1..self.start1 + self.length],
            &s2[self.start2..self.start2 + self.length],
        )
    }
}

/// A single cell of the suffix matrix, `(i, j)` with budget `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiQuery {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl PhiQuery {
    pub fn in_bounds(&self, n: usize, m: usize) -> bool {
        self.i < n && self.j < m
    }
}

/// Which end of `s2` the matching statistics are anchored at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `values[i]`: longest prefix of `s2[i..]` found in `s1`.
    Prefix,
    /// `values[i]`: longest suffix of `s2[..=i]` found in `s1`.
    Suffix,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MsArray {
    values: Vec<usize>,
    orientation: Orientation,
}

impl MsArray {
    pub fn new(values: Vec<usize>, orientation: Orientation) -> Self {
        MsArray { values, orientation }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// FIFO of the mismatch offsets inside the current diagonal window.
///
/// Backed by a ring buffer whose capacity is `min(k, longest diagonal) + 1`,
/// so a huge budget does not allocate a huge buffer.
#[derive(Debug, Clone)]
pub struct MismatchQueue {
    buf: Vec<usize>,
    head: usize,
    len: usize,
    budget: usize,
}

impl MismatchQueue {
    pub fn new(budget: usize, max_diagonal: usize) -> Self {
        MismatchQueue {
            buf: vec![0; budget.min(max_diagonal) + 1],
            head: 0,
            len: 0,
            budget,
        }
    }

    pub fn clear(&mut self) {
        self.head = 0;
        self.len = 0;
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn front(&self) -> Option<usize> {
        (self.len > 0).then(|| self.buf[self.head])
    }

    /// Records a mismatch at offset `p`. If that pushes the window over
    /// budget the oldest mismatch is evicted and returned; the window must
    /// then start right after it.
    ///
    /// Offsets must be pushed in increasing order.
    pub fn push(&mut self, p: usize) -> Option<usize> {
        debug_assert!(self.len == 0 || self.back() < p);
        let cap = self.buf.len();
        let tail = (self.head + self.len) % cap;
        self.buf[tail] = p;
        self.len += 1;
        if self.len > self.budget {
            let evicted = self.buf[self.head];
            self.head = (self.head + 1) % cap;
            self.len -= 1;
            Some(evicted)
        } else {
            None
        }
    }

    fn back(&self) -> usize {
        let cap = self.buf.len();
        self.buf[(self.head + self.len - 1) % cap]
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let cap = self.buf.len();
        (0..self.len).map(move |x| self.buf[(self.head + x) % cap])
    }
}

/// Start cell `(i, j)` and length of diagonal `d`, for `d` in `-(m-1)..n`.
#[inline]
fn diagonal(d: isize, n: usize, m: usize) -> (usize, usize, usize) {
    let j = if d < 0 { (-d) as usize } else { 0 };
    let i = (j as isize + d) as usize;
    (i, j, (n - i).min(m - j))
}

/// Longest common substring with at most `k` mismatches, queue based.
///
/// Diagonals are visited from `d = -(m-1)` up to `n-1` and cells along a
/// diagonal in increasing order; the witness is the first cell reaching the
/// final length in that order.
///
/// ```
/// use kmismatch::scan::lcf_queue;
/// let r = lcf_queue(b"abcde", b"xbcdy", 1);
/// assert_eq!((r.length, r.start1, r.start2), (4, 0, 0));
/// ```
pub fn lcf_queue(s1: &[u8], s2: &[u8], k: usize) -> LcfResult {
    let (n, m) = (s1.len(), s2.len());
    let mut best = LcfResult::default();
    if n == 0 || m == 0 {
        return best;
    }
    let mut queue = MismatchQueue::new(k, n.min(m));
    for d in -(m as isize - 1)..n as isize {
        let (i, j, len) = diagonal(d, n, m);
        queue.clear();
        let mut s = 0;
        for p in 0..len {
            if s1[i + p] != s2[j + p] {
                if let Some(evicted) = queue.push(p) {
                    s = evicted + 1;
                }
            }
            if p + 1 - s > best.length {
                best = LcfResult {
                    length: p + 1 - s,
                    start1: i + s,
                    start2: j + s,
                };
            }
        }
    }
    best
}

/// Same result length as [`lcf_queue`] using a single mismatch counter.
///
/// When the window goes over budget, the mismatch to evict is found again by
/// rescanning the diagonal from the window start. Each symbol is read at most
/// twice per diagonal and nothing is allocated.
pub fn lcf_const_space(s1: &[u8], s2: &[u8], k: usize) -> LcfResult {
    let (n, m) = (s1.len(), s2.len());
    let mut best = LcfResult::default();
    if n == 0 || m == 0 {
        return best;
    }
    for d in -(m as isize - 1)..n as isize {
        let (i, j, len) = diagonal(d, n, m);
        let mut s = 0;
        let mut mismatches = 0;
        for p in 0..len {
            if s1[i + p] != s2[j + p] {
                mismatches += 1;
                if mismatches > k {
                    while s1[i + s] == s2[j + s] {
                        s += 1;
                    }
                    s += 1;
                    mismatches -= 1;
                }
            }
            if p + 1 - s > best.length {
                best = LcfResult {
                    length: p + 1 - s,
                    start1: i + s,
                    start2: j + s,
                };
            }
        }
    }
    best
}

/// Per-diagonal jump counts recorded by [`lcf_kangaroo_traced`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KangarooTrace {
    /// Indexed by `d + m - 1`.
    pub jumps: Vec<usize>,
    pub mismatches: Vec<usize>,
}

impl KangarooTrace {
    pub fn total_jumps(&self) -> usize {
        self.jumps.iter().sum()
    }
}

/// Same result length as [`lcf_queue`], skipping matching runs with longest
/// common extension queries on a generalized suffix tree over `(s1, s2)`.
pub fn lcf_kangaroo(
    s1: &[u8],
    s2: &[u8],
    k: usize,
    tree: &GeneralizedSuffixTree,
) -> Result<LcfResult, SuffixError> {
    lcf_kangaroo_inner(s1, s2, k, tree, None)
}

pub fn lcf_kangaroo_traced(
    s1: &[u8],
    s2: &[u8],
    k: usize,
    tree: &GeneralizedSuffixTree,
) -> Result<(LcfResult, KangarooTrace), SuffixError> {
    let mut trace = KangarooTrace::default();
    let r = lcf_kangaroo_inner(s1, s2, k, tree, Some(&mut trace))?;
    Ok((r, trace))
}

fn lcf_kangaroo_inner(
    s1: &[u8],
    s2: &[u8],
    k: usize,
    tree: &GeneralizedSuffixTree,
    mut trace: Option<&mut KangarooTrace>,
) -> Result<LcfResult, SuffixError> {
    tree.check_built_over(s1, s2)?;
    let (n, m) = (s1.len(), s2.len());
    let mut best = LcfResult::default();
    if n == 0 || m == 0 {
        return Ok(best);
    }
    if let Some(t) = trace.as_deref_mut() {
        t.jumps = vec![0; n + m - 1];
        t.mismatches = vec![0; n + m - 1];
    }
    let mut queue = MismatchQueue::new(k, n.min(m));
    for d in -(m as isize - 1)..n as isize {
        let (i, j, len) = diagonal(d, n, m);
        queue.clear();
        let (mut s, mut p) = (0, 0);
        let mut jumps = 0;
        let mut mismatches = 0;
        while p < len {
            let run = tree.lce_unchecked(StringId::First, i + p, StringId::Second, j + p);
            jumps += 1;
            p = (p + run).min(len);
            if p - s > best.length {
                best = LcfResult {
                    length: p - s,
                    start1: i + s,
                    start2: j + s,
                };
            }
            if p == len {
                break;
            }
            mismatches += 1;
            if let Some(evicted) = queue.push(p) {
                s = evicted + 1;
            }
            p += 1;
            if p - s > best.length {
                best = LcfResult {
                    length: p - s,
                    start1: i + s,
                    start2: j + s,
                };
            }
        }
        if let Some(t) = trace.as_deref_mut() {
            let slot = (d + m as isize - 1) as usize;
            t.jumps[slot] = jumps;
            t.mismatches[slot] = mismatches;
        }
    }
    Ok(best)
}

/// Visits every cell of the suffix matrix of `a` and `b`, where the strings
/// are read through accessor closures so reversed views need no copy.
fn for_each_cell(
    n: usize,
    m: usize,
    k: usize,
    a: impl Fn(usize) -> u8,
    b: impl Fn(usize) -> u8,
    mut visit: impl FnMut(usize, usize, usize),
) {
    if n == 0 || m == 0 {
        return;
    }
    let mut queue = MismatchQueue::new(k, n.min(m));
    for d in -(m as isize - 1)..n as isize {
        let (i, j, len) = diagonal(d, n, m);
        queue.clear();
        let mut s = 0;
        for p in 0..len {
            if a(i + p) != b(j + p) {
                if let Some(evicted) = queue.push(p) {
                    s = evicted + 1;
                }
            }
            visit(i + p, j + p, p + 1 - s);
        }
    }
}

/// Matching statistics with `k` mismatches of `s2` against `s1`:
/// `values[i]` is the longest prefix of `s2[i..]` occurring in `s1` with at
/// most `k` mismatches.
///
/// Runs the diagonal scan over both strings read backwards and keeps column
/// maxima. Extra space is the output plus the mismatch queue.
pub fn matching_stats_k(s1: &[u8], s2: &[u8], k: usize) -> MsArray {
    let (n, m) = (s1.len(), s2.len());
    let mut values = vec![0; m];
    for_each_cell(
        n,
        m,
        k,
        |x| s1[n - 1 - x],
        |y| s2[m - 1 - y],
        |_, j, phi| {
            let slot = &mut values[m - 1 - j];
            *slot = (*slot).max(phi);
        },
    );
    MsArray::new(values, Orientation::Prefix)
}

/// Suffix-anchored matching statistics: `values[j]` is the longest suffix
/// of `s2[..=j]` occurring in `s1` with at most `k` mismatches.
pub fn dual_matching_stats_k(s1: &[u8], s2: &[u8], k: usize) -> MsArray {
    let (n, m) = (s1.len(), s2.len());
    let mut values = vec![0; m];
    for_each_cell(
        n,
        m,
        k,
        |x| s1[x],
        |y| s2[y],
        |_, j, phi| values[j] = values[j].max(phi),
    );
    MsArray::new(values, Orientation::Suffix)
}

/// The full suffix matrix, row `i` for `s1[i]`. Quadratic memory; meant for
/// small inputs and inspection.
pub fn phi_matrix(s1: &[u8], s2: &[u8], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; s2.len()]; s1.len()];
    for_each_cell(
        s1.len(),
        s2.len(),
        k,
        |x| s1[x],
        |y| s2[y],
        |i, j, phi| out[i][j] = phi,
    );
    out
}
