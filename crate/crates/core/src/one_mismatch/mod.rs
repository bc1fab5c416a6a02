//! Longest common substring with one mismatch in `O(n log m)`.
//!
//! A pair of substrings at Hamming distance at most one is a pattern
//! `u * v` occurring once in each string. Every candidate position of the
//! don't care symbol is a leaf of the binary suffix tree over the reversed
//! strings, where the depth of a node is the length of the shared left part
//! `u`. Walking that tree bottom-up, each node keeps the leaf ranks (in the
//! forward suffix tree) of the right parts below it, one set per string. At
//! a node, the best right part for a rank is found at its predecessor or
//! successor in the other child's set, because the deepest common ancestor
//! of a leaf in depth-first order is always with a neighbouring leaf.
//!
//! The same sweep with a single set per node gives the longest `k`-repeat
//! of one string.

mod list;

use thiserror::Error;

pub use list::OrderedLeafList;

use crate::sequence::Sequence;
use crate::suffix::{BinaryKind, BinarySuffixTree, GeneralizedSuffixTree, StringId, SuffixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepeatError {
    #[error("the don't-care block must have length at least 1")]
    ZeroGap,
    #[error(transparent)]
    Suffix(#[from] SuffixError),
}

/// Work counters for the bottom-up sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    /// Treap nodes visited while merging lists.
    pub merge_steps: u64,
    /// Treap nodes visited answering predecessor/successor queries.
    pub query_steps: u64,
    /// Ranks iterated over in `find_longest`.
    pub queried: u64,
    /// Candidate pairs whose two leaves come from different strings.
    pub cross_pairs: u64,
    /// Candidate pairs whose two leaves come from the same string.
    pub same_pairs: u64,
}

impl OpCounts {
    pub fn add(&mut self, other: &OpCounts) {
        self.merge_steps += other.merge_steps;
        self.query_steps += other.query_steps;
        self.queried += other.queried;
        self.cross_pairs += other.cross_pairs;
        self.same_pairs += other.same_pairs;
    }
}

/// One occurrence of a repeat: `len` symbols of string `string` at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub string: StringId,
    pub start: usize,
    pub len: usize,
}

impl Occurrence {
    pub fn slice<'a>(&self, s1: &'a [u8], s2: &'a [u8]) -> &'a [u8] {
        let s = match self.string {
            StringId::First => s1,
            StringId::Second => s2,
        };
        &s[self.start..self.start + self.len]
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RepeatResult {
    /// Length of the longest repeat found; 0 if none fits.
    pub gamma: usize,
    /// Two occurrences of a longest repeat. For the two-string variant the
    /// first one lies in the first string.
    pub witness: Option<(Occurrence, Occurrence)>,
    pub ops: OpCounts,
}

/// Best pair seen so far, in terms of the forward tree.
#[derive(Debug, Clone, Copy, Default)]
pub struct SweepState {
    pub gamma: usize,
    best: Option<(u32, u32, usize)>,
}

impl SweepState {
    pub fn gamma(&self) -> usize {
        self.gamma
    }
}

/// Lists `(A¹, A²)` attached to one binary-tree node.
#[derive(Debug, Clone, Default)]
pub struct LeafLists {
    pub first: OrderedLeafList,
    pub second: OrderedLeafList,
}

impl LeafLists {
    pub fn len(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Initial lists for every node of `btree` (empty for internal nodes).
///
/// A leaf `(j, l)` of the tree over the reversed strings is a left part
/// ending at `|S_j| - 1 - l`. After `k` don't cares the right part starts
/// at `|S_j| - l + k`; the leaf qualifies only when that is within the
/// string (`l >= k`), and then contributes the forward rank of that suffix
/// to the list of string `j`.
pub fn leaf_lists_init(
    btree: &BinarySuffixTree,
    gst: &GeneralizedSuffixTree,
    k: usize,
) -> Result<Vec<LeafLists>, RepeatError> {
    if k == 0 {
        return Err(RepeatError::ZeroGap);
    }
    let lens: Vec<usize> = match gst.string_count() {
        1 => vec![gst.string_len(StringId::First)],
        _ => vec![gst.string_len(StringId::First), gst.string_len(StringId::Second)],
    };
    btree.check_lengths(&lens)?;
    Ok(btree
        .nodes()
        .iter()
        .map(|node| {
            let mut lists = LeafLists::default();
            if let BinaryKind::Leaf(label) = node.kind {
                if label.start >= k {
                    let len = gst.string_len(label.string);
                    let rank = gst.rank_of_suffix(label.string, len - label.start + k);
                    match label.string {
                        StringId::First => lists.first = OrderedLeafList::singleton(rank),
                        StringId::Second => lists.second = OrderedLeafList::singleton(rank),
                    }
                }
            }
            lists
        })
        .collect())
}

/// For each rank `p` of the smaller list, pairs it with its predecessor and
/// successor in the larger list and raises `state.gamma` to
/// `l + depth(lca)` of the better pair. Missing neighbours are skipped.
pub fn find_longest(
    l1: &OrderedLeafList,
    l2: &OrderedLeafList,
    l: usize,
    state: &mut SweepState,
    gst: &GeneralizedSuffixTree,
    ops: &mut OpCounts,
) {
    let (small, large) = if l1.len() > l2.len() { (l2, l1) } else { (l1, l2) };
    if small.is_empty() || large.is_empty() {
        return;
    }
    let keys = small.to_vec();
    let neighbours = large.neighbours(&keys, &mut ops.query_steps);
    ops.queried += keys.len() as u64;
    for (&p, (q, r)) in keys.iter().zip(neighbours) {
        for other in [q, r].into_iter().flatten() {
            if gst.label_at_rank(p).string == gst.label_at_rank(other).string {
                ops.same_pairs += 1;
            } else {
                ops.cross_pairs += 1;
            }
            let len = l + gst.lca_depth_by_rank(p, other);
            if len > state.gamma {
                state.gamma = len;
                state.best = Some((p, other, l));
            }
        }
    }
}

/// Union of two disjoint lists.
pub fn merge_lists(l1: OrderedLeafList, l2: OrderedLeafList, ops: &mut OpCounts) -> OrderedLeafList {
    l1.merge(l2, ops)
}

/// Called with each node id and its lists once they are final.
type Observer<'a> = &'a mut dyn FnMut(u32, &LeafLists);

/// Bottom-up pass over `btree`. With `constrained`, only pairs with one leaf
/// from each string are evaluated.
fn sweep(
    btree: &BinarySuffixTree,
    gst: &GeneralizedSuffixTree,
    k: usize,
    constrained: bool,
    mut observe: Option<Observer<'_>>,
) -> Result<RepeatResult, RepeatError> {
    let mut lists: Vec<LeafLists> = leaf_lists_init(btree, gst, k)?;
    let mut state = SweepState::default();
    let mut ops = OpCounts::default();
    for id in btree.post_order() {
        let node = btree.node(id);
        if let BinaryKind::Internal { left, right } = node.kind {
            let a = std::mem::take(&mut lists[left as usize]);
            let b = std::mem::take(&mut lists[right as usize]);
            let l = node.depth + k;
            if constrained {
                find_longest(&a.first, &b.second, l, &mut state, gst, &mut ops);
                find_longest(&a.second, &b.first, l, &mut state, gst, &mut ops);
            } else {
                find_longest(&a.first, &b.first, l, &mut state, gst, &mut ops);
            }
            lists[id as usize] = LeafLists {
                first: merge_lists(a.first, b.first, &mut ops),
                second: merge_lists(a.second, b.second, &mut ops),
            };
        }
        if let Some(f) = observe.as_deref_mut() {
            f(id, &lists[id as usize]);
        }
    }
    let witness = state.best.map(|(p, q, l)| {
        let left = l - k;
        let occ = |rank: u32| {
            let label = gst.label_at_rank(rank);
            Occurrence { string: label.string, start: label.start - k - left, len: state.gamma }
        };
        let (x, y) = (occ(p), occ(q));
        if x.string <= y.string {
            (x, y)
        } else {
            (y, x)
        }
    });
    Ok(RepeatResult { gamma: state.gamma, witness, ops })
}

/// Length of the longest pattern `u *^k v` occurring at two different
/// positions of `s`.
pub fn all_longest_k_repeats(s: &Sequence, k: usize) -> Result<RepeatResult, RepeatError> {
    if k == 0 {
        return Err(RepeatError::ZeroGap);
    }
    if s.is_empty() {
        return Ok(RepeatResult::default());
    }
    let gst = GeneralizedSuffixTree::single(s);
    let btree = BinarySuffixTree::single(&s.reversed());
    sweep(&btree, &gst, k, false, None)
}

/// Longest common substring of `s1` and `s2` with at most one mismatch.
///
/// ```
/// use kmismatch::{one_mismatch::klcs1, Sequence};
/// let a = Sequence::try_from("xxabcdyy").unwrap();
/// let b = Sequence::try_from("zabedz").unwrap();
/// let r = klcs1(&a, &b);
/// assert_eq!(r.gamma, 4);
/// let (x, y) = r.witness.unwrap();
/// assert_eq!((x.start, y.start), (2, 1));
/// ```
pub fn klcs1(s1: &Sequence, s2: &Sequence) -> RepeatResult {
    if s1.is_empty() || s2.is_empty() {
        return RepeatResult::default();
    }
    let gst = GeneralizedSuffixTree::build(s1, s2);
    let btree = BinarySuffixTree::build(&s1.reversed(), &s2.reversed());
    sweep(&btree, &gst, 1, true, None).expect("trees built over the same strings")
}

/// [`klcs1`] over windows of the longer string of length `2m` overlapping by
/// `m`, where `m` is the length of the shorter string. Any common substring
/// has length at most `m` and so fits inside one window.
pub fn klcs1_windowed(s1: &Sequence, s2: &Sequence) -> RepeatResult {
    if s2.len() > s1.len() {
        let mut r = klcs1_windowed(s2, s1);
        if let Some((a, b)) = r.witness {
            let flip = |o: Occurrence| Occurrence { string: o.string.other(), ..o };
            r.witness = Some((flip(b), flip(a)));
        }
        return r;
    }
    let (n, m) = (s1.len(), s2.len());
    let mut best = RepeatResult::default();
    if m == 0 {
        return best;
    }
    for w in 0..n.div_ceil(m) {
        let lo = m * w;
        let hi = (lo + 2 * m).min(n);
        let r = klcs1(&s1.slice(lo..hi), s2);
        best.ops.add(&r.ops);
        if r.gamma > best.gamma {
            best.gamma = r.gamma;
            best.witness = r.witness.map(|(a, b)| (Occurrence { start: a.start + lo, ..a }, b));
        }
    }
    best
}
