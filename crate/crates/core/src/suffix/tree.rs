use std::sync::atomic::{AtomicU64, Ordering};

use super::array::{lcp_array, suffix_array};
use super::rmq::SparseTable;
use super::SuffixError;
use crate::sequence::{Sequence, SENTINEL_1, SENTINEL_2};

static NEXT_TAG: AtomicU64 = AtomicU64::new(1);

fn fresh_tag() -> u64 {
    NEXT_TAG.fetch_add(1, Ordering::Relaxed)
}

const NONE: u32 = u32::MAX;

/// Which of the (at most two) indexed strings a suffix belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StringId {
    First,
    Second,
}

impl StringId {
    /// 1 or 2.
    pub fn number(self) -> usize {
        match self {
            StringId::First => 1,
            StringId::Second => 2,
        }
    }

    pub fn other(self) -> StringId {
        match self {
            StringId::First => StringId::Second,
            StringId::Second => StringId::First,
        }
    }

    fn slot(self) -> usize {
        self.number() - 1
    }
}

/// Leaf label: the suffix of string `string` starting at `start`, which sits
/// at `index` in the concatenation `S1 $1 S2 $2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuffixLabel {
    pub string: StringId,
    pub start: usize,
    pub index: usize,
}

/// Handle to a node of a specific tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeRef {
    tree: u64,
    id: u32,
}

impl NodeRef {
    pub fn id(&self) -> usize {
        self.id as usize
    }
}

/// Suffix tree of `S1 $1` or generalized suffix tree of `S1 $1 S2 $2`.
///
/// The tree is derived from the suffix array and LCP array of the
/// concatenation: internal nodes are LCP intervals, leaves are suffixes and
/// the depth-first leaf order is the suffix array order. Because each
/// sentinel occurs once, no common prefix reaches past a sentinel, so every
/// leaf behaves as the per-string suffix `S_j[l..] $_j`.
///
/// Lowest common ancestors are answered in constant time from an Euler tour
/// with a sparse table over string depths.
#[derive(Debug, Clone)]
pub struct GeneralizedSuffixTree {
    tag: u64,
    text: Vec<u8>,
    lens: [usize; 2],
    strings: usize,
    depth: Vec<u32>,
    parent: Vec<u32>,
    child_start: Vec<u32>,
    children: Vec<u32>,
    // text position of the leftmost leaf below each node
    repr: Vec<u32>,
    rank: Vec<u32>,
    leaf_by_rank: Vec<u32>,
    leaf_by_pos: Vec<u32>,
    euler_first: Vec<u32>,
    euler: Vec<u32>,
    euler_rmq: SparseTable,
}

impl GeneralizedSuffixTree {
    /// Generalized suffix tree of `s1` and `s2`.
    pub fn build(s1: &Sequence, s2: &Sequence) -> Self {
        let mut text = Vec::with_capacity(s1.len() + s2.len() + 2);
        text.extend_from_slice(s1);
        text.push(SENTINEL_1);
        text.extend_from_slice(s2);
        text.push(SENTINEL_2);
        Self::from_text(text, [s1.len(), s2.len()], 2)
    }

    /// Plain suffix tree of `s` (terminated by the first sentinel).
    pub fn single(s: &Sequence) -> Self {
        let mut text = Vec::with_capacity(s.len() + 1);
        text.extend_from_slice(s);
        text.push(SENTINEL_1);
        Self::from_text(text, [s.len(), 0], 1)
    }

    fn from_text(text: Vec<u8>, lens: [usize; 2], strings: usize) -> Self {
        let total = text.len();
        assert!(total < NONE as usize / 2, "text too long for 32-bit node ids");
        let sa = suffix_array(&text);
        let lcp = lcp_array(&text, &sa);

        let leaf_depth = |pos: usize| -> u32 {
            let end = if pos <= lens[0] { lens[0] + 1 } else { total };
            (end - pos) as u32
        };

        let mut depth = vec![0u32];
        let mut repr = vec![NONE];
        let mut rank = vec![NONE];
        let mut leaf_by_rank = Vec::with_capacity(total);
        let mut leaf_by_pos = vec![NONE; total];
        // (parent, child) in attach order, which is left-to-right order.
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(2 * total);
        let mut stack: Vec<u32> = vec![0];

        // Pops every stacked node deeper than `h`, attaching it to its
        // parent and creating the parent at depth `h` when it is missing.
        let close = |h: u32,
                     stack: &mut Vec<u32>,
                     depth: &mut Vec<u32>,
                     repr: &mut Vec<u32>,
                     rank: &mut Vec<u32>,
                     edges: &mut Vec<(u32, u32)>| {
            while depth[*stack.last().unwrap() as usize] > h {
                let x = stack.pop().unwrap();
                let top = *stack.last().unwrap();
                if depth[top as usize] >= h {
                    edges.push((top, x));
                } else {
                    let y = depth.len() as u32;
                    depth.push(h);
                    repr.push(repr[x as usize]);
                    rank.push(NONE);
                    edges.push((y, x));
                    stack.push(y);
                }
            }
        };

        for (r, &pos) in sa.iter().enumerate() {
            close(lcp[r], &mut stack, &mut depth, &mut repr, &mut rank, &mut edges);
            let leaf = depth.len() as u32;
            depth.push(leaf_depth(pos as usize));
            repr.push(pos);
            rank.push(r as u32);
            leaf_by_rank.push(leaf);
            leaf_by_pos[pos as usize] = leaf;
            stack.push(leaf);
        }
        close(0, &mut stack, &mut depth, &mut repr, &mut rank, &mut edges);
        if let Some(&first) = leaf_by_rank.first() {
            repr[0] = repr[first as usize];
        }

        let nodes = depth.len();
        let mut parent = vec![NONE; nodes];
        let mut child_start = vec![0u32; nodes + 1];
        for &(p, c) in &edges {
            parent[c as usize] = p;
            child_start[p as usize + 1] += 1;
        }
        for x in 1..=nodes {
            child_start[x] += child_start[x - 1];
        }
        let mut fill = child_start.clone();
        let mut children = vec![0u32; edges.len()];
        for &(p, c) in &edges {
            children[fill[p as usize] as usize] = c;
            fill[p as usize] += 1;
        }

        let mut tree = GeneralizedSuffixTree {
            tag: fresh_tag(),
            text,
            lens,
            strings,
            depth,
            parent,
            child_start,
            children,
            repr,
            rank,
            leaf_by_rank,
            leaf_by_pos,
            euler_first: Vec::new(),
            euler: Vec::new(),
            euler_rmq: SparseTable::new(Vec::new()),
        };
        tree.index_lca();
        tree
    }

    fn index_lca(&mut self) {
        let nodes = self.depth.len();
        let mut euler = Vec::with_capacity(2 * nodes);
        let mut first = vec![0u32; nodes];
        // (node, next child offset)
        let mut stack = vec![(0u32, 0usize)];
        first[0] = 0;
        euler.push(0);
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            let kids = self.child_ids(node);
            if *next < kids.len() {
                let child = kids[*next];
                *next += 1;
                first[child as usize] = euler.len() as u32;
                euler.push(child);
                stack.push((child, 0));
            } else {
                stack.pop();
                if let Some(&(up, _)) = stack.last() {
                    euler.push(up);
                }
            }
        }
        let depths = euler.iter().map(|&x| self.depth[x as usize]).collect();
        self.euler_rmq = SparseTable::new(depths);
        self.euler = euler;
        self.euler_first = first;
    }

    fn child_ids(&self, node: u32) -> &[u32] {
        let x = node as usize;
        &self.children[self.child_start[x] as usize..self.child_start[x + 1] as usize]
    }

    fn handle(&self, id: u32) -> NodeRef {
        NodeRef { tree: self.tag, id }
    }

    fn own(&self, node: NodeRef) -> Result<u32, SuffixError> {
        if node.tree != self.tag || node.id as usize >= self.depth.len() {
            return Err(SuffixError::ForeignNode);
        }
        Ok(node.id)
    }

    /// Number of indexed strings (1 or 2).
    pub fn string_count(&self) -> usize {
        self.strings
    }

    pub fn string_len(&self, string: StringId) -> usize {
        self.lens[string.slot()]
    }

    /// The indexed string, without its sentinel.
    pub fn string(&self, string: StringId) -> &[u8] {
        match string {
            StringId::First => &self.text[..self.lens[0]],
            StringId::Second => &self.text[self.lens[0] + 1..self.text.len() - 1],
        }
    }

    /// `S1 $1 S2 $2` (or `S1 $1`).
    pub fn text(&self) -> &[u8] {
        &self.text
    }

    pub fn node_count(&self) -> usize {
        self.depth.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_by_rank.len()
    }

    pub fn root(&self) -> NodeRef {
        self.handle(0)
    }

    /// String depth: length of the path label from the root.
    pub fn depth(&self, node: NodeRef) -> Result<usize, SuffixError> {
        Ok(self.depth[self.own(node)? as usize] as usize)
    }

    pub fn parent(&self, node: NodeRef) -> Result<Option<NodeRef>, SuffixError> {
        let p = self.parent[self.own(node)? as usize];
        Ok((p != NONE).then(|| self.handle(p)))
    }

    /// Children ordered by first edge symbol (sentinels first, `$1 < $2`).
    pub fn children(&self, node: NodeRef) -> Result<Vec<NodeRef>, SuffixError> {
        let id = self.own(node)?;
        Ok(self.child_ids(id).iter().map(|&c| self.handle(c)).collect())
    }

    pub fn is_leaf(&self, node: NodeRef) -> Result<bool, SuffixError> {
        Ok(self.rank[self.own(node)? as usize] != NONE)
    }

    /// Path label from the root to `node`.
    pub fn path_label(&self, node: NodeRef) -> Result<&[u8], SuffixError> {
        let id = self.own(node)? as usize;
        if id == 0 {
            return Ok(&[]);
        }
        let start = self.repr[id] as usize;
        Ok(&self.text[start..start + self.depth[id] as usize])
    }

    /// Label of the edge entering `node` (empty for the root).
    pub fn edge_label(&self, node: NodeRef) -> Result<&[u8], SuffixError> {
        let id = self.own(node)? as usize;
        let label = self.path_label(node)?;
        let parent_depth = match self.parent[id] {
            NONE => return Ok(&[]),
            p => self.depth[p as usize] as usize,
        };
        Ok(&label[parent_depth..])
    }

    pub fn leaf_label(&self, node: NodeRef) -> Result<Option<SuffixLabel>, SuffixError> {
        let id = self.own(node)? as usize;
        if self.rank[id] == NONE {
            return Ok(None);
        }
        Ok(Some(self.label_of_pos(self.repr[id] as usize)))
    }

    fn label_of_pos(&self, pos: usize) -> SuffixLabel {
        if pos <= self.lens[0] {
            SuffixLabel { string: StringId::First, start: pos, index: pos }
        } else {
            SuffixLabel {
                string: StringId::Second,
                start: pos - self.lens[0] - 1,
                index: pos,
            }
        }
    }

    fn pos_of(&self, string: StringId, start: usize) -> Result<usize, SuffixError> {
        if string.slot() >= self.strings || start > self.lens[string.slot()] {
            return Err(SuffixError::InvalidSuffix { string: string.number(), start });
        }
        Ok(match string {
            StringId::First => start,
            StringId::Second => self.lens[0] + 1 + start,
        })
    }

    /// Leaf for the suffix `S_string[start..] $`; `start == len` is the
    /// sentinel-only suffix.
    pub fn leaf(&self, string: StringId, start: usize) -> Result<NodeRef, SuffixError> {
        let pos = self.pos_of(string, start)?;
        Ok(self.handle(self.leaf_by_pos[pos]))
    }

    /// Depth-first rank of a leaf.
    pub fn rank(&self, leaf: NodeRef) -> Result<usize, SuffixError> {
        match self.rank[self.own(leaf)? as usize] {
            NONE => Err(SuffixError::NotALeaf),
            r => Ok(r as usize),
        }
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn leaf_at(&self, rank: usize) -> Result<NodeRef, SuffixError> {
        self.leaf_by_rank
            .get(rank)
            .map(|&id| self.handle(id))
            .ok_or(SuffixError::RankOutOfRange { rank, leaves: self.leaf_count() })
    }

    /// Leaves in depth-first order.
    pub fn leaf_order(&self) -> impl Iterator<Item = NodeRef> + '_ {
        self.leaf_by_rank.iter().map(|&id| self.handle(id))
    }

    /// Lowest common ancestor of two nodes of this tree.
    pub fn lca(&self, a: NodeRef, b: NodeRef) -> Result<NodeRef, SuffixError> {
        let (a, b) = (self.own(a)?, self.own(b)?);
        Ok(self.handle(self.lca_id(a, b)))
    }

    #[inline]
    fn lca_id(&self, a: u32, b: u32) -> u32 {
        let (fa, fb) = (self.euler_first[a as usize], self.euler_first[b as usize]);
        let (lo, hi) = if fa <= fb { (fa, fb) } else { (fb, fa) };
        self.euler[self.euler_rmq.argmin(lo as usize, hi as usize)]
    }

    /// Longest common extension of two suffixes: the depth of their leaves'
    /// lowest common ancestor. Sentinels never match each other, so the
    /// only way to count one is comparing a suffix with itself.
    pub fn lce(
        &self,
        j1: StringId,
        l1: usize,
        j2: StringId,
        l2: usize,
    ) -> Result<usize, SuffixError> {
        let a = self.leaf_by_pos[self.pos_of(j1, l1)?];
        let b = self.leaf_by_pos[self.pos_of(j2, l2)?];
        Ok(self.depth[self.lca_id(a, b) as usize] as usize)
    }

    #[inline]
    pub(crate) fn lce_unchecked(&self, j1: StringId, l1: usize, j2: StringId, l2: usize) -> usize {
        let pos = |j: StringId, l: usize| match j {
            StringId::First => l,
            StringId::Second => self.lens[0] + 1 + l,
        };
        let a = self.leaf_by_pos[pos(j1, l1)];
        let b = self.leaf_by_pos[pos(j2, l2)];
        self.depth[self.lca_id(a, b) as usize] as usize
    }

    /// Depth of the lowest common ancestor of the leaves at two ranks.
    #[inline]
    pub(crate) fn lca_depth_by_rank(&self, a: u32, b: u32) -> usize {
        let (a, b) = (self.leaf_by_rank[a as usize], self.leaf_by_rank[b as usize]);
        self.depth[self.lca_id(a, b) as usize] as usize
    }

    #[inline]
    pub(crate) fn rank_of_suffix(&self, string: StringId, start: usize) -> u32 {
        let pos = match string {
            StringId::First => start,
            StringId::Second => self.lens[0] + 1 + start,
        };
        self.rank[self.leaf_by_pos[pos] as usize]
    }

    #[inline]
    pub(crate) fn label_at_rank(&self, rank: u32) -> SuffixLabel {
        self.label_of_pos(self.repr[self.leaf_by_rank[rank as usize] as usize] as usize)
    }

    pub(crate) fn raw_children(&self, id: u32) -> &[u32] {
        self.child_ids(id)
    }

    pub(crate) fn raw_depth(&self, id: u32) -> u32 {
        self.depth[id as usize]
    }

    pub(crate) fn raw_label(&self, id: u32) -> Option<SuffixLabel> {
        (self.rank[id as usize] != NONE).then(|| self.label_of_pos(self.repr[id as usize] as usize))
    }

    /// Fails unless this tree indexes exactly `s1` and `s2`.
    pub fn check_built_over(&self, s1: &[u8], s2: &[u8]) -> Result<(), SuffixError> {
        if self.strings != 2
            || self.lens != [s1.len(), s2.len()]
            || self.string(StringId::First) != s1
            || self.string(StringId::Second) != s2
        {
            return Err(SuffixError::TreeMismatch {
                expected: (s1.len(), s2.len()),
                found: (self.lens[0], self.lens[1]),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Sequence {
        Sequence::try_from(s).unwrap()
    }

    fn naive_lcp(a: &[u8], b: &[u8]) -> usize {
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    /// `S_j[l..] $_j` spelled with the sentinel byte.
    fn suffix_with_sentinel(t: &GeneralizedSuffixTree, label: SuffixLabel) -> Vec<u8> {
        let mut v = t.string(label.string)[label.start..].to_vec();
        v.push(match label.string {
            StringId::First => SENTINEL_1,
            StringId::Second => SENTINEL_2,
        });
        v
    }

    #[test]
    fn tiny_generalized_tree() {
        let t = GeneralizedSuffixTree::build(&seq("a"), &seq("a"));
        assert_eq!(t.leaf_count(), 4);
        let a1 = t.leaf(StringId::First, 0).unwrap();
        let a2 = t.leaf(StringId::Second, 0).unwrap();
        assert_eq!(t.depth(t.lca(a1, a2).unwrap()).unwrap(), 1);
        assert_eq!(t.lce(StringId::First, 0, StringId::Second, 0).unwrap(), 1);
        // $1 < $2 < 'a'
        let order: Vec<_> = t
            .leaf_order()
            .map(|l| {
                let lab = t.leaf_label(l).unwrap().unwrap();
                (lab.string.number(), lab.start)
            })
            .collect();
        assert_eq!(order, vec![(1, 1), (2, 1), (1, 0), (2, 0)]);
    }

    #[test]
    fn disjoint_alphabets_meet_at_root() {
        let t = GeneralizedSuffixTree::build(&seq("ab"), &seq("cd"));
        for l1 in 0..=2 {
            for l2 in 0..=2 {
                let x = t.leaf(StringId::First, l1).unwrap();
                let y = t.leaf(StringId::Second, l2).unwrap();
                assert_eq!(t.lca(x, y).unwrap(), t.root());
            }
        }
    }

    #[test]
    fn identical_strings() {
        let t = GeneralizedSuffixTree::build(&seq("abc"), &seq("abc"));
        assert_eq!(t.lce(StringId::First, 0, StringId::Second, 0).unwrap(), 3);
        let t = GeneralizedSuffixTree::build(&seq("abcx"), &seq("abcy"));
        assert_eq!(t.lce(StringId::First, 0, StringId::Second, 0).unwrap(), 3);
        // Self extension counts the suffix's own sentinel.
        assert_eq!(t.lce(StringId::First, 1, StringId::First, 1).unwrap(), 4);
        assert_eq!(t.lce(StringId::Second, 4, StringId::Second, 4).unwrap(), 1);
    }

    #[test]
    fn lca_identity_and_errors() {
        let t = GeneralizedSuffixTree::build(&seq("banana"), &seq("ananas"));
        let other = GeneralizedSuffixTree::build(&seq("banana"), &seq("ananas"));
        let x = t.leaf(StringId::Second, 2).unwrap();
        assert_eq!(t.lca(x, x).unwrap(), x);
        assert_eq!(t.lca(x, other.root()), Err(SuffixError::ForeignNode));
        assert!(t.leaf(StringId::First, 7).is_err());
        assert!(t.leaf_at(t.leaf_count()).is_err());
        assert_eq!(t.rank(t.root()), Err(SuffixError::NotALeaf));
        assert!(t.lce(StringId::Second, 9, StringId::First, 0).is_err());
        let single = GeneralizedSuffixTree::single(&seq("banana"));
        assert!(single.leaf(StringId::Second, 0).is_err());
    }

    #[test]
    fn structure_invariants() {
        for (a, b) in [("mississippi", "missouri"), ("aaaa", "aa"), ("", "abab"), ("", "")] {
            let t = GeneralizedSuffixTree::build(&seq(a), &seq(b));
            assert_eq!(t.leaf_count(), a.len() + b.len() + 2);
            assert_eq!(t.depth(t.root()).unwrap(), 0);
            for id in 0..t.node_count() {
                let node = t.handle(id as u32);
                let kids = t.children(node).unwrap();
                if t.is_leaf(node).unwrap() {
                    assert!(kids.is_empty());
                    let label = t.leaf_label(node).unwrap().unwrap();
                    assert_eq!(t.path_label(node).unwrap(), suffix_with_sentinel(&t, label));
                    // Concatenated edge labels spell the same suffix.
                    let mut path = Vec::new();
                    let mut cur = Some(node);
                    while let Some(x) = cur {
                        let mut e = t.edge_label(x).unwrap().to_vec();
                        e.extend(path);
                        path = e;
                        cur = t.parent(x).unwrap();
                    }
                    assert_eq!(path, suffix_with_sentinel(&t, label));
                } else {
                    assert!(kids.len() >= 2);
                    let firsts: Vec<u8> =
                        kids.iter().map(|&c| t.edge_label(c).unwrap()[0]).collect();
                    assert!(firsts.windows(2).all(|w| w[0] < w[1]), "{firsts:?}");
                    for c in kids {
                        assert!(t.depth(c).unwrap() > t.depth(node).unwrap());
                    }
                }
            }
            for (r, leaf) in t.leaf_order().enumerate() {
                assert_eq!(t.rank(leaf).unwrap(), r);
                assert_eq!(t.leaf_at(r).unwrap(), leaf);
            }
        }
    }

    #[test]
    fn lce_matches_naive_scan() {
        let (a, b) = (seq("abaababaabaab"), seq("babbabaabab"));
        let t = GeneralizedSuffixTree::build(&a, &b);
        let labels: Vec<_> = t.leaf_order().map(|l| t.leaf_label(l).unwrap().unwrap()).collect();
        for x in &labels {
            for y in &labels {
                let (sx, sy) = (suffix_with_sentinel(&t, *x), suffix_with_sentinel(&t, *y));
                let got = t.lce(x.string, x.start, y.string, y.start).unwrap();
                assert_eq!(got, naive_lcp(&sx, &sy));
            }
        }
    }

    #[test]
    fn two_leaf_tree() {
        let t = GeneralizedSuffixTree::single(&seq("a"));
        assert_eq!(t.leaf_count(), 2);
        let ranks: Vec<_> = t.leaf_order().map(|l| t.rank(l).unwrap()).collect();
        assert_eq!(ranks, vec![0, 1]);
    }

    #[test]
    fn mismatched_tree_rejected() {
        let t = GeneralizedSuffixTree::build(&seq("abc"), &seq("abd"));
        assert!(t.check_built_over(b"abc", b"abd").is_ok());
        assert!(t.check_built_over(b"abc", b"abe").is_err());
        assert!(t.check_built_over(b"ab", b"abd").is_err());
    }
}
