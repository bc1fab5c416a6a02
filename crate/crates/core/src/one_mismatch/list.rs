//! Ordered sets of leaf ranks.
//!
//! A treap keyed by rank, with priorities taken from a fixed hash of the key
//! so the shape depends only on the set. Union by split runs in
//! `O(m log(n/m + 1))` expected node visits for sets of sizes `m <= n`, and
//! so does the batched neighbour query used by `find_longest`.

use super::OpCounts;

type Link = Option<Box<Node>>;

#[derive(Debug, Clone)]
struct Node {
    key: u32,
    prio: u64,
    left: Link,
    right: Link,
}

fn priority(key: u32) -> u64 {
    // splitmix64 finalizer
    let mut z = (key as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Strictly increasing set of leaf ranks.
#[derive(Debug, Clone, Default)]
pub struct OrderedLeafList {
    root: Link,
    len: usize,
}

impl OrderedLeafList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(key: u32) -> Self {
        OrderedLeafList {
            root: Some(Box::new(Node { key, prio: priority(key), left: None, right: None })),
            len: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Inserts `key`; returns false if it was already present.
    pub fn insert(&mut self, key: u32) -> bool {
        if self.contains(key) {
            return false;
        }
        let taken = std::mem::take(self);
        *self = taken.merge(Self::singleton(key), &mut OpCounts::default());
        true
    }

    pub fn contains(&self, key: u32) -> bool {
        let mut cur = &self.root;
        while let Some(node) = cur {
            if key == node.key {
                return true;
            }
            cur = if key < node.key { &node.left } else { &node.right };
        }
        false
    }

    /// Largest element `<= key`.
    pub fn predecessor(&self, key: u32) -> Option<u32> {
        let mut cur = &self.root;
        let mut best = None;
        while let Some(node) = cur {
            if node.key <= key {
                best = Some(node.key);
                cur = &node.right;
            } else {
                cur = &node.left;
            }
        }
        best
    }

    /// Smallest element `> key`.
    pub fn successor(&self, key: u32) -> Option<u32> {
        let mut cur = &self.root;
        let mut best = None;
        while let Some(node) = cur {
            if node.key > key {
                best = Some(node.key);
                cur = &node.left;
            } else {
                cur = &node.right;
            }
        }
        best
    }

    /// Ascending iteration.
    pub fn iter(&self) -> Iter<'_> {
        let mut it = Iter { stack: Vec::new() };
        it.descend(&self.root);
        it
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Union of two disjoint sets. Element operations are added to `ops`.
    pub fn merge(self, other: OrderedLeafList, ops: &mut OpCounts) -> OrderedLeafList {
        let len = self.len + other.len;
        let root = union(self.root, other.root, &mut ops.merge_steps);
        OrderedLeafList { root, len }
    }

    /// For every key of `queries` (ascending), its predecessor and successor
    /// in `self`, in one simultaneous descent.
    pub fn neighbours(&self, queries: &[u32], steps: &mut u64) -> Vec<(Option<u32>, Option<u32>)> {
        debug_assert!(queries.windows(2).all(|w| w[0] < w[1]));
        let mut out = Vec::with_capacity(queries.len());
        neighbours(&self.root, queries, None, None, &mut out, steps);
        out
    }
}

fn union(a: Link, b: Link, steps: &mut u64) -> Link {
    let (mut a, b) = match (a, b) {
        (None, t) | (t, None) => return t,
        (Some(a), Some(b)) if a.prio >= b.prio => (a, b),
        (Some(a), Some(b)) => (b, a),
    };
    *steps += 1;
    let (lo, hi) = split(Some(b), a.key, steps);
    a.left = union(a.left.take(), lo, steps);
    a.right = union(a.right.take(), hi, steps);
    Some(a)
}

/// Splits into keys `< key` and keys `> key`; `key` itself must be absent.
fn split(t: Link, key: u32, steps: &mut u64) -> (Link, Link) {
    match t {
        None => (None, None),
        Some(mut node) => {
            *steps += 1;
            assert_ne!(node.key, key, "merged leaf lists must be disjoint");
            if node.key < key {
                let (lo, hi) = split(node.right.take(), key, steps);
                node.right = lo;
                (Some(node), hi)
            } else {
                let (lo, hi) = split(node.left.take(), key, steps);
                node.left = hi;
                (lo, Some(node))
            }
        }
    }
}

fn neighbours(
    t: &Link,
    queries: &[u32],
    below: Option<u32>,
    above: Option<u32>,
    out: &mut Vec<(Option<u32>, Option<u32>)>,
    steps: &mut u64,
) {
    if queries.is_empty() {
        return;
    }
    match t {
        None => out.extend(queries.iter().map(|_| (below, above))),
        Some(node) => {
            *steps += 1;
            let cut = queries.partition_point(|&q| q < node.key);
            let (lo, rest) = queries.split_at(cut);
            neighbours(&node.left, lo, below, Some(node.key), out, steps);
            // A query equal to the key is its own predecessor.
            let (eq, hi) = match rest.first() {
                Some(&q) if q == node.key => rest.split_at(1),
                _ => rest.split_at(0),
            };
            if !eq.is_empty() {
                let succ = successor_below(&node.right).or(above);
                out.push((Some(node.key), succ));
            }
            neighbours(&node.right, hi, Some(node.key), above, out, steps);
        }
    }
}

fn successor_below(t: &Link) -> Option<u32> {
    let mut cur = t.as_ref()?;
    while let Some(l) = &cur.left {
        cur = l;
    }
    Some(cur.key)
}

pub struct Iter<'a> {
    stack: Vec<&'a Node>,
}

impl<'a> Iter<'a> {
    fn descend(&mut self, mut t: &'a Link) {
        while let Some(node) = t {
            self.stack.push(node);
            t = &node.left;
        }
    }
}

impl Iterator for Iter<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        let node = self.stack.pop()?;
        self.descend(&node.right);
        Some(node.key)
    }
}

impl FromIterator<u32> for OrderedLeafList {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut list = OrderedLeafList::new();
        for x in iter {
            list.insert(x);
        }
        list
    }
}
