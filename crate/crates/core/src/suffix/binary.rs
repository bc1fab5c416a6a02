use super::tree::{GeneralizedSuffixTree, StringId, SuffixLabel};
use super::SuffixError;
use crate::sequence::Sequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryKind {
    Leaf(SuffixLabel),
    Internal { left: u32, right: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryNode {
    pub depth: usize,
    pub kind: BinaryKind,
    /// Set on the extra nodes introduced when splitting a node of degree > 2.
    pub expanded: bool,
}

/// Suffix tree whose internal nodes all have exactly two children.
///
/// A node with `d` children becomes a left-leaning chain of `d - 1` binary
/// nodes with the original depth; the top of the chain stands for the
/// original node.
#[derive(Debug, Clone)]
pub struct BinarySuffixTree {
    lens: [usize; 2],
    strings: usize,
    nodes: Vec<BinaryNode>,
    root: u32,
}

impl BinarySuffixTree {
    /// Binary generalized suffix tree. For the reduction over reversed
    /// inputs the caller passes `s1.reversed()` and `s2.reversed()`.
    pub fn build(s1: &Sequence, s2: &Sequence) -> Self {
        Self::from_tree(&GeneralizedSuffixTree::build(s1, s2))
    }

    pub fn single(s: &Sequence) -> Self {
        Self::from_tree(&GeneralizedSuffixTree::single(s))
    }

    pub fn from_tree(tree: &GeneralizedSuffixTree) -> Self {
        let mut nodes: Vec<BinaryNode> = Vec::with_capacity(2 * tree.leaf_count());
        let mut mapped = vec![u32::MAX; tree.node_count()];
        // Post-order over the source tree.
        let mut stack = vec![(0u32, false)];
        while let Some((id, ready)) = stack.pop() {
            let kids = tree.raw_children(id);
            if !ready && !kids.is_empty() {
                stack.push((id, true));
                stack.extend(kids.iter().rev().map(|&c| (c, false)));
                continue;
            }
            let depth = tree.raw_depth(id) as usize;
            mapped[id as usize] = match kids {
                [] => {
                    let label = tree.raw_label(id).expect("childless node is a leaf");
                    nodes.push(BinaryNode { depth, kind: BinaryKind::Leaf(label), expanded: false });
                    nodes.len() as u32 - 1
                }
                [only] => mapped[*only as usize],
                [first, rest @ ..] => {
                    let mut acc = mapped[*first as usize];
                    for (x, &c) in rest.iter().enumerate() {
                        nodes.push(BinaryNode {
                            depth,
                            kind: BinaryKind::Internal { left: acc, right: mapped[c as usize] },
                            expanded: x + 1 < rest.len(),
                        });
                        acc = nodes.len() as u32 - 1;
                    }
                    acc
                }
            };
        }
        BinarySuffixTree {
            lens: [tree.string_len(StringId::First), if tree.string_count() == 2 { tree.string_len(StringId::Second) } else { 0 }],
            strings: tree.string_count(),
            nodes,
            root: mapped[0],
        }
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn node(&self, id: u32) -> &BinaryNode {
        &self.nodes[id as usize]
    }

    pub fn nodes(&self) -> &[BinaryNode] {
        &self.nodes
    }

    pub fn string_count(&self) -> usize {
        self.strings
    }

    pub fn string_len(&self, string: StringId) -> usize {
        match string {
            StringId::First => self.lens[0],
            StringId::Second => self.lens[1],
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n.kind, BinaryKind::Leaf(_))).count()
    }

    /// Node ids with every node after both of its children. Children are
    /// numbered before their parent, so this is simply `0..len`.
    pub fn post_order(&self) -> impl Iterator<Item = u32> {
        0..self.nodes.len() as u32
    }

    /// Fails unless this tree was built over strings of the given lengths.
    pub fn check_lengths(&self, lens: &[usize]) -> Result<(), SuffixError> {
        if lens.len() != self.strings || lens.iter().zip(self.lens).any(|(a, b)| *a != b) {
            return Err(SuffixError::TreeMismatch {
                expected: (lens.first().copied().unwrap_or(0), lens.get(1).copied().unwrap_or(0)),
                found: (self.lens[0], self.lens[1]),
            });
        }
        Ok(())
    }
}
