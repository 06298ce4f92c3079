//! Node indices, bitmask node sets and labelled ground sets.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::GroundError;

/// Maximum number of nodes a [`Ground`] can hold.
pub const MAX_NODES: usize = 64;

/// A set of node indices stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        NodeSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn singleton(i: usize) -> Self {
        NodeSet(1 << i)
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    #[inline]
    pub const fn with(self, i: usize) -> Self {
        NodeSet(self.0 | 1 << i)
    }

    #[inline]
    pub const fn without(self, i: usize) -> Self {
        NodeSet(self.0 & !(1 << i))
    }

    #[inline]
    pub const fn union(self, other: NodeSet) -> Self {
        NodeSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: NodeSet) -> Self {
        NodeSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: NodeSet) -> Self {
        NodeSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_disjoint(self, other: NodeSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All subsets of `self` (including the empty set and `self`) in
    /// ascending numeric order of their masks.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Non-empty subsets of `self` in ascending numeric order.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = NodeSet> {
        self.subsets().skip(1)
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = NodeSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for NodeSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Iterator over the members of a [`NodeSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Iterator over the submasks of a mask, ascending.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = NodeSet;

    #[inline]
    fn next(&mut self) -> Option<NodeSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(NodeSet(cur))
    }
}

/// A finite, ordered set of distinct non-empty node labels.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ground {
    labels: Vec<String>,
}

impl fmt::Debug for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

impl Ground {
    pub fn new<I, S>(labels: I) -> Result<Self, GroundError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Ground::default();
        for l in labels {
            g.push(l.into())?;
        }
        Ok(g)
    }

    /// Appends a label, returning its index.
    pub fn push(&mut self, label: String) -> Result<usize, GroundError> {
        if label.is_empty() {
            return Err(GroundError::EmptyLabel);
        }
        if self.index_of(&label).is_some() {
            return Err(GroundError::DuplicateLabel(label));
        }
        if self.labels.len() == MAX_NODES {
            return Err(GroundError::TooManyNodes(MAX_NODES));
        }
        self.labels.push(label);
        Ok(self.labels.len() - 1)
    }

    /// Index of `label`, inserting it at the end if absent.
    pub fn intern(&mut self, label: &str) -> Result<usize, GroundError> {
        match self.index_of(label) {
            Some(i) => Ok(i),
            None => self.push(label.into()),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn all(&self) -> NodeSet {
        NodeSet::full(self.labels.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require(&self, label: &str) -> Result<usize, GroundError> {
        self.index_of(label)
            .ok_or_else(|| GroundError::UnknownLabel(label.into()))
    }

    /// Resolves a list of labels to a node set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<NodeSet, GroundError> {
        let mut s = NodeSet::EMPTY;
        for l in labels {
            s.insert(self.require(l.as_ref())?);
        }
        Ok(s)
    }

    /// Labels of the members of `s`, in ground order.
    pub fn labels_of(&self, s: NodeSet) -> Vec<&str> {
        s.iter().map(|i| self.labels[i].as_str()).collect()
    }

    /// Same labels, possibly in a different order.
    pub fn same_labels(&self, other: &Ground) -> bool {
        self.len() == other.len() && self.labels.iter().all(|l| other.index_of(l).is_some())
    }
}

/// Spreads the low 32 bits of `x` so that bit `i` lands on bit `2i`.
#[inline]
pub(crate) fn spread(x: u64) -> u64 {
    let mut x = x & 0xFFFF_FFFF;
    x = (x | x << 16) & 0x0000_FFFF_0000_FFFF;
    x = (x | x << 8) & 0x00FF_00FF_00FF_00FF;
    x = (x | x << 4) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | x << 2) & 0x3333_3333_3333_3333;
    x = (x | x << 1) & 0x5555_5555_5555_5555;
    x
}
