//! Separation by connecting walks.
//!
//! A walk is split into sections, the maximal runs of lines. The search
//! runs over states `(node, mark, touched)`: `mark` is the endpoint mark the
//! current section was entered with (tail for the first section) and
//! `touched` records whether the current section has met the conditioning
//! set. Leaving a section through a non-line edge closes it; it was a
//! collider iff both flanking marks are heads, and it must then have been
//! touched, otherwise it must not. Since walks may revisit nodes, the finite
//! state space rather than simple paths is what makes the search exact.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{EdgeKind, Mark, MixedGraph, Walk};
use crate::error::{Error, Result};
use crate::nodeset::NodeSet;

const NO_PARENT: u32 = u32::MAX;

#[inline]
fn state(v: usize, mark: Mark, touched: bool) -> usize {
    v * 4 + (mark as usize) * 2 + touched as usize
}

impl MixedGraph {
    /// Whether `c` separates `a` from `b`.
    pub fn separates(&self, a: NodeSet, b: NodeSet, c: NodeSet) -> Result<bool> {
        self.validate_query(a, b, c)?;
        Ok(self.separates_masks(a, b, c))
    }

    pub fn separates_labels(&self, a: &[&str], b: &[&str], c: &[&str]) -> Result<bool> {
        let g = self.ground();
        self.separates(g.set_of(a)?, g.set_of(b)?, g.set_of(c)?)
    }

    /// A shortest connecting walk between `a` and `b` given `c`, or `None`
    /// when `c` separates them.
    pub fn connecting_walk(&self, a: NodeSet, b: NodeSet, c: NodeSet) -> Result<Option<Walk>> {
        self.validate_query(a, b, c)?;
        Ok(self.search(a, b, c, true).1)
    }

    fn validate_query(&self, a: NodeSet, b: NodeSet, c: NodeSet) -> Result<()> {
        if a.is_empty() {
            return Err(Error::EmptySet("first"));
        }
        if b.is_empty() {
            return Err(Error::EmptySet("second"));
        }
        self.check_disjoint(&[("A", a), ("B", b), ("C", c)])
    }

    /// Unchecked variant of [`separates`](Self::separates); the sets must be
    /// pairwise disjoint.
    pub fn separates_masks(&self, a: NodeSet, b: NodeSet, c: NodeSet) -> bool {
        if a.is_empty() || b.is_empty() {
            return true;
        }
        !self.search(a, b, c, false).0
    }

    fn search(&self, a: NodeSet, b: NodeSet, c: NodeSet, want_walk: bool) -> (bool, Option<Walk>) {
        let n = self.n();
        let mut seen = vec![false; 4 * n];
        // parent[state] = (previous state, edge id)
        let mut parent: Vec<(u32, u32)> = if want_walk {
            vec![(NO_PARENT, NO_PARENT); 4 * n]
        } else {
            Vec::new()
        };
        let mut queue = VecDeque::new();
        for v in a.iter() {
            let s = state(v, Mark::Tail, false);
            seen[s] = true;
            queue.push_back((v, Mark::Tail, false));
        }
        while let Some((v, mark, touched)) = queue.pop_front() {
            let here = state(v, mark, touched);
            if b.contains(v) && !touched {
                let walk = want_walk.then(|| self.rebuild(&parent, here));
                return (true, walk);
            }
            for &id in self.incident(v) {
                let e = self.edge(id);
                let w = e.other(v);
                let next = if e.kind == EdgeKind::Line {
                    (w, mark, touched || c.contains(w))
                } else {
                    let collider = mark == Mark::Head && e.mark_at(v) == Mark::Head;
                    if collider != touched {
                        continue;
                    }
                    (w, e.mark_at(w), c.contains(w))
                };
                let s = state(next.0, next.1, next.2);
                if !seen[s] {
                    seen[s] = true;
                    if want_walk {
                        parent[s] = (here as u32, id as u32);
                    }
                    queue.push_back(next);
                }
            }
        }
        (false, None)
    }

    fn rebuild(&self, parent: &[(u32, u32)], mut s: usize) -> Walk {
        let mut nodes = vec![s / 4];
        let mut edges = Vec::new();
        while parent[s].0 != NO_PARENT {
            let (p, e) = parent[s];
            edges.push(e as usize);
            s = p as usize;
            nodes.push(s / 4);
        }
        nodes.reverse();
        edges.reverse();
        Walk::new(nodes, edges)
    }
}
