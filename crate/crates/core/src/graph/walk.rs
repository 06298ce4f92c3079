use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{EdgeKind, Mark, MixedGraph};
use crate::nodeset::NodeSet;

/// An alternating sequence of nodes and edge ids; nodes and edges may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    nodes: Vec<usize>,
    edges: Vec<usize>,
}

/// A maximal run of lines on a walk, with the marks its flanking edges put
/// on it (`None` at the ends of the walk).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Section {
    /// Index of the first node of the section within the walk.
    pub start: usize,
    /// Index of the last node of the section within the walk.
    pub end: usize,
    pub left: Option<Mark>,
    pub right: Option<Mark>,
}

impl Section {
    pub fn is_collider(&self) -> bool {
        self.left == Some(Mark::Head) && self.right == Some(Mark::Head)
    }
}

impl Walk {
    /// # Panics
    /// If `nodes.len() != edges.len() + 1`.
    pub fn new(nodes: Vec<usize>, edges: Vec<usize>) -> Walk {
        assert_eq!(nodes.len(), edges.len() + 1, "walk must alternate nodes and edges");
        Walk { nodes, edges }
    }

    pub fn trivial(v: usize) -> Walk {
        Walk {
            nodes: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn first(&self) -> usize {
        self.nodes[0]
    }

    pub fn last(&self) -> usize {
        *self.nodes.last().expect("walks have a node")
    }

    /// Every edge joins the nodes on either side of it.
    pub fn is_well_formed(&self, g: &MixedGraph) -> bool {
        self.edges.iter().enumerate().all(|(k, &id)| {
            id < g.edges().len() && {
                let e = g.edge(id);
                let (x, y) = (self.nodes[k], self.nodes[k + 1]);
                (e.u == x && e.v == y) || (e.u == y && e.v == x)
            }
        })
    }

    /// Decomposition into sections, left to right.
    pub fn sections(&self, g: &MixedGraph) -> Vec<Section> {
        let mut out = Vec::new();
        let mut start = 0;
        for k in 0..=self.edges.len() {
            let closes = k == self.edges.len() || g.edge(self.edges[k]).kind != EdgeKind::Line;
            if closes {
                let left = (start > 0).then(|| g.edge(self.edges[start - 1]).mark_at(self.nodes[start]));
                let right = (k < self.edges.len()).then(|| g.edge(self.edges[k]).mark_at(self.nodes[k]));
                out.push(Section {
                    start,
                    end: k,
                    left,
                    right,
                });
                start = k + 1;
            }
        }
        out
    }

    /// Every collider section meets `c` and every other section avoids it.
    pub fn is_connecting(&self, g: &MixedGraph, c: NodeSet) -> bool {
        self.sections(g).iter().all(|s| {
            let meets = self.nodes[s.start..=s.end].iter().any(|&v| c.contains(v));
            meets == s.is_collider()
        })
    }

    fn prefix_viable(&self, g: &MixedGraph, c: NodeSet) -> bool {
        let secs = self.sections(g);
        let (last, closed) = secs.split_last().expect("at least one section");
        let meets = |s: &Section| self.nodes[s.start..=s.end].iter().any(|&v| c.contains(v));
        // the open section can still turn into a collider only if it was
        // entered through an arrowhead
        closed.iter().all(|s| meets(s) == s.is_collider())
            && (last.left == Some(Mark::Head) || !meets(last))
    }
}

/// Search for a shortest connecting walk of at most `max_len` edges between
/// `a` and `b` given `c`, by depth-first enumeration of walks with
/// increasing length bound.
///
/// Independent of the state-machine search behind
/// [`MixedGraph::separates`]: every prefix and every candidate is judged
/// from its full section decomposition. A prefix is abandoned once an
/// earlier prefix ending at the same node, with an open section of the
/// same left flank and the same contact with `c`, failed with at least as
/// much length to spare; the remainder of a walk is constrained by nothing
/// else. With `max_len >= 4 * |V|` the answer is complete.
pub fn connecting_walk_oracle(
    g: &MixedGraph,
    a: NodeSet,
    b: NodeSet,
    c: NodeSet,
    max_len: usize,
) -> Option<Walk> {
    for bound in 1..=max_len {
        let mut failed = BTreeMap::new();
        for start in a.iter() {
            let mut walk = Walk::trivial(start);
            if dfs(g, b, c, bound, &mut walk, &mut failed) {
                return Some(walk);
            }
        }
    }
    None
}

type Summary = (usize, Option<Mark>, bool);

fn summary(walk: &Walk, g: &MixedGraph, c: NodeSet) -> Summary {
    let secs = walk.sections(g);
    let open = secs.last().expect("at least one section");
    let meets = walk.nodes[open.start..=open.end].iter().any(|&v| c.contains(v));
    (walk.last(), open.left, meets)
}

fn dfs(
    g: &MixedGraph,
    b: NodeSet,
    c: NodeSet,
    bound: usize,
    walk: &mut Walk,
    failed: &mut BTreeMap<Summary, usize>,
) -> bool {
    if !walk.prefix_viable(g, c) {
        return false;
    }
    if !walk.is_empty() && b.contains(walk.last()) && walk.is_connecting(g, c) {
        return true;
    }
    let spare = bound - walk.len();
    let key = summary(walk, g, c);
    if failed.get(&key).is_some_and(|&s| s >= spare) {
        return false;
    }
    if spare > 0 {
        let here = walk.last();
        for &id in g.incident(here) {
            walk.edges.push(id);
            walk.nodes.push(g.edge(id).other(here));
            if dfs(g, b, c, bound, walk, failed) {
                return true;
            }
            walk.edges.pop();
            walk.nodes.pop();
        }
    }
    failed.insert(key, spare);
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeKind::*;

    #[test]
    fn sections_of_mixed_walk() {
        let g = MixedGraph::from_edges(&[("a", Arrow, "b"), ("b", Line, "c"), ("d", Arrow, "c")])
            .unwrap();
        // a -> b -- c <- d
        let w = Walk::new(vec![0, 1, 2, 3], vec![0, 1, 2]);
        assert!(w.is_well_formed(&g));
        let s = w.sections(&g);
        assert_eq!(s.len(), 3);
        assert_eq!((s[0].start, s[0].end), (0, 0));
        assert_eq!((s[1].start, s[1].end), (1, 2));
        assert!(s[1].is_collider());
        assert!(!s[0].is_collider() && !s[2].is_collider());
        assert!(w.is_connecting(&g, NodeSet::singleton(2)));
        assert!(!w.is_connecting(&g, NodeSet::EMPTY));
    }

    #[test]
    fn oracle_finds_collider_walk() {
        let g = MixedGraph::from_edges(&[("a", Arrow, "c"), ("b", Arrow, "c")]).unwrap();
        let w = connecting_walk_oracle(&g, NodeSet::singleton(0), NodeSet::singleton(2), NodeSet::singleton(1), 12)
            .unwrap();
        assert_eq!(w.nodes(), &[0, 1, 2]);
    }

    #[test]
    fn oracle_finds_nothing_through_blocked_chain() {
        let g = MixedGraph::from_edges(&[("a", Arrow, "b"), ("b", Arrow, "c")]).unwrap();
        for max_len in [1, 4, 12, 20] {
            assert!(connecting_walk_oracle(
                &g,
                NodeSet::singleton(0),
                NodeSet::singleton(2),
                NodeSet::singleton(1),
                max_len
            )
            .is_none());
        }
    }
}
