//! Preorders over a ground set and their relation to anterial graphs.

mod enumerate;

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph};
use crate::model::IndependenceModel;
use crate::nodeset::{Ground, NodeSet};

pub use enumerate::{
    enumerate_compatible_preorders, Candidate, CompatiblePreorders, Directing, DirectingSpace,
    DEFAULT_EDGE_CAP, MAX_EDGE_CAP,
};

/// A reflexive, transitive relation `≼`. `up[a]` holds every `b` with
/// `a ≼ b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    ground: Ground,
    up: Vec<NodeSet>,
}

impl core::fmt::Debug for Preorder {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let q = self.quotient();
        let mut l = f.debug_list();
        for (c, &cls) in q.classes.iter().enumerate() {
            let above: Vec<usize> = q.strictly_above(c).iter().collect();
            l.entry(&(self.ground.labels_of(cls), above));
        }
        l.finish()
    }
}

/// Equivalence classes of a preorder with the partial order they inherit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientOrder {
    /// Classes ordered by their smallest member.
    pub classes: Vec<NodeSet>,
    /// `above[c]` holds every class `d` with `c ≤ d`, as class indices.
    pub above: Vec<NodeSet>,
}

impl QuotientOrder {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, node: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(node))
    }

    pub fn leq(&self, c: usize, d: usize) -> bool {
        self.above[c].contains(d)
    }

    pub fn strictly_above(&self, c: usize) -> NodeSet {
        self.above[c].without(c)
    }

    /// Reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let k = self.len();
        (0..k).all(|c| self.leq(c, c))
            && (0..k).all(|c| (0..k).all(|d| c == d || !(self.leq(c, d) && self.leq(d, c))))
            && (0..k).all(|c| self.above[c].iter().all(|d| self.above[d].is_subset(self.above[c])))
    }
}

impl Preorder {
    /// Validates `up` as a preorder: `up[a]` lists every `b` with `a ≼ b`.
    pub fn from_relation(ground: Ground, up: Vec<NodeSet>) -> Result<Preorder> {
        let n = ground.len();
        if up.len() != n || up.iter().any(|s| !s.is_subset(ground.all())) {
            return Err(Error::GroundMismatch);
        }
        for (a, s) in up.iter().enumerate() {
            if !s.contains(a) {
                return Err(Error::NotReflexive(ground.label(a).to_string()));
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if let Some(c) = up[b].difference(up[a]).first() {
                    return Err(Error::NotTransitive(
                        ground.label(a).to_string(),
                        ground.label(b).to_string(),
                        ground.label(c).to_string(),
                    ));
                }
            }
        }
        Ok(Preorder { ground, up })
    }

    /// Every pair of nodes equivalent.
    pub fn all_equivalent(ground: Ground) -> Preorder {
        let all = ground.all();
        let up = alloc::vec![all; ground.len()];
        Preorder { ground, up }
    }

    /// Every pair of distinct nodes incomparable.
    pub fn all_incomparable(ground: Ground) -> Preorder {
        let up = (0..ground.len()).map(NodeSet::singleton).collect();
        Preorder { ground, up }
    }

    /// Builds a preorder from equivalence classes and strict relations
    /// `x < y` between classes (by class index), closed transitively. Nodes
    /// in no class form singleton classes appended after the given ones.
    pub fn from_classes(ground: Ground, classes: &[NodeSet], less: &[(usize, usize)]) -> Result<Preorder> {
        let mut classes = classes.to_vec();
        let mut seen = NodeSet::EMPTY;
        for &c in &classes {
            if !c.is_subset(ground.all()) || c.is_empty() {
                return Err(Error::GroundMismatch);
            }
            if let Some(i) = seen.intersection(c).first() {
                return Err(Error::Overlap(ground.label(i).to_string()));
            }
            seen = seen.union(c);
        }
        classes.extend(ground.all().difference(seen).iter().map(NodeSet::singleton));
        let k = classes.len();
        let mut above: Vec<NodeSet> = (0..k).map(NodeSet::singleton).collect();
        for &(x, y) in less {
            if x >= k || y >= k {
                return Err(Error::Internal(alloc::format!("class index out of range in {x} < {y}")));
            }
            above[x].insert(y);
        }
        for m in 0..k {
            let am = above[m];
            for a in above.iter_mut() {
                if a.contains(m) {
                    *a = a.union(am);
                }
            }
        }
        for x in 0..k {
            if let Some(y) = above[x].without(x).iter().find(|&y| above[y].contains(x)) {
                let rep = |c: usize| ground.label(classes[c].first().expect("non-empty")).to_string();
                return Err(Error::CyclicOrder(rep(x), rep(y)));
            }
        }
        let mut up = alloc::vec![NodeSet::EMPTY; ground.len()];
        for x in 0..k {
            let nodes = above[x].iter().fold(NodeSet::EMPTY, |s, y| s.union(classes[y]));
            for a in classes[x].iter() {
                up[a] = nodes;
            }
        }
        Ok(Preorder { ground, up })
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// `a ≼ b`.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `a ∼ b`.
    #[inline]
    pub fn equiv(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) && self.leq(b, a)
    }

    /// `a < b`.
    #[inline]
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) && !self.leq(b, a)
    }

    #[inline]
    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        !self.leq(a, b) && !self.leq(b, a)
    }

    /// `{b : a ≼ b}`.
    #[inline]
    pub fn up_set(&self, a: usize) -> NodeSet {
        self.up[a]
    }

    /// `{b : b ≼ a}`.
    pub fn down_set(&self, a: usize) -> NodeSet {
        (0..self.n()).filter(|&b| self.leq(b, a)).collect()
    }

    /// The equivalence class of `a`.
    pub fn class_of(&self, a: usize) -> NodeSet {
        self.up[a].iter().filter(|&b| self.leq(b, a)).collect()
    }

    pub fn quotient(&self) -> QuotientOrder {
        let mut classes: Vec<NodeSet> = Vec::new();
        let mut index = alloc::vec![0usize; self.n()];
        for (a, slot) in index.iter_mut().enumerate() {
            match classes.iter().position(|c| c.contains(a)) {
                Some(c) => *slot = c,
                None => {
                    *slot = classes.len();
                    classes.push(self.class_of(a));
                }
            }
        }
        let above = classes
            .iter()
            .map(|c| {
                let rep = c.first().expect("non-empty class");
                self.up[rep].iter().map(|b| index[b]).collect()
            })
            .collect();
        QuotientOrder { classes, above }
    }

    /// Every equivalence class is a singleton.
    pub fn is_partial_order(&self) -> bool {
        (0..self.n()).all(|a| self.class_of(a).len() == 1)
    }

    pub(crate) fn require_partial_order(&self) -> Result<()> {
        for a in 0..self.n() {
            if let Some(b) = self.class_of(a).without(a).first() {
                return Err(Error::NotAnOrder(
                    self.ground.label(a).to_string(),
                    self.ground.label(b).to_string(),
                ));
            }
        }
        Ok(())
    }

    /// Same relation over a ground holding the same labels in another order.
    pub fn relabel(&self, target: &Ground) -> Result<Preorder> {
        if !self.ground.same_labels(target) {
            return Err(Error::GroundMismatch);
        }
        let map: Vec<usize> = (0..self.n())
            .map(|i| target.index_of(self.ground.label(i)).expect("same labels"))
            .collect();
        let mut up = alloc::vec![NodeSet::EMPTY; self.n()];
        for a in 0..self.n() {
            up[map[a]] = self.up[a].iter().map(|b| map[b]).collect();
        }
        Ok(Preorder {
            ground: target.clone(),
            up,
        })
    }

    /// Lines join equivalent nodes, `i -> j` needs `j < i` and arcs join
    /// incomparable nodes.
    pub fn is_valid_for(&self, g: &MixedGraph) -> Result<bool> {
        if g.ground() != &self.ground {
            return Err(Error::GroundMismatch);
        }
        Ok(g.edges().iter().all(|e| match e.kind {
            EdgeKind::Line => self.equiv(e.u, e.v),
            EdgeKind::Arrow => self.less(e.v, e.u),
            EdgeKind::Arc => self.incomparable(e.u, e.v),
        }))
    }

    /// `G(J, ≼)` for this preorder and the skeleton of `j`.
    pub fn dependence_graph(&self, j: &IndependenceModel) -> Result<MixedGraph> {
        direct_skeleton(&j.skeleton(), self)
    }
}

/// The minimal preorder of an anterial graph: `j ≼ i` iff `i = j` or `i` is
/// an anterior of `j`.
pub fn minimal_preorder(g: &MixedGraph) -> Result<Preorder> {
    if let Some(v) = g.anterial_violation() {
        return Err(Error::NotAnterial(g.describe_violation(&v)));
    }
    Ok(minimal_preorder_unchecked(g))
}

pub(crate) fn minimal_preorder_unchecked(g: &MixedGraph) -> Preorder {
    let reach = g.anterior_reach();
    let n = g.n();
    let up = (0..n)
        .map(|j| (0..n).filter(|&i| i == j || reach[i].contains(j)).collect())
        .collect();
    Preorder {
        ground: g.ground().clone(),
        up,
    }
}

/// Directs every adjacency of `sk`: equivalent ends give a line, `j < i`
/// gives `i -> j` and incomparable ends give an arc.
pub fn direct_skeleton(sk: &MixedGraph, p: &Preorder) -> Result<MixedGraph> {
    if sk.ground() != p.ground() {
        return Err(Error::GroundMismatch);
    }
    let mut g = MixedGraph::new(sk.ground().clone());
    for i in 0..sk.n() {
        for j in sk.neighbours(i).iter().filter(|&j| j > i) {
            let (u, v, kind) = if p.equiv(i, j) {
                (i, j, EdgeKind::Line)
            } else if p.less(j, i) {
                (i, j, EdgeKind::Arrow)
            } else if p.less(i, j) {
                (j, i, EdgeKind::Arrow)
            } else {
                (i, j, EdgeKind::Arc)
            };
            g.add_edge(u, v, kind)?;
        }
    }
    Ok(g)
}

/// `p` is the minimal preorder of `G(J, p)`.
pub fn is_compatible(p: &Preorder, j: &IndependenceModel) -> Result<bool> {
    if p.ground() != j.ground() {
        return Err(Error::GroundMismatch);
    }
    let g = p.dependence_graph(j)?;
    Ok(g.is_anterial() && minimal_preorder_unchecked(&g) == *p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeKind::*;

    fn g3() -> Ground {
        Ground::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn validation_rejects_bad_relations() {
        let g = Ground::new(["a", "b"]).unwrap();
        let e = Preorder::from_relation(g.clone(), alloc::vec![NodeSet::EMPTY, NodeSet::singleton(1)]);
        assert_eq!(e.unwrap_err(), Error::NotReflexive("a".into()));
        let g = g3();
        // a <= b, b <= c, but not a <= c
        let up = alloc::vec![NodeSet::from_bits(0b011), NodeSet::from_bits(0b110), NodeSet::from_bits(0b100)];
        assert!(matches!(Preorder::from_relation(g, up), Err(Error::NotTransitive(..))));
    }

    #[test]
    fn quotient_examples() {
        let q = Preorder::all_equivalent(g3()).quotient();
        assert_eq!(q.classes, alloc::vec![NodeSet::from_bits(0b111)]);
        let q = Preorder::all_incomparable(g3()).quotient();
        assert_eq!(q.len(), 3);
        assert!(q.is_partial_order() && (0..3).all(|c| q.strictly_above(c).is_empty()));
        // a ∼ b, c < a
        let p = Preorder::from_classes(g3(), &[NodeSet::from_bits(0b011), NodeSet::singleton(2)], &[(1, 0)]).unwrap();
        assert!(p.equiv(0, 1) && p.less(2, 0) && p.less(2, 1));
        let q = p.quotient();
        assert_eq!(q.classes, alloc::vec![NodeSet::from_bits(0b011), NodeSet::singleton(2)]);
        assert!(q.leq(1, 0) && !q.leq(0, 1));
    }

    #[test]
    fn cyclic_class_order_is_rejected() {
        let e = Preorder::from_classes(g3(), &[NodeSet::singleton(0), NodeSet::singleton(1)], &[(0, 1), (1, 0)]);
        assert!(matches!(e, Err(Error::CyclicOrder(..))));
    }

    #[test]
    fn validity_per_edge_kind() {
        let gr = Ground::new(["a", "b"]).unwrap();
        let eq = Preorder::all_equivalent(gr.clone());
        let line = MixedGraph::from_edges(&[("a", Line, "b")]).unwrap();
        let arrow = MixedGraph::from_edges(&[("a", Arrow, "b")]).unwrap();
        let arc = MixedGraph::from_edges(&[("a", Arc, "b")]).unwrap();
        assert!(eq.is_valid_for(&line).unwrap());
        assert!(!eq.is_valid_for(&arrow).unwrap());
        assert!(!eq.is_valid_for(&arc).unwrap());
        assert!(Preorder::all_incomparable(gr).is_valid_for(&arc).unwrap());
    }

    #[test]
    fn minimal_preorder_examples() {
        let g = MixedGraph::from_edges(&[("a", Arrow, "b")]).unwrap();
        let p = minimal_preorder(&g).unwrap();
        assert!(p.less(1, 0) && !p.leq(0, 1));
        let g = MixedGraph::from_edges(&[("a", Line, "b"), ("b", Line, "c")]).unwrap();
        assert_eq!(minimal_preorder(&g).unwrap(), Preorder::all_equivalent(g3()));
        let g = MixedGraph::from_edges(&[("a", Arrow, "b"), ("b", Line, "c")]).unwrap();
        let p = minimal_preorder(&g).unwrap();
        assert!(p.equiv(1, 2) && p.less(1, 0) && p.less(2, 0));
        let bad = MixedGraph::from_edges(&[("a", Line, "b"), ("a", Arc, "b")]).unwrap();
        assert!(matches!(minimal_preorder(&bad), Err(Error::NotAnterial(_))));
    }

    #[test]
    fn directing_a_single_edge() {
        let sk = MixedGraph::from_edges(&[("a", Line, "b")]).unwrap();
        let gr = sk.ground().clone();
        let d = |p: &Preorder| direct_skeleton(&sk, p).unwrap().canonical_edges();
        assert_eq!(d(&Preorder::all_equivalent(gr.clone())), alloc::vec![(0, 1, Line)]);
        assert_eq!(d(&Preorder::all_incomparable(gr.clone())), alloc::vec![(0, 1, Arc)]);
        let b_below_a = Preorder::from_classes(gr, &[NodeSet::singleton(0), NodeSet::singleton(1)], &[(1, 0)]).unwrap();
        assert_eq!(d(&b_below_a), alloc::vec![(0, 1, Arrow)]);
    }

    #[test]
    fn compatibility_examples() {
        let path = MixedGraph::from_edges(&[("1", Line, "2"), ("2", Line, "3")]).unwrap();
        let j = path.induced_model().unwrap();
        let gr = j.ground().clone();
        assert!(is_compatible(&Preorder::all_equivalent(gr.clone()), &j).unwrap());
        assert!(is_compatible(&Preorder::all_incomparable(gr), &j).unwrap());
        let split = MixedGraph::from_edges(&[("1", Line, "2")]).unwrap();
        let mut split = split;
        split.add_node("3").unwrap();
        let j = split.induced_model().unwrap();
        assert!(!is_compatible(&Preorder::all_equivalent(j.ground().clone()), &j).unwrap());
    }
}
