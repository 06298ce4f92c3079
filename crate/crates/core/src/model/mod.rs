//! Independence models over a finite ground set.
//!
//! A model stores one bit per ordered triple `(A, B, C)` of pairwise disjoint
//! node sets, indexed by writing each node's role (none, A, B or C) as a
//! base-4 digit. Insertion sets both orientations, so models are symmetric
//! by construction. Triples with an empty `A` or `B` are always members and
//! are never stored.

mod alpha;
mod axioms;
mod report;
mod stability;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph};
use crate::nodeset::{spread, Ground, NodeSet};

pub use alpha::alpha;
pub use axioms::{
    check_composition, check_intersection, check_semi_graphoid, check_singleton_transitivity,
    is_compositional_graphoid, satisfies_singleton_transitivity, AxiomChecker, Limits,
};
pub use report::{CheckReport, Property, Violation, Witness};
pub use stability::{
    check_dag_ordered_stabilities, check_downward_stability, check_ordered_downward_stability,
    check_ordered_upward_stability, check_upward_stability, satisfies_ordered_stabilities,
};

/// Hard upper bound on the ground size of a materialised model.
pub const MAX_MODEL_NODES: usize = 12;

/// An independence statement `<A, B | C>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Statement {
    pub a: NodeSet,
    pub b: NodeSet,
    pub c: NodeSet,
}

impl Statement {
    /// # Errors
    /// [`Error::Internal`] naming an index when the sets overlap; callers with
    /// labels should prefer [`IndependenceModel::statement`].
    pub fn new(a: NodeSet, b: NodeSet, c: NodeSet) -> Result<Statement> {
        if !a.is_disjoint(b) || !a.is_disjoint(c) || !b.is_disjoint(c) {
            return Err(Error::Internal(alloc::format!(
                "statement sets overlap: {a:?} {b:?} {c:?}"
            )));
        }
        Ok(Statement { a, b, c })
    }

    pub fn elementary(i: usize, j: usize, c: NodeSet) -> Statement {
        Statement {
            a: NodeSet::singleton(i),
            b: NodeSet::singleton(j),
            c,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.a.is_empty() || self.b.is_empty()
    }

    pub fn is_elementary(&self) -> bool {
        self.a.len() == 1 && self.b.len() == 1
    }

    pub fn swapped(self) -> Statement {
        Statement {
            a: self.b,
            b: self.a,
            c: self.c,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndependenceModel {
    ground: Ground,
    bits: Vec<u64>,
}

impl core::fmt::Debug for IndependenceModel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("IndependenceModel")
            .field("ground", &self.ground)
            .field("statements", &self.statements().count())
            .finish()
    }
}

#[inline]
fn index(a: NodeSet, b: NodeSet, c: NodeSet) -> usize {
    (spread(a.union(c).bits()) | spread(b.union(c).bits()) << 1) as usize
}

impl IndependenceModel {
    /// The model holding only the always-present trivial statements.
    pub fn empty(ground: Ground) -> Result<Self> {
        let n = ground.len();
        if n > MAX_MODEL_NODES {
            return Err(Error::CapExceeded {
                what: "independence model ground",
                actual: n,
                cap: MAX_MODEL_NODES,
            });
        }
        let words = (1usize << (2 * n)).div_ceil(64);
        Ok(IndependenceModel {
            ground,
            bits: vec![0; words],
        })
    }

    /// Builds the model whose members are the triples accepted by `holds`,
    /// queried once per unordered pair `{A, B}`.
    pub fn from_fn(ground: Ground, mut holds: impl FnMut(NodeSet, NodeSet, NodeSet) -> bool) -> Result<Self> {
        let mut m = IndependenceModel::empty(ground)?;
        let all = m.ground.all();
        for_each_unordered_triple(all, |a, b, c| {
            if holds(a, b, c) {
                m.insert_masks(a, b, c);
            }
        });
        Ok(m)
    }

    /// Builds the model in which `<A, B | C>` is a member exactly when
    /// `<i, j | C>` is for all `i ∈ A`, `j ∈ B`; this is the unique extension
    /// of the elementary statements closed under composition and
    /// decomposition. `holds(i, j, C)` is called once per `i < j`.
    pub fn from_elementary(
        ground: Ground,
        mut holds: impl FnMut(usize, usize, NodeSet) -> bool,
    ) -> Result<Self> {
        let mut m = IndependenceModel::empty(ground)?;
        let n = m.n();
        let all = m.ground.all();
        for i in 0..n {
            for j in i + 1..n {
                for c in all.without(i).without(j).subsets() {
                    if holds(i, j, c) {
                        m.insert_masks(NodeSet::singleton(i), NodeSet::singleton(j), c);
                    }
                }
            }
        }
        let elementary = m.clone();
        for_each_unordered_triple(all, |a, b, c| {
            if a.len() + b.len() > 2
                && a.iter().all(|i| b.iter().all(|j| elementary.contains_elementary(i, j, c)))
            {
                m.insert_masks(a, b, c);
            }
        });
        Ok(m)
    }

    /// Every triple is a member.
    pub fn full(ground: Ground) -> Result<Self> {
        IndependenceModel::from_fn(ground, |_, _, _| true)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// Resolves labels into a validated statement.
    pub fn statement<S: AsRef<str>>(&self, a: &[S], b: &[S], c: &[S]) -> Result<Statement> {
        let (a, b, c) = (
            self.ground.set_of(a)?,
            self.ground.set_of(b)?,
            self.ground.set_of(c)?,
        );
        self.check_disjoint(a, b, c)?;
        Ok(Statement { a, b, c })
    }

    pub(crate) fn check_disjoint(&self, a: NodeSet, b: NodeSet, c: NodeSet) -> Result<()> {
        let all = self.ground.all();
        let stray = a.union(b).union(c).difference(all);
        if !stray.is_empty() {
            return Err(Error::Internal(alloc::format!("node indices {stray:?} out of range")));
        }
        for (x, y) in [(a, b), (a, c), (b, c)] {
            if let Some(i) = x.intersection(y).first() {
                return Err(Error::Overlap(self.ground.label(i).into()));
            }
        }
        Ok(())
    }

    /// Membership; trivial statements are always members.
    pub fn contains(&self, s: &Statement) -> Result<bool> {
        self.check_disjoint(s.a, s.b, s.c)?;
        Ok(self.contains_masks(s.a, s.b, s.c))
    }

    pub fn contains_labels<S: AsRef<str>>(&self, a: &[S], b: &[S], c: &[S]) -> Result<bool> {
        let s = self.statement(a, b, c)?;
        Ok(self.contains_masks(s.a, s.b, s.c))
    }

    /// Unchecked membership; the sets must be disjoint subsets of the ground.
    #[inline]
    pub fn contains_masks(&self, a: NodeSet, b: NodeSet, c: NodeSet) -> bool {
        if a.is_empty() || b.is_empty() {
            return true;
        }
        let k = index(a, b, c);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    #[inline]
    pub fn contains_elementary(&self, i: usize, j: usize, c: NodeSet) -> bool {
        self.contains_masks(NodeSet::singleton(i), NodeSet::singleton(j), c)
    }

    /// Inserts a statement together with its mirror image.
    pub fn insert(&mut self, s: Statement) -> Result<()> {
        self.check_disjoint(s.a, s.b, s.c)?;
        self.insert_masks(s.a, s.b, s.c);
        Ok(())
    }

    pub(crate) fn insert_masks(&mut self, a: NodeSet, b: NodeSet, c: NodeSet) {
        if a.is_empty() || b.is_empty() {
            return;
        }
        for k in [index(a, b, c), index(b, a, c)] {
            self.bits[k / 64] |= 1 << (k % 64);
        }
    }

    pub fn remove(&mut self, s: Statement) -> Result<()> {
        self.check_disjoint(s.a, s.b, s.c)?;
        if !s.is_trivial() {
            for k in [index(s.a, s.b, s.c), index(s.b, s.a, s.c)] {
                self.bits[k / 64] &= !(1 << (k % 64));
            }
        }
        Ok(())
    }

    /// Non-trivial members, one per mirror pair (the orientation with the
    /// numerically smaller `A`), ordered by `C`, then `A`, then `B`.
    pub fn statements(&self) -> impl Iterator<Item = Statement> + '_ {
        let all = self.ground.all();
        let mut out = Vec::new();
        for_each_unordered_triple(all, |a, b, c| {
            if self.contains_masks(a, b, c) {
                out.push(Statement { a, b, c });
            }
        });
        out.into_iter()
    }

    /// Elementary members `<i, j | C>` with `i < j`.
    pub fn elementary_statements(&self) -> impl Iterator<Item = Statement> + '_ {
        self.statements().filter(Statement::is_elementary)
    }

    /// `self ⊆ other`, over the same ground.
    pub fn is_subset_of(&self, other: &IndependenceModel) -> Result<bool> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        Ok(self.bits.iter().zip(&other.bits).all(|(x, y)| x & !y == 0))
    }

    /// First triple (in [`statements`](Self::statements) order) on which the
    /// two models differ, and whether `self` contains it.
    pub fn first_difference(&self, other: &IndependenceModel) -> Result<Option<(Statement, bool)>> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        let mut found = None;
        for_each_unordered_triple(self.ground.all(), |a, b, c| {
            if found.is_none() {
                let x = self.contains_masks(a, b, c);
                if x != other.contains_masks(a, b, c) {
                    found = Some((Statement { a, b, c }, x));
                }
            }
        });
        Ok(found)
    }

    /// Same statements over `target`, whose labels must include every label
    /// of this model; extra nodes appear in no non-trivial statement.
    pub fn remap(&self, target: &Ground) -> Result<IndependenceModel> {
        let map: Vec<usize> = self
            .ground
            .labels()
            .iter()
            .map(|l| target.require(l))
            .collect::<core::result::Result<_, _>>()?;
        let mv = |s: NodeSet| s.iter().map(|i| map[i]).collect::<NodeSet>();
        let mut out = IndependenceModel::empty(target.clone())?;
        for s in self.statements() {
            out.insert_masks(mv(s.a), mv(s.b), mv(s.c));
        }
        Ok(out)
    }

    /// `sk(J)`: nodes `i` and `j` are joined by a line unless some
    /// `<i, j | C>` with `C ⊆ V \ {i, j}` is a member.
    pub fn skeleton(&self) -> MixedGraph {
        let mut g = MixedGraph::new(self.ground.clone());
        let all = self.ground.all();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                let rest = all.without(i).without(j);
                if !rest.subsets().any(|c| self.contains_elementary(i, j, c)) {
                    g.add_edge(i, j, EdgeKind::Line).expect("distinct endpoints");
                }
            }
        }
        g
    }
}

/// Calls `f(a, b, c)` once per unordered pair `{a, b}` of non-empty disjoint
/// subsets of `all` and every `c` disjoint from both, with `a < b` as masks.
/// Order: by `c`, then `a`, then `b`, all ascending.
pub(crate) fn for_each_unordered_triple(all: NodeSet, mut f: impl FnMut(NodeSet, NodeSet, NodeSet)) {
    for c in all.subsets() {
        let rest = all.difference(c);
        for a in rest.nonempty_subsets() {
            for b in rest.difference(a).nonempty_subsets() {
                if a.bits() < b.bits() {
                    f(a, b, c);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> Ground {
        Ground::new((0..n).map(|i| alloc::format!("v{i}"))).unwrap()
    }

    #[test]
    fn trivial_statements_always_present() {
        let m = IndependenceModel::empty(ground(3)).unwrap();
        assert!(m.contains_masks(NodeSet::EMPTY, NodeSet::singleton(1), NodeSet::singleton(2)));
        assert!(m.contains_masks(NodeSet::singleton(0), NodeSet::EMPTY, NodeSet::EMPTY));
        assert!(!m.contains_elementary(0, 1, NodeSet::EMPTY));
        assert_eq!(m.statements().count(), 0);
    }

    #[test]
    fn insertion_is_symmetric() {
        let mut m = IndependenceModel::empty(ground(4)).unwrap();
        let s = Statement::new(NodeSet::singleton(0), NodeSet::from_bits(0b1010), NodeSet::singleton(2)).unwrap();
        m.insert(s).unwrap();
        assert!(m.contains(&s).unwrap());
        assert!(m.contains(&s.swapped()).unwrap());
        assert_eq!(m.statements().collect::<Vec<_>>(), vec![s]);
        m.remove(s.swapped()).unwrap();
        assert!(!m.contains(&s).unwrap());
    }

    #[test]
    fn overlapping_query_names_the_node() {
        let m = IndependenceModel::empty(ground(3)).unwrap();
        let err = m.contains_labels(&["v0"], &["v1"], &["v1"]).unwrap_err();
        assert_eq!(err, Error::Overlap("v1".into()));
        assert!(m.contains_labels(&["v0"], &["zz"], &[]).is_err());
    }

    #[test]
    fn triple_enumeration_counts() {
        // unordered {A,B} non-empty disjoint with C: (4^n - 2*3^n + 2^n) / 2
        for n in 0..6usize {
            let mut count = 0usize;
            for_each_unordered_triple(NodeSet::full(n), |_, _, _| count += 1);
            let expected = (4usize.pow(n as u32) + 2usize.pow(n as u32) - 2 * 3usize.pow(n as u32)) / 2;
            assert_eq!(count, expected);
        }
    }

    #[test]
    fn full_model_has_edgeless_skeleton() {
        let m = IndependenceModel::full(ground(4)).unwrap();
        assert!(m.skeleton().edges().is_empty());
        let e = IndependenceModel::empty(ground(4)).unwrap();
        assert_eq!(e.skeleton().edges().len(), 6);
    }

    #[test]
    fn remap_moves_statements() {
        let mut m = IndependenceModel::empty(Ground::new(["b", "a"]).unwrap()).unwrap();
        m.insert(Statement::elementary(0, 1, NodeSet::EMPTY)).unwrap();
        let target = Ground::new(["a", "c", "b"]).unwrap();
        let r = m.remap(&target).unwrap();
        assert!(r.contains_labels(&["a"], &["b"], &[]).unwrap());
        assert!(!r.contains_labels(&["a"], &["c"], &[]).unwrap());
        assert!(m.remap(&Ground::new(["a"]).unwrap()).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            IndependenceModel::empty(ground(MAX_MODEL_NODES + 1)),
            Err(Error::CapExceeded { .. })
        ));
    }
}
