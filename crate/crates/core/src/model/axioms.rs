//! Exhaustive checkers for the semi-graphoid, graphoid and compositional
//! axioms and for singleton-transitivity.

use super::report::{CheckReport, Property, Witness};
use super::{IndependenceModel, MAX_MODEL_NODES};
use crate::error::{Error, Result};
use crate::nodeset::NodeSet;

/// Ground-size caps for the exhaustive checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Axioms quantifying over four sets (5^n instantiations).
    pub set_axiom_nodes: usize,
    /// Axioms over `<i, j | C>` and one extra node.
    pub elementary_axiom_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            set_axiom_nodes: 8,
            elementary_axiom_nodes: 12,
        }
    }
}

impl Limits {
    /// Caps raised to the hard maximum.
    pub fn max() -> Self {
        Limits {
            set_axiom_nodes: MAX_MODEL_NODES,
            elementary_axiom_nodes: MAX_MODEL_NODES,
        }
    }

    pub(crate) fn check_sets(&self, j: &IndependenceModel) -> Result<()> {
        cap("ground for set-valued axiom checks", j.n(), self.set_axiom_nodes)
    }

    pub(crate) fn check_elementary(&self, j: &IndependenceModel) -> Result<()> {
        cap("ground for elementary axiom checks", j.n(), self.elementary_axiom_nodes)
    }
}

fn cap(what: &'static str, actual: usize, cap: usize) -> Result<()> {
    if actual > cap {
        Err(Error::CapExceeded { what, actual, cap })
    } else {
        Ok(())
    }
}

/// Runs axiom checks under a fixed set of [`Limits`].
#[derive(Debug, Clone, Copy, Default)]
pub struct AxiomChecker {
    pub limits: Limits,
}

impl AxiomChecker {
    pub fn new(limits: Limits) -> Self {
        AxiomChecker { limits }
    }

    /// Symmetry, decomposition, weak union and contraction.
    pub fn semi_graphoid(&self, j: &IndependenceModel) -> Result<CheckReport> {
        self.limits.check_sets(j)?;
        let mut r = CheckReport::new(Property::SemiGraphoid);
        check_symmetry(j, &mut r);
        scan_quadruples(
            j,
            &[Property::Decomposition, Property::WeakUnion, Property::Contraction],
            &mut r,
            false,
        );
        Ok(r)
    }

    pub fn intersection(&self, j: &IndependenceModel) -> Result<CheckReport> {
        self.limits.check_sets(j)?;
        let mut r = CheckReport::new(Property::Intersection);
        scan_quadruples(j, &[Property::Intersection], &mut r, false);
        Ok(r)
    }

    pub fn composition(&self, j: &IndependenceModel) -> Result<CheckReport> {
        self.limits.check_sets(j)?;
        let mut r = CheckReport::new(Property::Composition);
        scan_quadruples(j, &[Property::Composition], &mut r, false);
        Ok(r)
    }

    pub fn singleton_transitivity(&self, j: &IndependenceModel) -> Result<CheckReport> {
        self.limits.check_elementary(j)?;
        let mut r = CheckReport::new(Property::SingletonTransitivity);
        scan_transitivity(j, &mut r, false);
        Ok(r)
    }
}

pub fn check_semi_graphoid(j: &IndependenceModel) -> Result<CheckReport> {
    AxiomChecker::default().semi_graphoid(j)
}

pub fn check_intersection(j: &IndependenceModel) -> Result<CheckReport> {
    AxiomChecker::default().intersection(j)
}

pub fn check_composition(j: &IndependenceModel) -> Result<CheckReport> {
    AxiomChecker::default().composition(j)
}

pub fn check_singleton_transitivity(j: &IndependenceModel) -> Result<CheckReport> {
    AxiomChecker::default().singleton_transitivity(j)
}

/// Semi-graphoid, intersection and composition at once, stopping at the
/// first violation. No cap is applied.
pub fn is_compositional_graphoid(j: &IndependenceModel) -> bool {
    let mut r = CheckReport::new(Property::SemiGraphoid);
    check_symmetry(j, &mut r);
    r.passed()
        && scan_quadruples(
            j,
            &[
                Property::Decomposition,
                Property::WeakUnion,
                Property::Contraction,
                Property::Intersection,
                Property::Composition,
            ],
            &mut r,
            true,
        )
}

/// Singleton-transitivity, stopping at the first violation.
pub fn satisfies_singleton_transitivity(j: &IndependenceModel) -> bool {
    let mut r = CheckReport::new(Property::SingletonTransitivity);
    scan_transitivity(j, &mut r, true)
}

fn check_symmetry(j: &IndependenceModel, r: &mut CheckReport) {
    super::for_each_unordered_triple(j.ground().all(), |a, b, c| {
        if j.contains_masks(a, b, c) != j.contains_masks(b, a, c) {
            r.record(
                Property::Symmetry,
                Witness::Sets {
                    a,
                    b,
                    c,
                    d: NodeSet::EMPTY,
                },
            );
        }
    });
}

fn holds(j: &IndependenceModel, axiom: Property, a: NodeSet, b: NodeSet, c: NodeSet, d: NodeSet) -> bool {
    let m = |x, y, z| j.contains_masks(x, y, z);
    let bd = b.union(d);
    match axiom {
        Property::Decomposition => !m(a, bd, c) || (m(a, b, c) && m(a, d, c)),
        Property::WeakUnion => !m(a, bd, c) || (m(a, b, c.union(d)) && m(a, d, c.union(b))),
        Property::Contraction => !(m(a, b, c.union(d)) && m(a, d, c)) || m(a, bd, c),
        Property::Intersection => !(m(a, b, c.union(d)) && m(a, d, c.union(b))) || m(a, bd, c),
        Property::Composition => !(m(a, b, c) && m(a, d, c)) || m(a, bd, c),
        _ => unreachable!("not a four-set axiom"),
    }
}

/// Visits disjoint `(A, B, C, D)` with `A`, `B`, `D` non-empty in
/// lexicographic order of masks. Returns whether no violation was found.
fn scan_quadruples(j: &IndependenceModel, axioms: &[Property], r: &mut CheckReport, stop: bool) -> bool {
    let all = j.ground().all();
    for a in all.nonempty_subsets() {
        let r1 = all.difference(a);
        for b in r1.nonempty_subsets() {
            let r2 = r1.difference(b);
            for c in r2.subsets() {
                let r3 = r2.difference(c);
                for d in r3.nonempty_subsets() {
                    for &ax in axioms {
                        if !holds(j, ax, a, b, c, d) {
                            r.record(ax, Witness::Sets { a, b, c, d });
                            if stop {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    r.passed()
}

fn scan_transitivity(j: &IndependenceModel, r: &mut CheckReport, stop: bool) -> bool {
    let n = j.n();
    let all = j.ground().all();
    for i in 0..n {
        for jj in i + 1..n {
            for k in (0..n).filter(|&k| k != i && k != jj) {
                let rest = all.without(i).without(jj).without(k);
                for c in rest.subsets() {
                    if j.contains_elementary(i, jj, c)
                        && j.contains_elementary(i, jj, c.with(k))
                        && !j.contains_elementary(i, k, c)
                        && !j.contains_elementary(jj, k, c)
                    {
                        r.record(Property::SingletonTransitivity, Witness::Elementary { i, j: jj, k, c });
                        if stop {
                            return false;
                        }
                    }
                }
            }
        }
    }
    r.passed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Statement;
    use crate::nodeset::Ground;

    fn model(labels: &[&str], stmts: &[(&[&str], &[&str], &[&str])]) -> IndependenceModel {
        let mut m = IndependenceModel::empty(Ground::new(labels.iter().copied()).unwrap()).unwrap();
        for (a, b, c) in stmts {
            let s = m.statement(a, b, c).unwrap();
            m.insert(s).unwrap();
        }
        m
    }

    #[test]
    fn empty_model_is_semi_graphoid() {
        let m = model(&["a", "b", "c"], &[]);
        assert!(check_semi_graphoid(&m).unwrap().passed());
        assert!(check_singleton_transitivity(&m).unwrap().passed());
    }

    #[test]
    fn decomposition_violation_has_witness() {
        let m = model(&["a", "b", "c", "d"], &[(&["a"], &["b", "d"], &[])]);
        let r = check_semi_graphoid(&m).unwrap();
        assert!(!r.passed());
        let g = m.ground();
        let dec = r.violations.iter().find(|v| v.axiom == Property::Decomposition).unwrap();
        let (a, b, d) = (
            g.set_of(&["a"]).unwrap(),
            g.set_of(&["b"]).unwrap(),
            g.set_of(&["d"]).unwrap(),
        );
        assert_eq!(
            dec.witness,
            Witness::Sets {
                a,
                b,
                c: NodeSet::EMPTY,
                d
            }
        );
    }

    #[test]
    fn intersection_violation() {
        // closure of {<a,b|cd>, <a,d|cb>} under decomposition and weak union
        // is the two statements themselves plus their mirrors
        let m = model(
            &["a", "b", "c", "d"],
            &[(&["a"], &["b"], &["c", "d"]), (&["a"], &["d"], &["c", "b"])],
        );
        let r = check_intersection(&m).unwrap();
        assert!(!r.passed());
        let full = IndependenceModel::full(m.ground().clone()).unwrap();
        assert!(check_intersection(&full).unwrap().passed());
        assert!(check_composition(&full).unwrap().passed());
    }

    #[test]
    fn composition_violation() {
        let m = model(&["a", "b", "d"], &[(&["a"], &["b"], &[]), (&["a"], &["d"], &[])]);
        let r = check_composition(&m).unwrap();
        // (a, b, ∅, d) and (a, d, ∅, b)
        assert_eq!(r.count, 2);
        assert!(!is_compositional_graphoid(&m));
    }

    #[test]
    fn transitivity_example() {
        // <a,c|∅> and <a,c|b> without <a,b|∅> or <c,b|∅>
        let m = model(&["a", "b", "c"], &[(&["a"], &["c"], &[]), (&["a"], &["c"], &["b"])]);
        let r = check_singleton_transitivity(&m).unwrap();
        assert!(!r.passed());
        assert_eq!(
            r.violations[0].witness,
            Witness::Elementary {
                i: 0,
                j: 2,
                k: 1,
                c: NodeSet::EMPTY
            }
        );
        assert!(!satisfies_singleton_transitivity(&m));
    }

    #[test]
    fn caps_are_enforced() {
        let g = Ground::new((0..9).map(|i| alloc::format!("x{i}"))).unwrap();
        let m = IndependenceModel::empty(g).unwrap();
        assert!(matches!(check_composition(&m), Err(Error::CapExceeded { .. })));
        assert!(AxiomChecker::new(Limits::max()).composition(&m).is_ok());
        let _ = Statement::elementary(0, 1, NodeSet::EMPTY);
    }
}
