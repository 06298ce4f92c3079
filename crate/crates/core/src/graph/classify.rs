use alloc::vec::Vec;

use super::{EdgeKind, MixedGraph};
use crate::nodeset::NodeSet;

/// Graph classes a mixed graph belongs to.
///
/// `is_maximal` is `None` when the graph is not a chain mixed graph or has
/// more than [`MAXIMALITY_CAP`](GraphClassReport::MAXIMALITY_CAP) nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClassReport {
    pub is_simple: bool,
    pub is_cmg: bool,
    pub is_ang: bool,
    pub is_ug: bool,
    pub is_bg: bool,
    pub is_dag: bool,
    pub is_ucg: bool,
    pub is_bcg: bool,
    pub is_regression_graph: bool,
    pub is_ag: bool,
    pub is_maximal: Option<bool>,
}

impl GraphClassReport {
    pub const MAXIMALITY_CAP: usize = 16;

    /// `(name, value)` pairs in a fixed order; `is_maximal` is omitted.
    pub fn flags(&self) -> [(&'static str, bool); 10] {
        [
            ("simple", self.is_simple),
            ("CMG", self.is_cmg),
            ("AnG", self.is_ang),
            ("UG", self.is_ug),
            ("BG", self.is_bg),
            ("DAG", self.is_dag),
            ("UCG", self.is_ucg),
            ("BCG", self.is_bcg),
            ("regression", self.is_regression_graph),
            ("AG", self.is_ag),
        ]
    }
}

impl MixedGraph {
    pub fn classify(&self) -> GraphClassReport {
        let simple = self.is_simple();
        let cmg = self.semi_directed_cycle().is_none() && self.check_multi_edges().is_ok();
        let ang = cmg && self.is_anterial();
        let (lines, arrows, arcs) = (
            self.has_kind(EdgeKind::Line),
            self.has_kind(EdgeKind::Arrow),
            self.has_kind(EdgeKind::Arc),
        );
        let chain = simple && cmg && self.is_chain_graph();
        let no_head_on_lines = (0..self.n()).all(|v| {
            let marks = self.incident(v).iter().map(|&e| self.edge(e));
            let has_line = marks.clone().any(|e| e.kind == EdgeKind::Line);
            !has_line || marks.clone().all(|e| e.mark_at(v) == super::Mark::Tail)
        });
        let maximal = if cmg && self.n() <= GraphClassReport::MAXIMALITY_CAP {
            Some(self.is_maximal())
        } else {
            None
        };
        GraphClassReport {
            is_simple: simple,
            is_cmg: cmg,
            is_ang: ang,
            is_ug: simple && !arrows && !arcs,
            is_bg: simple && !arrows && !lines,
            is_dag: simple && cmg && !lines && !arcs,
            is_ucg: chain && !arcs,
            is_bcg: chain && !lines,
            is_regression_graph: chain && no_head_on_lines,
            is_ag: simple && ang && no_head_on_lines,
            is_maximal: maximal,
        }
    }

    /// Components after deleting arrows must each carry one edge type, hold
    /// no arrow inside, and arrows between components must be acyclic.
    fn is_chain_graph(&self) -> bool {
        let n = self.n();
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut [usize], mut x: usize) -> usize {
            while c[x] != x {
                c[x] = c[c[x]];
                x = c[x];
            }
            x
        }
        for e in self.edges().iter().filter(|e| e.kind != EdgeKind::Arrow) {
            let (a, b) = (find(&mut comp, e.u), find(&mut comp, e.v));
            comp[a] = b;
        }
        let roots: Vec<usize> = (0..n).map(|v| find(&mut comp, v)).collect();
        let mut kind_of: Vec<Option<EdgeKind>> = alloc::vec![None; n];
        let mut comp_edges: Vec<NodeSet> = alloc::vec![NodeSet::EMPTY; n];
        for e in self.edges() {
            let (ru, rv) = (roots[e.u], roots[e.v]);
            if e.kind == EdgeKind::Arrow {
                if ru == rv {
                    return false;
                }
                comp_edges[ru].insert(rv);
            } else {
                match kind_of[ru] {
                    Some(k) if k != e.kind => return false,
                    _ => kind_of[ru] = Some(e.kind),
                }
            }
        }
        // acyclicity of the component digraph
        let mut reach = comp_edges;
        for k in 0..n {
            let rk = reach[k];
            for r in reach.iter_mut() {
                if r.contains(k) {
                    *r = r.union(rk);
                }
            }
        }
        (0..n).all(|r| !reach[r].contains(r))
    }

    /// Every non-adjacent pair is separated by some subset of the other nodes.
    pub fn is_maximal(&self) -> bool {
        let all = self.ground().all();
        (0..self.n()).all(|i| {
            (i + 1..self.n()).all(|j| {
                self.adjacent(i, j) || {
                    let rest = all.without(i).without(j);
                    rest.subsets().any(|c| {
                        self.separates_masks(NodeSet::singleton(i), NodeSet::singleton(j), c)
                    })
                }
            })
        })
    }
}
