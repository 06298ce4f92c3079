use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{EdgeKind, MixedGraph};
use crate::error::Result;
use crate::nodeset::NodeSet;

/// Why a graph fails to be anterial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnterialViolation {
    /// The arrow with this edge id lies on a semi-directed cycle.
    SemiDirectedCycle(usize),
    /// One endpoint of this arc is an anterior of the other.
    ArcBetweenAnteriors(usize),
}

impl MixedGraph {
    /// Transitive closure of one-step relation `step`, over non-empty walks.
    fn closure(&self, step: impl Fn(usize) -> NodeSet) -> Vec<NodeSet> {
        let n = self.n();
        let mut reach: Vec<NodeSet> = (0..n).map(step).collect();
        for k in 0..n {
            let rk = reach[k];
            for r in reach.iter_mut() {
                if r.contains(k) {
                    *r = r.union(rk);
                }
            }
        }
        reach
    }

    /// `out[v]` holds every node reachable from `v` by a non-empty walk of
    /// lines and forward arrows; `v` is an anterior of each of them
    /// (except possibly of itself).
    pub fn anterior_reach(&self) -> Vec<NodeSet> {
        self.closure(|v| {
            self.incident(v)
                .iter()
                .map(|&e| self.edge(e))
                .filter(|e| e.kind == EdgeKind::Line || (e.kind == EdgeKind::Arrow && e.u == v))
                .map(|e| e.other(v))
                .collect()
        })
    }

    /// Like [`anterior_reach`](Self::anterior_reach) but along forward arrows only.
    pub fn ancestor_reach(&self) -> Vec<NodeSet> {
        self.closure(|v| {
            self.incident(v)
                .iter()
                .map(|&e| self.edge(e))
                .filter(|e| e.kind == EdgeKind::Arrow && e.u == v)
                .map(|e| e.v)
                .collect()
        })
    }

    /// `ant(j)`: nodes with an anterior walk to `j`, never `j` itself.
    pub fn anteriors(&self, j: usize) -> NodeSet {
        invert(&self.anterior_reach(), j)
    }

    /// `an(j)`: nodes with a directed walk to `j`, never `j` itself.
    pub fn ancestors(&self, j: usize) -> NodeSet {
        invert(&self.ancestor_reach(), j)
    }

    pub fn anteriors_of_label(&self, label: &str) -> Result<NodeSet> {
        Ok(self.anteriors(self.node(label)?))
    }

    pub fn ancestors_of_label(&self, label: &str) -> Result<NodeSet> {
        Ok(self.ancestors(self.node(label)?))
    }

    /// `ant(A) = (union of ant(j), j in A) \ A`.
    pub fn anteriors_of_set(&self, a: NodeSet) -> NodeSet {
        let reach = self.anterior_reach();
        (0..self.n())
            .filter(|&v| !reach[v].intersection(a).is_empty())
            .collect::<NodeSet>()
            .difference(a)
    }

    /// First arrow lying on a semi-directed cycle, if any.
    pub fn semi_directed_cycle(&self) -> Option<usize> {
        let reach = self.anterior_reach();
        self.edges()
            .iter()
            .position(|e| e.kind == EdgeKind::Arrow && reach[e.v].contains(e.u))
    }

    pub fn anterial_violation(&self) -> Option<AnterialViolation> {
        let reach = self.anterior_reach();
        for (id, e) in self.edges().iter().enumerate() {
            match e.kind {
                EdgeKind::Arrow if reach[e.v].contains(e.u) => {
                    return Some(AnterialViolation::SemiDirectedCycle(id))
                }
                _ => {}
            }
        }
        self.edges()
            .iter()
            .position(|e| {
                e.kind == EdgeKind::Arc && (reach[e.u].contains(e.v) || reach[e.v].contains(e.u))
            })
            .map(AnterialViolation::ArcBetweenAnteriors)
    }

    pub fn is_anterial(&self) -> bool {
        self.anterial_violation().is_none()
    }

    pub(crate) fn describe_violation(&self, v: &AnterialViolation) -> String {
        let show = |id: usize| {
            let e = self.edge(id);
            format!("{} {} {}", self.label(e.u), e.kind.symbol(), self.label(e.v))
        };
        match *v {
            AnterialViolation::SemiDirectedCycle(id) => {
                format!("arrow `{}` lies on a semi-directed cycle", show(id))
            }
            AnterialViolation::ArcBetweenAnteriors(id) => {
                format!("arc `{}` joins a node to one of its anteriors", show(id))
            }
        }
    }
}

fn invert(reach: &[NodeSet], j: usize) -> NodeSet {
    reach
        .iter()
        .enumerate()
        .filter(|&(v, r)| v != j && r.contains(j))
        .map(|(v, _)| v)
        .collect()
}
