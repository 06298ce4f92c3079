//! Mixed graphs with lines, arrows and arcs.
//!
//! Nodes are indices into a labelled [`Ground`]; edges keep their insertion
//! order and parallel edges are stored separately, so a pair of nodes may
//! carry several edges.

mod anterior;
mod classify;
mod induced;
mod separation;
mod walk;

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::nodeset::{Ground, NodeSet};

pub use anterior::AnterialViolation;
pub use classify::GraphClassReport;
pub use induced::{markov_equivalent, InducedOptions, DEFAULT_MODEL_CAP};
pub use walk::{connecting_walk_oracle, Section, Walk};

/// Endpoint mark of an edge at one of its nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    Tail,
    Head,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// `i -- j`
    Line,
    /// `i -> j`, from `Edge::u` to `Edge::v`
    Arrow,
    /// `i <-> j`
    Arc,
}

impl EdgeKind {
    pub fn symbol(self) -> &'static str {
        match self {
            EdgeKind::Line => "--",
            EdgeKind::Arrow => "->",
            EdgeKind::Arc => "<->",
        }
    }

    pub fn from_symbol(s: &str) -> Option<EdgeKind> {
        match s {
            "--" => Some(EdgeKind::Line),
            "->" => Some(EdgeKind::Arrow),
            "<->" => Some(EdgeKind::Arc),
            _ => None,
        }
    }
}

/// An edge between two distinct nodes. Arrows point from `u` to `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
}

impl Edge {
    /// Mark of this edge at endpoint `node`.
    #[inline]
    pub fn mark_at(&self, node: usize) -> Mark {
        debug_assert!(node == self.u || node == self.v);
        match self.kind {
            EdgeKind::Line => Mark::Tail,
            EdgeKind::Arc => Mark::Head,
            EdgeKind::Arrow => {
                if node == self.v {
                    Mark::Head
                } else {
                    Mark::Tail
                }
            }
        }
    }

    /// The endpoint opposite to `node`.
    #[inline]
    pub fn other(&self, node: usize) -> usize {
        if node == self.u {
            self.v
        } else {
            self.u
        }
    }

    /// Orientation-independent key: symmetric edges get `u < v`.
    fn canonical(&self) -> (usize, usize, EdgeKind) {
        match self.kind {
            EdgeKind::Arrow => (self.u, self.v, self.kind),
            _ => (self.u.min(self.v), self.u.max(self.v), self.kind),
        }
    }
}

#[derive(Clone)]
pub struct MixedGraph {
    ground: Ground,
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
}

impl MixedGraph {
    /// Edgeless graph over `ground`.
    pub fn new(ground: Ground) -> Self {
        let n = ground.len();
        MixedGraph {
            ground,
            edges: Vec::new(),
            incident: vec![Vec::new(); n],
        }
    }

    pub fn with_nodes<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<alloc::string::String>,
    {
        Ok(MixedGraph::new(Ground::new(labels)?))
    }

    /// Builds a graph from `(from, kind, to)` triples, creating nodes in order
    /// of first appearance.
    pub fn from_edges(edges: &[(&str, EdgeKind, &str)]) -> Result<Self> {
        let mut g = MixedGraph::new(Ground::default());
        for &(a, kind, b) in edges {
            let u = g.add_node_if_absent(a)?;
            let v = g.add_node_if_absent(b)?;
            g.add_edge(u, v, kind)?;
        }
        Ok(g)
    }

    pub fn add_node(&mut self, label: &str) -> Result<usize> {
        let i = self.ground.push(label.to_string())?;
        self.incident.push(Vec::new());
        Ok(i)
    }

    pub fn add_node_if_absent(&mut self, label: &str) -> Result<usize> {
        match self.ground.index_of(label) {
            Some(i) => Ok(i),
            None => self.add_node(label),
        }
    }

    /// Adds an edge; arrows point from `u` to `v`. Parallel edges are kept.
    pub fn add_edge(&mut self, u: usize, v: usize, kind: EdgeKind) -> Result<usize> {
        assert!(u < self.n() && v < self.n(), "node index out of range");
        if u == v {
            return Err(Error::Loop(self.ground.label(u).to_string()));
        }
        let id = self.edges.len();
        self.edges.push(Edge { u, v, kind });
        self.incident[u].push(id);
        self.incident[v].push(id);
        Ok(id)
    }

    pub fn add_edge_by_label(&mut self, a: &str, kind: EdgeKind, b: &str) -> Result<usize> {
        let u = self.ground.require(a)?;
        let v = self.ground.require(b)?;
        self.add_edge(u, v, kind)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn label(&self, i: usize) -> &str {
        self.ground.label(i)
    }

    pub fn node(&self, label: &str) -> Result<usize> {
        Ok(self.ground.require(label)?)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    /// Ids of edges incident to `v`, in insertion order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn neighbours(&self, v: usize) -> NodeSet {
        self.incident[v]
            .iter()
            .map(|&e| self.edges[e].other(v))
            .collect()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.incident[u].iter().any(|&e| self.edges[e].other(u) == v)
    }

    pub fn edges_between(&self, u: usize, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.incident[u]
            .iter()
            .map(move |&e| &self.edges[e])
            .filter(move |e| e.other(u) == v)
    }

    /// No parallel edges (loops are never stored).
    pub fn is_simple(&self) -> bool {
        (0..self.n()).all(|u| {
            let mut seen = NodeSet::EMPTY;
            self.incident[u].iter().all(|&e| {
                let w = self.edges[e].other(u);
                let fresh = !seen.contains(w);
                seen.insert(w);
                fresh
            })
        })
    }

    /// Checks the parallel-edge combinations a chain mixed graph may carry:
    /// an arc may accompany a line or arrows of one direction, but a line
    /// never shares a pair with an arrow and arrows never point both ways.
    pub fn check_multi_edges(&self) -> Result<()> {
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                let (mut line, mut fwd, mut back) = (false, false, false);
                for e in self.edges_between(u, v) {
                    match e.kind {
                        EdgeKind::Line => line = true,
                        EdgeKind::Arrow if e.u == u => fwd = true,
                        EdgeKind::Arrow => back = true,
                        EdgeKind::Arc => {}
                    }
                }
                if (line && (fwd || back)) || (fwd && back) {
                    return Err(Error::IllegalMultiEdge(
                        self.label(u).to_string(),
                        self.label(v).to_string(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn has_kind(&self, kind: EdgeKind) -> bool {
        self.edges.iter().any(|e| e.kind == kind)
    }

    /// Undirected simple graph with one line per adjacent pair.
    pub fn skeleton(&self) -> MixedGraph {
        let mut sk = MixedGraph::new(self.ground.clone());
        for u in 0..self.n() {
            for v in self.neighbours(u).iter().filter(|&v| v > u) {
                sk.add_edge(u, v, EdgeKind::Line).expect("distinct endpoints");
            }
        }
        sk
    }

    /// Same graph over `target`, which must hold the same labels.
    pub fn relabel(&self, target: &Ground) -> Result<MixedGraph> {
        if !self.ground.same_labels(target) {
            return Err(Error::GroundMismatch);
        }
        let map: Vec<usize> = (0..self.n())
            .map(|i| target.index_of(self.label(i)).expect("same labels"))
            .collect();
        let mut g = MixedGraph::new(target.clone());
        for e in &self.edges {
            g.add_edge(map[e.u], map[e.v], e.kind)?;
        }
        Ok(g)
    }

    /// Edges as a sorted list of orientation-normalised keys.
    pub fn canonical_edges(&self) -> Vec<(usize, usize, EdgeKind)> {
        let mut v: Vec<_> = self.edges.iter().map(Edge::canonical).collect();
        v.sort();
        v
    }

    pub(crate) fn check_disjoint(&self, sets: &[(&'static str, NodeSet)]) -> Result<()> {
        let all = self.ground.all();
        let mut seen = NodeSet::EMPTY;
        for &(_, s) in sets {
            if let Some(i) = s.difference(all).first() {
                return Err(Error::Internal(alloc::format!("node index {i} out of range")));
            }
            if let Some(i) = seen.intersection(s).first() {
                return Err(Error::Overlap(self.label(i).to_string()));
            }
            seen = seen.union(s);
        }
        Ok(())
    }
}

/// Equal node labels in the same order and equal edge multisets.
impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.canonical_edges() == other.canonical_edges()
    }
}

impl Eq for MixedGraph {}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedGraph {{ nodes: {:?}, edges: [", self.ground)?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} {} {}", self.label(e.u), e.kind.symbol(), self.label(e.v))?;
        }
        f.write_str("] }")
    }
}
