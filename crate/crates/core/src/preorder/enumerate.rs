//! Candidate preorders as minimal preorders of anterial directings of a
//! skeleton.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{minimal_preorder_unchecked, Preorder};
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph};
use crate::model::IndependenceModel;
use crate::nodeset::Ground;

/// Default cap on skeleton edges for the exhaustive search.
pub const DEFAULT_EDGE_CAP: usize = 12;
/// Largest accepted edge cap (4^14 directings).
pub const MAX_EDGE_CAP: usize = 14;

/// How one skeleton edge `{i, j}` with `i < j` is directed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Directing {
    Line,
    /// `i -> j`
    Forward,
    /// `j -> i`
    Backward,
    Arc,
}

impl Directing {
    pub const ALL: [Directing; 4] = [Directing::Line, Directing::Forward, Directing::Backward, Directing::Arc];
    pub const ARROWS: [Directing; 2] = [Directing::Forward, Directing::Backward];
}

/// A compatible preorder together with the graph `G(J, ≼)` it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub preorder: Preorder,
    pub graph: MixedGraph,
    /// Position of the directing in enumeration order.
    pub code: u64,
}

/// All assignments of an alphabet of [`Directing`]s to the edges of a
/// skeleton, numbered in lexicographic order with the first edge (in
/// `(i, j)` order) most significant.
#[derive(Debug, Clone)]
pub struct DirectingSpace {
    ground: Ground,
    pairs: Vec<(usize, usize)>,
    alphabet: Vec<Directing>,
}

impl DirectingSpace {
    pub fn new(skeleton: &MixedGraph, alphabet: &[Directing], edge_cap: usize) -> Result<Self> {
        let cap = edge_cap.min(MAX_EDGE_CAP);
        let mut pairs = Vec::new();
        for i in 0..skeleton.n() {
            for j in skeleton.neighbours(i).iter().filter(|&j| j > i) {
                pairs.push((i, j));
            }
        }
        if pairs.len() > cap {
            return Err(Error::CapExceeded {
                what: "skeleton for preorder enumeration",
                actual: pairs.len(),
                cap,
            });
        }
        assert!(!alphabet.is_empty(), "alphabet must be non-empty");
        Ok(DirectingSpace {
            ground: skeleton.ground().clone(),
            pairs,
            alphabet: alphabet.to_vec(),
        })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of directings.
    pub fn len(&self) -> u64 {
        (self.alphabet.len() as u64).pow(self.pairs.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The graph for directing number `code`.
    pub fn graph(&self, code: u64) -> MixedGraph {
        let base = self.alphabet.len() as u64;
        let mut g = MixedGraph::new(self.ground.clone());
        let mut rest = code;
        let mut digits = alloc::vec![0usize; self.pairs.len()];
        for d in digits.iter_mut().rev() {
            *d = (rest % base) as usize;
            rest /= base;
        }
        for (&(i, j), &d) in self.pairs.iter().zip(&digits) {
            let (u, v, kind) = match self.alphabet[d] {
                Directing::Line => (i, j, EdgeKind::Line),
                Directing::Forward => (i, j, EdgeKind::Arrow),
                Directing::Backward => (j, i, EdgeKind::Arrow),
                Directing::Arc => (i, j, EdgeKind::Arc),
            };
            g.add_edge(u, v, kind).expect("skeleton pairs are distinct");
        }
        g
    }

    /// The candidate for `code`, or `None` when that directing is not
    /// anterial.
    pub fn candidate(&self, code: u64) -> Option<Candidate> {
        let graph = self.graph(code);
        graph.is_anterial().then(|| Candidate {
            preorder: minimal_preorder_unchecked(&graph),
            graph,
            code,
        })
    }

    /// Candidates with codes in `start..end`, without deduplication; used to
    /// split the space between workers.
    pub fn range(&self, start: u64, end: u64) -> impl Iterator<Item = Candidate> + '_ {
        (start..end.min(self.len())).filter_map(move |c| self.candidate(c))
    }
}

/// Stream of distinct compatible preorders in directing order.
#[derive(Debug)]
pub struct CompatiblePreorders {
    space: DirectingSpace,
    next: u64,
    seen: BTreeSet<Vec<crate::nodeset::NodeSet>>,
}

impl CompatiblePreorders {
    pub fn new(space: DirectingSpace) -> Self {
        CompatiblePreorders {
            space,
            next: 0,
            seen: BTreeSet::new(),
        }
    }

    pub fn space(&self) -> &DirectingSpace {
        &self.space
    }
}

impl Iterator for CompatiblePreorders {
    type Item = Candidate;

    fn next(&mut self) -> Option<Candidate> {
        while self.next < self.space.len() {
            let code = self.next;
            self.next += 1;
            if let Some(c) = self.space.candidate(code) {
                if self.seen.insert(c.preorder.up.clone()) {
                    return Some(c);
                }
            }
        }
        None
    }
}

/// Every `J`-compatible preorder, found by directing the edges of `sk(J)`
/// in all four ways and keeping the anterial results.
pub fn enumerate_compatible_preorders(j: &IndependenceModel, edge_cap: usize) -> Result<CompatiblePreorders> {
    Ok(CompatiblePreorders::new(DirectingSpace::new(
        &j.skeleton(),
        &Directing::ALL,
        edge_cap,
    )?))
}
