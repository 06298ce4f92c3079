use alloc::vec::Vec;
use core::fmt;

use crate::nodeset::NodeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Symmetry,
    Decomposition,
    WeakUnion,
    Contraction,
    SemiGraphoid,
    Intersection,
    Composition,
    SingletonTransitivity,
    OrderedUpwardStability,
    OrderedDownwardStability,
    UpwardStability,
    DownwardStability,
    DagOrderedUpwardStability,
    DagOrderedDownwardStability,
    /// No compatible preorder satisfies both ordered stabilities.
    CompatiblePreorder,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Symmetry => "symmetry",
            Property::Decomposition => "decomposition",
            Property::WeakUnion => "weak-union",
            Property::Contraction => "contraction",
            Property::SemiGraphoid => "semi-graphoid",
            Property::Intersection => "intersection",
            Property::Composition => "composition",
            Property::SingletonTransitivity => "singleton-transitivity",
            Property::OrderedUpwardStability => "ordered-upward-stability",
            Property::OrderedDownwardStability => "ordered-downward-stability",
            Property::UpwardStability => "upward-stability",
            Property::DownwardStability => "downward-stability",
            Property::DagOrderedUpwardStability => "dag-ordered-upward-stability",
            Property::DagOrderedDownwardStability => "dag-ordered-downward-stability",
            Property::CompatiblePreorder => "compatible-preorder",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The instantiation at which an axiom failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    /// Set-valued axioms over disjoint `A`, `B`, `C`, `D`.
    Sets {
        a: NodeSet,
        b: NodeSet,
        c: NodeSet,
        d: NodeSet,
    },
    /// Axioms about `<i, j | C>` and a single extra node `k`.
    Elementary {
        i: usize,
        j: usize,
        k: usize,
        c: NodeSet,
    },
    /// Number of candidate preorders that were examined.
    Search { candidates: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// The individual axiom that failed (e.g. decomposition inside a
    /// semi-graphoid check).
    pub axiom: Property,
    pub witness: Witness,
}

/// Outcome of checking one property: the first violation of each
/// constituent axiom in enumeration order, plus the total count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub property: Property,
    pub violations: Vec<Violation>,
    pub count: usize,
}

impl CheckReport {
    pub fn new(property: Property) -> Self {
        CheckReport {
            property,
            violations: Vec::new(),
            count: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn record(&mut self, axiom: Property, witness: Witness) {
        self.count += 1;
        if !self.violations.iter().any(|v| v.axiom == axiom) {
            self.violations.push(Violation { axiom, witness });
        }
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}
