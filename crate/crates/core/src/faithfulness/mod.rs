//! Markov properties, faithfulness, and the decision whether a model is
//! graphical.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, InducedOptions, MixedGraph};
use crate::model::{
    check_downward_stability, check_upward_stability, satisfies_ordered_stabilities, AxiomChecker, CheckReport,
    IndependenceModel, Limits, Property, Violation, Witness, MAX_MODEL_NODES,
};
use crate::nodeset::NodeSet;
use crate::preorder::{Candidate, CompatiblePreorders, Directing, DirectingSpace, Preorder, DEFAULT_EDGE_CAP};

/// `sk(J)`: a line between `i` and `j` unless some `<i, j | C>` holds.
pub fn model_skeleton(j: &IndependenceModel) -> MixedGraph {
    j.skeleton()
}

/// `C(i, j) = ant(i) ∪ ant(j) \ {i, j}` for non-adjacent `i`, `j` of an
/// anterial graph.
pub fn pairwise_conditioning_set(g: &MixedGraph, i: usize, j: usize) -> Result<NodeSet> {
    if g.adjacent(i, j) {
        return Err(Error::Adjacent(g.label(i).into(), g.label(j).into()));
    }
    if let Some(v) = g.anterial_violation() {
        return Err(Error::NotAnterial(g.describe_violation(&v)));
    }
    Ok(conditioning_set(&g.anterior_reach(), i, j))
}

fn conditioning_set(reach: &[NodeSet], i: usize, j: usize) -> NodeSet {
    (0..reach.len())
        .filter(|&v| reach[v].contains(i) || reach[v].contains(j))
        .collect::<NodeSet>()
        .without(i)
        .without(j)
}

fn same_ground(j: &IndependenceModel, g: &MixedGraph) -> Result<()> {
    if j.ground() != g.ground() {
        return Err(Error::GroundMismatch);
    }
    Ok(())
}

fn induced(g: &MixedGraph) -> Result<IndependenceModel> {
    g.induced_model_with(InducedOptions {
        cap: MAX_MODEL_NODES,
        ..InducedOptions::elementary()
    })
}

/// `<i, j | C(i, j)> ∈ J` for every non-adjacent pair.
pub fn is_pairwise_markov(j: &IndependenceModel, g: &MixedGraph) -> Result<bool> {
    same_ground(j, g)?;
    if let Some(v) = g.anterial_violation() {
        return Err(Error::NotAnterial(g.describe_violation(&v)));
    }
    let reach = g.anterior_reach();
    let n = g.n();
    Ok((0..n).all(|a| {
        (a + 1..n).all(|b| g.adjacent(a, b) || j.contains_elementary(a, b, conditioning_set(&reach, a, b)))
    }))
}

/// Global Markov property: `J(G) ⊆ J`.
pub fn is_markov(j: &IndependenceModel, g: &MixedGraph) -> Result<bool> {
    same_ground(j, g)?;
    induced(g)?.is_subset_of(j)
}

/// Markov, and `sk(G) = sk(J)`.
pub fn is_minimally_markov(j: &IndependenceModel, g: &MixedGraph) -> Result<bool> {
    Ok(is_markov(j, g)? && g.skeleton() == j.skeleton())
}

/// `J = J(G)`.
pub fn is_faithful(j: &IndependenceModel, g: &MixedGraph) -> Result<bool> {
    same_ground(j, g)?;
    Ok(induced(g)? == *j)
}

/// Result of a graphicality decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaithfulnessVerdict {
    pub graphical: bool,
    /// Every graph found faithful to the model, in enumeration order.
    pub witnesses: Vec<MixedGraph>,
    /// The preorder behind each witness.
    pub preorders: Vec<Preorder>,
    /// The first failed condition when not graphical.
    pub failure: Option<Violation>,
}

impl FaithfulnessVerdict {
    fn failed(failure: Violation) -> Self {
        FaithfulnessVerdict {
            graphical: false,
            witnesses: Vec::new(),
            preorders: Vec::new(),
            failure: Some(failure),
        }
    }
}

/// Which graphs a decision may return.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassFilter {
    Ug,
    Bg,
    Dag,
    AnG,
}

impl ClassFilter {
    pub fn name(self) -> &'static str {
        match self {
            ClassFilter::Ug => "ug",
            ClassFilter::Bg => "bg",
            ClassFilter::Dag => "dag",
            ClassFilter::AnG => "ang",
        }
    }

    pub fn parse(s: &str) -> Option<ClassFilter> {
        match s.to_ascii_lowercase().as_str() {
            "ug" => Some(ClassFilter::Ug),
            "bg" => Some(ClassFilter::Bg),
            "dag" => Some(ClassFilter::Dag),
            "ang" => Some(ClassFilter::AnG),
            _ => None,
        }
    }
}

/// Caps for a decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideOptions {
    pub limits: Limits,
    pub edge_cap: usize,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            limits: Limits::default(),
            edge_cap: DEFAULT_EDGE_CAP,
        }
    }
}

fn first_failure(r: CheckReport) -> Option<Violation> {
    r.violations.into_iter().next()
}

/// Checks the axioms required of every graphical model in the order
/// semi-graphoid, intersection, composition, singleton-transitivity, and
/// returns the first violation.
pub fn graphical_axiom_failure(j: &IndependenceModel, limits: Limits) -> Result<Option<Violation>> {
    let ax = AxiomChecker::new(limits);
    for r in [ax.semi_graphoid(j)?, ax.intersection(j)?, ax.composition(j)?, ax.singleton_transitivity(j)?] {
        if let Some(v) = first_failure(r) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Whether `J` satisfies both ordered stabilities for this candidate and
/// the candidate graph is maximal.
///
/// Maximality is required because stabilities alone do not make a
/// non-maximal `G(J, ≼)` faithful: with `J = J(a←d—c↔b→a)` the directing
/// `b→a, a↔d, b↔c, c—d` is compatible, passes both stabilities and is
/// minimally Markov, yet `a` and `c` are inseparable in it. A faithful
/// graph on `sk(J)` is always maximal, so no witness is lost.
pub fn accepts(j: &IndependenceModel, c: &Candidate) -> bool {
    satisfies_ordered_stabilities(j, &c.preorder) && c.graph.is_maximal()
}

/// Assembles a verdict from the accepted candidates (in any order) of a
/// search that examined `examined` compatible preorders, verifying each
/// witness by direct comparison of models.
pub fn conclude(j: &IndependenceModel, mut accepted: Vec<Candidate>, examined: usize) -> Result<FaithfulnessVerdict> {
    if accepted.is_empty() {
        return Ok(FaithfulnessVerdict::failed(Violation {
            axiom: Property::CompatiblePreorder,
            witness: Witness::Search { candidates: examined },
        }));
    }
    accepted.sort_by_key(|c| c.code);
    accepted.dedup_by(|a, b| a.preorder == b.preorder);
    for c in &accepted {
        if !is_faithful(j, &c.graph)? {
            return Err(Error::Internal(alloc::format!(
                "graph {:?} passed every condition but is not faithful to the model",
                c.graph
            )));
        }
    }
    let (preorders, witnesses) = accepted.into_iter().map(|c| (c.preorder, c.graph)).unzip();
    Ok(FaithfulnessVerdict {
        graphical: true,
        witnesses,
        preorders,
        failure: None,
    })
}

/// Decides whether some anterial graph is faithful to `j` and returns every
/// such graph.
pub fn decide_graphical(j: &IndependenceModel) -> Result<FaithfulnessVerdict> {
    decide_graphical_with(j, DecideOptions::default())
}

pub fn decide_graphical_with(j: &IndependenceModel, opts: DecideOptions) -> Result<FaithfulnessVerdict> {
    search(j, opts, &Directing::ALL)
}

fn search(j: &IndependenceModel, opts: DecideOptions, alphabet: &[Directing]) -> Result<FaithfulnessVerdict> {
    if let Some(v) = graphical_axiom_failure(j, opts.limits)? {
        return Ok(FaithfulnessVerdict::failed(v));
    }
    let space = DirectingSpace::new(&j.skeleton(), alphabet, opts.edge_cap)?;
    let mut examined = 0;
    let mut accepted = Vec::new();
    for c in CompatiblePreorders::new(space) {
        examined += 1;
        if accepts(j, &c) {
            accepted.push(c);
        }
    }
    conclude(j, accepted, examined)
}

/// `G_u(J)`: a line wherever `<i, j | V \ {i, j}>` fails.
pub fn pairwise_undirected_graph(j: &IndependenceModel) -> MixedGraph {
    pairwise_graph(j, EdgeKind::Line, |rest| rest)
}

/// `G_b(J)`: an arc wherever `<i, j | ∅>` fails.
pub fn pairwise_bidirected_graph(j: &IndependenceModel) -> MixedGraph {
    pairwise_graph(j, EdgeKind::Arc, |_| NodeSet::EMPTY)
}

fn pairwise_graph(j: &IndependenceModel, kind: EdgeKind, given: impl Fn(NodeSet) -> NodeSet) -> MixedGraph {
    let mut g = MixedGraph::new(j.ground().clone());
    let all = j.ground().all();
    for a in 0..j.n() {
        for b in a + 1..j.n() {
            if !j.contains_elementary(a, b, given(all.without(a).without(b))) {
                g.add_edge(a, b, kind).expect("distinct endpoints");
            }
        }
    }
    g
}

/// Like [`decide_graphical`] but only graphs of one class are sought.
pub fn restricted_graphical(j: &IndependenceModel, filter: ClassFilter) -> Result<FaithfulnessVerdict> {
    restricted_graphical_with(j, filter, DecideOptions::default())
}

pub fn restricted_graphical_with(
    j: &IndependenceModel,
    filter: ClassFilter,
    opts: DecideOptions,
) -> Result<FaithfulnessVerdict> {
    let ax = AxiomChecker::new(opts.limits);
    match filter {
        ClassFilter::AnG => decide_graphical_with(j, opts),
        ClassFilter::Dag => search(j, opts, &Directing::ARROWS),
        ClassFilter::Ug => {
            let reports = [
                ax.semi_graphoid(j)?,
                ax.intersection(j)?,
                ax.singleton_transitivity(j)?,
                check_upward_stability(j),
            ];
            if let Some(v) = reports.into_iter().find_map(first_failure) {
                return Ok(FaithfulnessVerdict::failed(v));
            }
            let g = pairwise_undirected_graph(j);
            if g != j.skeleton() {
                return Err(Error::Internal(
                    "upward-stable model whose pairwise graph differs from its skeleton".into(),
                ));
            }
            single_witness(j, g, Preorder::all_equivalent(j.ground().clone()))
        }
        ClassFilter::Bg => {
            let reports = [
                ax.semi_graphoid(j)?,
                ax.composition(j)?,
                ax.singleton_transitivity(j)?,
                check_downward_stability(j),
            ];
            if let Some(v) = reports.into_iter().find_map(first_failure) {
                return Ok(FaithfulnessVerdict::failed(v));
            }
            let g = pairwise_bidirected_graph(j);
            if g.skeleton() != j.skeleton() {
                return Err(Error::Internal(
                    "downward-stable model whose pairwise graph differs from its skeleton".into(),
                ));
            }
            single_witness(j, g, Preorder::all_incomparable(j.ground().clone()))
        }
    }
}

fn single_witness(j: &IndependenceModel, g: MixedGraph, p: Preorder) -> Result<FaithfulnessVerdict> {
    if !is_faithful(j, &g)? {
        return Err(Error::Internal(alloc::format!(
            "graph {g:?} passed every condition but is not faithful to the model"
        )));
    }
    Ok(FaithfulnessVerdict {
        graphical: true,
        witnesses: alloc::vec![g],
        preorders: alloc::vec![p],
        failure: None,
    })
}
