use super::MixedGraph;
use crate::error::{Error, Result};
use crate::model::{IndependenceModel, MAX_MODEL_NODES};

/// Default ground-size cap for materialising `J(G)`.
pub const DEFAULT_MODEL_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedOptions {
    /// Largest node count accepted; at most [`MAX_MODEL_NODES`].
    pub cap: usize,
    /// Query only elementary statements and extend to sets by composition
    /// and decomposition, which `J(G)` always satisfies.
    pub via_elementary: bool,
    /// Build the model both ways and fail on any difference.
    pub cross_check: bool,
}

impl Default for InducedOptions {
    fn default() -> Self {
        InducedOptions {
            cap: DEFAULT_MODEL_CAP,
            via_elementary: false,
            cross_check: false,
        }
    }
}

impl InducedOptions {
    pub fn elementary() -> Self {
        InducedOptions {
            via_elementary: true,
            ..InducedOptions::default()
        }
    }
}

impl MixedGraph {
    /// `J(G)`: every triple separated in the graph.
    pub fn induced_model(&self) -> Result<IndependenceModel> {
        self.induced_model_with(InducedOptions::default())
    }

    pub fn induced_model_with(&self, opts: InducedOptions) -> Result<IndependenceModel> {
        let cap = opts.cap.min(MAX_MODEL_NODES);
        if self.n() > cap {
            return Err(Error::CapExceeded {
                what: "graph for model materialisation",
                actual: self.n(),
                cap,
            });
        }
        let ground = self.ground().clone();
        let direct = || IndependenceModel::from_fn(ground.clone(), |a, b, c| self.separates_masks(a, b, c));
        let elementary = || {
            IndependenceModel::from_elementary(ground.clone(), |i, j, c| {
                self.separates_masks(
                    crate::nodeset::NodeSet::singleton(i),
                    crate::nodeset::NodeSet::singleton(j),
                    c,
                )
            })
        };
        let model = if opts.via_elementary { elementary()? } else { direct()? };
        if opts.cross_check {
            let other = if opts.via_elementary { direct()? } else { elementary()? };
            if let Some((s, _)) = model.first_difference(&other)? {
                return Err(Error::Internal(alloc::format!(
                    "elementary and direct construction of the induced model disagree at {s:?}"
                )));
            }
        }
        Ok(model)
    }
}

/// Whether two graphs over the same labels induce the same model.
pub fn markov_equivalent(g1: &MixedGraph, g2: &MixedGraph) -> Result<bool> {
    let g2 = g2.relabel(g1.ground())?;
    let opts = InducedOptions::elementary();
    Ok(g1.induced_model_with(opts)? == g2.induced_model_with(opts)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeKind::*;

    #[test]
    fn complete_ug_has_only_trivial_statements() {
        let g = MixedGraph::from_edges(&[("a", Line, "b"), ("b", Line, "c"), ("a", Line, "c")]).unwrap();
        assert_eq!(g.induced_model().unwrap().statements().count(), 0);
    }

    #[test]
    fn path_has_single_elementary_statement() {
        let g = MixedGraph::from_edges(&[("1", Line, "2"), ("2", Line, "3")]).unwrap();
        let m = g.induced_model().unwrap();
        let stmts: alloc::vec::Vec<_> = m.elementary_statements().collect();
        assert_eq!(stmts.len(), 1);
        assert!(m.contains_labels(&["1"], &["3"], &["2"]).unwrap());
    }

    #[test]
    fn cross_check_and_cap() {
        let g = MixedGraph::from_edges(&[("a", Arrow, "c"), ("b", Arrow, "c"), ("c", Line, "d"), ("d", Arc, "e")])
            .unwrap();
        let opts = InducedOptions {
            cross_check: true,
            ..InducedOptions::default()
        };
        assert!(g.induced_model_with(opts).is_ok());
        let small = InducedOptions {
            cap: 3,
            ..InducedOptions::default()
        };
        assert!(matches!(g.induced_model_with(small), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn equivalence_examples() {
        let ab = MixedGraph::from_edges(&[("a", Arrow, "b")]).unwrap();
        let ba = MixedGraph::from_edges(&[("b", Arrow, "a")]).unwrap();
        assert!(markov_equivalent(&ab, &ba).unwrap());
        let chain = MixedGraph::from_edges(&[("a", Arrow, "b"), ("b", Arrow, "c")]).unwrap();
        let collider = MixedGraph::from_edges(&[("a", Arrow, "c"), ("b", Arrow, "c")]).unwrap();
        let collider = collider.relabel(chain.ground()).unwrap();
        assert!(!markov_equivalent(&chain, &collider).unwrap());
        assert!(markov_equivalent(&chain, &chain).unwrap());
        let other = MixedGraph::from_edges(&[("a", Arrow, "z")]).unwrap();
        assert_eq!(markov_equivalent(&ab, &other).unwrap_err(), Error::GroundMismatch);
    }
}
