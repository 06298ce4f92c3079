//! Graphicality search split across a rayon pool.

use gfaith_core::faithfulness::{accepts, conclude, graphical_axiom_failure, DecideOptions, FaithfulnessVerdict};
use gfaith_core::model::IndependenceModel;
use gfaith_core::preorder::{Directing, DirectingSpace};
use gfaith_core::{Error, Result};
use rayon::prelude::*;
use std::collections::HashSet;

/// Same verdict as the sequential search over `alphabet`, computed with
/// `threads` workers (0 lets rayon choose).
pub fn decide_parallel(
    j: &IndependenceModel,
    alphabet: &[Directing],
    opts: DecideOptions,
    threads: usize,
) -> Result<FaithfulnessVerdict> {
    if let Some(v) = graphical_axiom_failure(j, opts.limits)? {
        return Ok(FaithfulnessVerdict {
            graphical: false,
            witnesses: Vec::new(),
            preorders: Vec::new(),
            failure: Some(v),
        });
    }
    let space = DirectingSpace::new(&j.skeleton(), alphabet, opts.edge_cap)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let total = space.len();
    let chunk = (total / (pool.current_num_threads() as u64 * 16)).max(1);
    let (accepted, examined) = pool.install(|| {
        (0..total.div_ceil(chunk))
            .into_par_iter()
            .map(|k| {
                let mut hits = Vec::new();
                let mut seen = HashSet::new();
                for c in space.range(k * chunk, ((k + 1) * chunk).min(total)) {
                    if seen.insert(c.preorder.clone()) && accepts(j, &c) {
                        hits.push(c);
                    }
                }
                (hits, seen)
            })
            .reduce(
                || (Vec::new(), HashSet::new()),
                |(mut a, mut s), (b, t)| {
                    a.extend(b);
                    s.extend(t);
                    (a, s)
                },
            )
    });
    // distinct preorders, as counted by the sequential search
    conclude(j, accepted, examined.len())
}
