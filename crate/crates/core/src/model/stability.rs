//! Ordered upward and downward stability with respect to a preorder, and
//! their unordered and DAG specialisations. Only elementary statements are
//! quantified over.

use super::report::{CheckReport, Property, Witness};
use super::IndependenceModel;
use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::preorder::Preorder;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Up,
    Down,
}

/// Adding `k` to `C` must preserve `<i, j | C>` whenever `l ≼ k` for some
/// `l ∈ {i, j}` or `l ∼ k` for some `l ∈ C`.
pub fn check_ordered_upward_stability(j: &IndependenceModel, p: &Preorder) -> Result<CheckReport> {
    same_ground(j, p)?;
    Ok(scan(j, p, Direction::Up, Property::OrderedUpwardStability, false))
}

/// Removing `k` from `C` must preserve `<i, j | C>` whenever `l ⋠ k` for
/// both `l ∈ {i, j}` and `l ≮ k` for every `l ∈ C \ {k}`.
pub fn check_ordered_downward_stability(j: &IndependenceModel, p: &Preorder) -> Result<CheckReport> {
    same_ground(j, p)?;
    Ok(scan(j, p, Direction::Down, Property::OrderedDownwardStability, false))
}

/// Upward stability for every `k`: the ordered check under the preorder in
/// which all nodes are equivalent.
pub fn check_upward_stability(j: &IndependenceModel) -> CheckReport {
    let p = Preorder::all_equivalent(j.ground().clone());
    scan(j, &p, Direction::Up, Property::UpwardStability, false)
}

/// Downward stability for every `k`: the ordered check under the preorder
/// in which all nodes are incomparable.
pub fn check_downward_stability(j: &IndependenceModel) -> CheckReport {
    let p = Preorder::all_incomparable(j.ground().clone());
    scan(j, &p, Direction::Down, Property::DownwardStability, false)
}

/// Both ordered stabilities with respect to a partial order (every
/// equivalence class a singleton), as `(upward, downward)`.
///
/// # Errors
/// [`Error::NotAnOrder`] if two distinct nodes are equivalent.
pub fn check_dag_ordered_stabilities(
    j: &IndependenceModel,
    order: &Preorder,
) -> Result<(CheckReport, CheckReport)> {
    same_ground(j, order)?;
    order.require_partial_order()?;
    Ok((
        scan(j, order, Direction::Up, Property::DagOrderedUpwardStability, false),
        scan(j, order, Direction::Down, Property::DagOrderedDownwardStability, false),
    ))
}

/// Both ordered stabilities, stopping at the first violation. The preorder
/// must be over the model's ground.
pub fn satisfies_ordered_stabilities(j: &IndependenceModel, p: &Preorder) -> bool {
    scan(j, p, Direction::Up, Property::OrderedUpwardStability, true).passed()
        && scan(j, p, Direction::Down, Property::OrderedDownwardStability, true).passed()
}

fn same_ground(j: &IndependenceModel, p: &Preorder) -> Result<()> {
    if j.ground() != p.ground() {
        return Err(Error::GroundMismatch);
    }
    Ok(())
}

fn scan(j: &IndependenceModel, p: &Preorder, dir: Direction, property: Property, stop: bool) -> CheckReport {
    let n = j.n();
    let all = j.ground().all();
    let mut r = CheckReport::new(property);
    for i in 0..n {
        for jj in i + 1..n {
            let rest = all.without(i).without(jj);
            let above_pair = p.up_set(i).union(p.up_set(jj));
            for c in rest.subsets() {
                if !j.contains_elementary(i, jj, c) {
                    continue;
                }
                let candidates = match dir {
                    Direction::Up => {
                        let tied = c.iter().fold(NodeSet::EMPTY, |acc, l| acc.union(p.class_of(l)));
                        rest.difference(c).intersection(above_pair.union(tied))
                    }
                    Direction::Down => c.difference(above_pair),
                };
                for k in candidates.iter() {
                    let (target, eligible) = match dir {
                        Direction::Up => (c.with(k), true),
                        Direction::Down => {
                            let below = c.without(k).iter().any(|l| p.less(l, k));
                            (c.without(k), !below)
                        }
                    };
                    if eligible && !j.contains_elementary(i, jj, target) {
                        r.record(property, Witness::Elementary { i, j: jj, k, c });
                        if stop {
                            return r;
                        }
                    }
                }
            }
        }
    }
    r
}
