use alloc::vec::Vec;

use super::{for_each_unordered_triple, IndependenceModel};
use crate::error::{Error, Result};
use crate::nodeset::{Ground, NodeSet};

/// Marginalises over `m` and conditions on `c`: the model over
/// `V \ (M ∪ C)` containing `<A, B | D>` exactly when `<A, B | D ∪ C>` is
/// in `j`. Remaining nodes keep their relative order.
pub fn alpha(j: &IndependenceModel, m: NodeSet, c: NodeSet) -> Result<IndependenceModel> {
    let all = j.ground().all();
    let stray = m.union(c).difference(all);
    if !stray.is_empty() {
        return Err(Error::Internal(alloc::format!("node indices {stray:?} out of range")));
    }
    if let Some(i) = m.intersection(c).first() {
        return Err(Error::Overlap(j.ground().label(i).into()));
    }
    let keep: Vec<usize> = all.difference(m.union(c)).iter().collect();
    let ground = Ground::new(keep.iter().map(|&i| j.ground().label(i)))?;
    let lift = |s: NodeSet| s.iter().map(|x| keep[x]).collect::<NodeSet>();
    let mut out = IndependenceModel::empty(ground)?;
    for_each_unordered_triple(out.ground().all(), |a, b, d| {
        if j.contains_masks(lift(a), lift(b), lift(d).union(c)) {
            out.insert_masks(a, b, d);
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_overlap() {
        let g = Ground::new(["a", "b", "c"]).unwrap();
        let mut j = IndependenceModel::empty(g).unwrap();
        let s = j.statement(&["a"], &["c"], &["b"]).unwrap();
        j.insert(s).unwrap();
        assert_eq!(alpha(&j, NodeSet::EMPTY, NodeSet::EMPTY).unwrap(), j);
        let err = alpha(&j, NodeSet::singleton(1), NodeSet::singleton(1)).unwrap_err();
        assert_eq!(err, Error::Overlap("b".into()));
        let cond = alpha(&j, NodeSet::EMPTY, NodeSet::singleton(1)).unwrap();
        assert_eq!(cond.ground().labels(), &["a", "c"]);
        assert!(cond.contains_labels(&["a"], &["c"], &[] as &[&str]).unwrap());
        let marg = alpha(&j, NodeSet::singleton(1), NodeSet::EMPTY).unwrap();
        assert_eq!(marg.statements().count(), 0);
    }
}
