//! JSON renderings of reports and verdicts, with node sets given as label
//! lists.

use gfaith_core::faithfulness::FaithfulnessVerdict;
use gfaith_core::graph::{GraphClassReport, MixedGraph, Walk};
use gfaith_core::model::{CheckReport, IndependenceModel, Statement, Violation, Witness};
use gfaith_core::nodeset::{Ground, NodeSet};
use serde_json::{json, Value};

use crate::format::{write_graph, write_preorder};

fn labels(g: &Ground, s: NodeSet) -> Value {
    json!(g.labels_of(s))
}

pub fn witness(g: &Ground, w: &Witness) -> Value {
    match *w {
        Witness::Sets { a, b, c, d } => json!({
            "a": labels(g, a), "b": labels(g, b), "c": labels(g, c), "d": labels(g, d),
        }),
        Witness::Elementary { i, j, k, c } => json!({
            "i": g.label(i), "j": g.label(j), "k": g.label(k), "c": labels(g, c),
        }),
        Witness::Search { candidates } => json!({ "candidates": candidates }),
    }
}

pub fn violation(g: &Ground, v: &Violation) -> Value {
    json!({ "property": v.axiom.name(), "witness": witness(g, &v.witness) })
}

pub fn report(g: &Ground, r: &CheckReport) -> Value {
    json!({
        "property": r.property.name(),
        "passed": r.passed(),
        "violations": r.violations.iter().map(|v| violation(g, v)).collect::<Vec<_>>(),
        "count": r.count,
    })
}

pub fn verdict(g: &Ground, v: &FaithfulnessVerdict) -> Value {
    json!({
        "graphical": v.graphical,
        "witnesses": v.witnesses.iter().map(write_graph).collect::<Vec<_>>(),
        "preorders": v.preorders.iter().map(write_preorder).collect::<Vec<_>>(),
        "failure": v.failure.as_ref().map(|f| violation(g, f)),
    })
}

pub fn statement(g: &Ground, s: &Statement) -> Value {
    json!({ "a": labels(g, s.a), "b": labels(g, s.b), "c": labels(g, s.c) })
}

/// Every statement once, in the orientation written by
/// [`write_model`](crate::format::write_model).
pub fn model(m: &IndependenceModel) -> Value {
    let g = m.ground();
    json!({
        "nodes": g.labels(),
        "statements": m
            .statements()
            .filter(|s| s.a.first() < s.b.first())
            .map(|s| statement(g, &s))
            .collect::<Vec<_>>(),
    })
}

pub fn classes(r: &GraphClassReport) -> Value {
    let mut obj = serde_json::Map::new();
    for (name, v) in r.flags() {
        obj.insert(name.into(), v.into());
    }
    obj.insert("maximal".into(), r.is_maximal.map_or(Value::Null, Value::Bool));
    Value::Object(obj)
}

pub fn walk(g: &MixedGraph, w: &Walk) -> Value {
    json!({
        "nodes": w.nodes().iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
        "edges": w.edges().iter().map(|&e| {
            let e = g.edge(e);
            format!("{} {} {}", g.label(e.u), e.kind.symbol(), g.label(e.v))
        }).collect::<Vec<_>>(),
    })
}
