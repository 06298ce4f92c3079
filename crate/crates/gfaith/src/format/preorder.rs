//! `class a b c` lines declare equivalence classes and `order X < Y < ...`
//! lines place classes below one another. A token in an `order` line names
//! a node (standing for its class) or, failing that, a 0-based class index.
//! An optional leading `nodes ...` line fixes the order of the ground.

use gfaith_core::nodeset::{Ground, NodeSet};
use gfaith_core::preorder::Preorder;

use super::{check_label, strip_comment, words, ParseError, Token};

pub fn parse_preorder(text: &str) -> Result<Preorder, ParseError> {
    let mut fixed: Option<Ground> = None;
    let mut ground = Ground::default();
    let mut classes: Vec<(usize, Vec<Token<'_>>)> = Vec::new();
    let mut orders: Vec<(usize, Vec<Token<'_>>)> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let no = no + 1;
        let toks = words(strip_comment(raw));
        let Some(kw) = toks.first() else { continue };
        match kw.text {
            "nodes" => {
                if fixed.is_some() || !classes.is_empty() || !orders.is_empty() {
                    return Err(ParseError::new(no, kw.col, "`nodes` must be the first line"));
                }
                let mut g = Ground::default();
                for t in &toks[1..] {
                    check_label(*t, no)?;
                    g.push(t.text.to_string()).map_err(|e| ParseError::new(no, t.col, e.to_string()))?;
                }
                fixed = Some(g);
            }
            "class" => {
                if toks.len() == 1 {
                    return Err(ParseError::new(no, kw.col, "a class needs at least one node"));
                }
                for t in &toks[1..] {
                    check_label(*t, no)?;
                    if classes.iter().flat_map(|(_, c)| c).any(|u| u.text == t.text) {
                        return Err(ParseError::new(no, t.col, format!("node `{}` is in two classes", t.text)));
                    }
                    if let Some(g) = &fixed {
                        g.require(t.text).map_err(|e| ParseError::new(no, t.col, e.to_string()))?;
                    } else {
                        ground.push(t.text.to_string()).map_err(|e| ParseError::new(no, t.col, e.to_string()))?;
                    }
                }
                classes.push((no, toks[1..].to_vec()));
            }
            "order" => orders.push((no, toks[1..].to_vec())),
            other => {
                return Err(ParseError::new(
                    no,
                    kw.col,
                    format!("expected `nodes`, `class` or `order`, found `{other}`"),
                ))
            }
        }
    }
    let ground = fixed.unwrap_or(ground);
    let sets: Vec<NodeSet> = classes
        .iter()
        .map(|(_, c)| c.iter().map(|t| ground.index_of(t.text).expect("checked")).collect())
        .collect();
    let declared = sets.iter().fold(NodeSet::EMPTY, |a, &s| a.union(s));
    if let Some(missing) = ground.all().difference(declared).first() {
        return Err(ParseError::new(
            1,
            1,
            format!("node `{}` is not in any class", ground.label(missing)),
        ));
    }
    let class_of = |t: &Token<'_>, no: usize| -> Result<usize, ParseError> {
        if let Some(i) = ground.index_of(t.text) {
            return Ok(sets.iter().position(|s| s.contains(i)).expect("every node declared"));
        }
        match t.text.parse::<usize>() {
            Ok(k) if k < sets.len() => Ok(k),
            _ => Err(ParseError::new(no, t.col, format!("`{}` is neither a node nor a class index", t.text))),
        }
    };
    let mut less = Vec::new();
    for (no, toks) in &orders {
        let no = *no;
        if toks.len() < 3 || toks.len() % 2 == 0 {
            let col = toks.first().map_or(1, |t| t.col);
            return Err(ParseError::new(no, col, "expected `order X < Y`"));
        }
        for w in toks.chunks(2).collect::<Vec<_>>().windows(2) {
            let (x, op, y) = (&w[0][0], &w[0][1], &w[1][0]);
            if op.text != "<" {
                return Err(ParseError::new(no, op.col, format!("expected `<`, found `{}`", op.text)));
            }
            let (cx, cy) = (class_of(x, no)?, class_of(y, no)?);
            if cx == cy {
                return Err(ParseError::new(no, y.col, "a class cannot lie below itself"));
            }
            less.push((cx, cy));
        }
        Preorder::from_classes(ground.clone(), &sets, &less).map_err(|e| ParseError::new(no, toks[0].col, e.to_string()))?;
    }
    Preorder::from_classes(ground, &sets, &less).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// A `nodes` line, the classes of the quotient, and one `order` line per
/// strictly related pair of classes, naming each class by its first member.
pub fn write_preorder(p: &Preorder) -> String {
    let g = p.ground();
    let q = p.quotient();
    let mut out = String::from("nodes");
    for l in g.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    let classes: Vec<NodeSet> = (0..q.len())
        .map(|c| (0..p.n()).filter(|&v| q.class_index(v) == Some(c)).collect())
        .collect();
    for c in &classes {
        out.push_str("class ");
        out.push_str(&g.labels_of(*c).join(" "));
        out.push('\n');
    }
    let rep = |c: usize| g.label(classes[c].first().expect("non-empty class"));
    for x in 0..q.len() {
        for y in q.strictly_above(x).iter() {
            out.push_str(&format!("order {} < {}\n", rep(x), rep(y)));
        }
    }
    out
}
