//! `node A`, `A -- B`, `A -> B` and `A <-> B`, one item per line.

use gfaith_core::graph::{EdgeKind, MixedGraph};
use gfaith_core::nodeset::Ground;

use super::{check_label, strip_comment, words, ParseError};

pub fn parse_graph(text: &str) -> Result<MixedGraph, ParseError> {
    let mut g = MixedGraph::new(Ground::default());
    let mut declared = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let toks = words(strip_comment(raw));
        match toks.as_slice() {
            [] => {}
            [kw, name] if kw.text == "node" => {
                check_label(*name, ln)?;
                if declared.iter().any(|d: &String| d == name.text) {
                    return Err(ParseError::new(ln, name.col, format!("node `{}` is declared twice", name.text)));
                }
                declared.push(name.text.to_string());
                g.add_node_if_absent(name.text)
                    .map_err(|e| ParseError::new(ln, name.col, e.to_string()))?;
            }
            [kw, ..] if kw.text == "node" => {
                return Err(ParseError::new(ln, kw.col, "expected `node <label>`"));
            }
            [a, op, b] => {
                let kind = EdgeKind::from_symbol(op.text).ok_or_else(|| {
                    ParseError::new(ln, op.col, format!("unknown edge `{}`; expected `--`, `->` or `<->`", op.text))
                })?;
                check_label(*a, ln)?;
                check_label(*b, ln)?;
                if a.text == b.text {
                    return Err(ParseError::new(ln, b.col, format!("loop at `{}`", a.text)));
                }
                let u = g.add_node_if_absent(a.text).map_err(|e| ParseError::new(ln, a.col, e.to_string()))?;
                let v = g.add_node_if_absent(b.text).map_err(|e| ParseError::new(ln, b.col, e.to_string()))?;
                g.add_edge(u, v, kind).map_err(|e| ParseError::new(ln, a.col, e.to_string()))?;
                g.check_multi_edges().map_err(|e| ParseError::new(ln, op.col, e.to_string()))?;
            }
            [first, ..] => {
                return Err(ParseError::new(
                    ln,
                    first.col,
                    "expected `node <label>` or `<label> <edge> <label>`",
                ));
            }
        }
    }
    Ok(g)
}

/// Every node as a `node` line in ground order, then every edge in
/// insertion order.
pub fn write_graph(g: &MixedGraph) -> String {
    let mut out = String::new();
    for l in g.ground().labels() {
        out.push_str("node ");
        out.push_str(l);
        out.push('\n');
    }
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", g.label(e.u), e.kind.symbol(), g.label(e.v)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_edge_kinds() {
        let g = parse_graph("# demo\nnode z\na -- b\nb -> c  # trailing\nc <-> a\n\n").unwrap();
        assert_eq!(g.ground().labels(), &["z", "a", "b", "c"]);
        assert_eq!(g.edges().len(), 3);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn multi_edges_follow_the_chain_rule() {
        assert!(parse_graph("a <-> b\na -- b\n").is_ok());
        let e = parse_graph("a -> b\na -- b\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert!(e.message.contains("multi-edge"), "{e}");
    }

    #[test]
    fn diagnostics_are_located() {
        let e = parse_graph("node a\n  a => b\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_graph("node a\nnode a\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 6));
        let e = parse_graph("a -- a").unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_graph("a,b -- c").unwrap_err();
        assert_eq!(e.column, 1);
    }
}
