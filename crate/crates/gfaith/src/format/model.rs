//! `a _||_ b | c d` and `a,b _||_ c,d | e`, one statement per line, with an
//! optional `nodes ...` line fixing the ground and its order.

use gfaith_core::model::{IndependenceModel, Statement};
use gfaith_core::nodeset::{Ground, NodeSet};

use super::{check_label, strip_comment, ParseError, Token};

const SEP: &str = "_||_";

/// Splits on whitespace and commas, keeping `_||_` and `|` as tokens.
fn lex<'a>(line: &'a str) -> Vec<Token<'a>> {
    let mut out = Vec::new();
    let col = |i: usize| line[..i].chars().count() + 1;
    let mut i = 0;
    let mut start: Option<usize> = None;
    let flush = |start: &mut Option<usize>, end: usize, out: &mut Vec<Token<'a>>| {
        if let Some(s) = start.take() {
            out.push(Token {
                col: col(s),
                text: &line[s..end],
            });
        }
    };
    while i < line.len() {
        let rest = &line[i..];
        let c = rest.chars().next().expect("non-empty");
        if rest.starts_with(SEP) {
            flush(&mut start, i, &mut out);
            out.push(Token { col: col(i), text: SEP });
            i += SEP.len();
        } else if c == '|' {
            flush(&mut start, i, &mut out);
            out.push(Token { col: col(i), text: "|" });
            i += 1;
        } else if c.is_whitespace() || c == ',' {
            flush(&mut start, i, &mut out);
            i += c.len_utf8();
        } else {
            start.get_or_insert(i);
            i += c.len_utf8();
        }
    }
    flush(&mut start, line.len(), &mut out);
    out
}

struct Line<'a> {
    no: usize,
    a: Vec<Token<'a>>,
    b: Vec<Token<'a>>,
    c: Vec<Token<'a>>,
}

fn split_statement<'a>(no: usize, toks: &[Token<'a>]) -> Result<Line<'a>, ParseError> {
    let sep = toks
        .iter()
        .position(|t| t.text == SEP)
        .ok_or_else(|| ParseError::new(no, toks[0].col, "expected `A _||_ B | C`"))?;
    let (a, rest) = (&toks[..sep], &toks[sep + 1..]);
    let bar = rest.iter().position(|t| t.text == "|");
    let (b, c) = match bar {
        Some(k) => (&rest[..k], &rest[k + 1..]),
        None => (rest, &[][..]),
    };
    if a.is_empty() {
        return Err(ParseError::new(no, toks[sep].col, "empty left-hand set"));
    }
    if b.is_empty() {
        let col = rest.first().map_or(toks[sep].col + SEP.len(), |t| t.col);
        return Err(ParseError::new(no, col, "empty right-hand set"));
    }
    for t in a.iter().chain(b).chain(c) {
        if t.text == SEP || t.text == "|" {
            return Err(ParseError::new(no, t.col, format!("unexpected `{}`", t.text)));
        }
        check_label(*t, no)?;
    }
    Ok(Line {
        no,
        a: a.to_vec(),
        b: b.to_vec(),
        c: c.to_vec(),
    })
}

pub fn parse_model(text: &str) -> Result<IndependenceModel, ParseError> {
    let mut fixed: Option<Ground> = None;
    let mut lines = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let no = no + 1;
        let toks = lex(strip_comment(raw));
        match toks.first() {
            None => {}
            Some(t) if t.text == "nodes" => {
                if fixed.is_some() {
                    return Err(ParseError::new(no, t.col, "only one `nodes` line is allowed"));
                }
                if !lines.is_empty() {
                    return Err(ParseError::new(no, t.col, "`nodes` must come before any statement"));
                }
                let mut g = Ground::default();
                for t in &toks[1..] {
                    check_label(*t, no)?;
                    g.push(t.text.to_string()).map_err(|e| ParseError::new(no, t.col, e.to_string()))?;
                }
                fixed = Some(g);
            }
            Some(_) => lines.push(split_statement(no, &toks)?),
        }
    }
    let ground = match fixed {
        Some(g) => g,
        None => {
            let mut g = Ground::default();
            for l in &lines {
                for t in l.a.iter().chain(&l.b).chain(&l.c) {
                    g.intern(t.text).map_err(|e| ParseError::new(l.no, t.col, e.to_string()))?;
                }
            }
            g
        }
    };
    let mut m = IndependenceModel::empty(ground).map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    for l in &lines {
        let set = |toks: &[Token<'_>]| -> Result<NodeSet, ParseError> {
            let mut s = NodeSet::EMPTY;
            for t in toks {
                let i = m
                    .ground()
                    .require(t.text)
                    .map_err(|e| ParseError::new(l.no, t.col, e.to_string()))?;
                s.insert(i);
            }
            Ok(s)
        };
        let (a, b, c) = (set(&l.a)?, set(&l.b)?, set(&l.c)?);
        let col = l.a[0].col;
        let s = Statement::new(a, b, c)
            .map_err(|_| ParseError::new(l.no, col, "the three sets of a statement must be disjoint"))?;
        m.insert(s).map_err(|e| ParseError::new(l.no, col, e.to_string()))?;
    }
    Ok(m)
}

/// `A _||_ B | C` with set members separated by commas and the
/// conditioning set by spaces.
pub fn write_statement(g: &Ground, s: &Statement) -> String {
    let mut out = format!("{} {SEP} {}", g.labels_of(s.a).join(","), g.labels_of(s.b).join(","));
    if !s.c.is_empty() {
        out.push_str(" | ");
        out.push_str(&g.labels_of(s.c).join(" "));
    }
    out
}

/// A `nodes` line, then each statement once (mirror images are implied),
/// elementary statements first.
pub fn write_model(m: &IndependenceModel) -> String {
    let g = m.ground();
    let mut out = String::from("nodes");
    for l in g.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    let canonical: Vec<Statement> = m.statements().collect();
    for elementary in [true, false] {
        for s in canonical.iter().filter(|s| s.is_elementary() == elementary) {
            out.push_str(&write_statement(g, s));
            out.push('\n');
        }
    }
    out
}
