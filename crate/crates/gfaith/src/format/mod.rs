//! Plain-text formats for graphs, independence models, preorders and
//! matrices. Every parser reports the line and column of the first problem,
//! and every writer's output parses back to an equal value.

use std::fmt;

pub mod graph;
pub mod matrix;
pub mod model;
pub mod preorder;

pub use graph::{parse_graph, write_graph};
pub use matrix::{parse_matrix, write_matrix};
pub use model::{parse_model, write_model, write_statement};
pub use preorder::{parse_preorder, write_preorder};

/// A located parse failure; lines and columns count from 1.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// A whitespace-separated word with its 1-based column.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub col: usize,
    pub text: &'a str,
}

/// The part of a line before any `#`.
pub(crate) fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code)
}

pub(crate) fn words(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    col: line[..s].chars().count() + 1,
                    text: &line[s..i],
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

/// Characters and words that cannot appear in node labels because the
/// formats use them as syntax.
const RESERVED_CHARS: [char; 4] = [',', '|', '#', '"'];
const RESERVED_WORDS: [&str; 5] = ["--", "->", "<->", "<", "_||_"];

pub(crate) fn check_label(tok: Token<'_>, line: usize) -> Result<(), ParseError> {
    if let Some(c) = tok.text.chars().find(|c| RESERVED_CHARS.contains(c)) {
        return Err(ParseError::new(line, tok.col, format!("`{c}` is not allowed in a node label")));
    }
    if RESERVED_WORDS.contains(&tok.text) || tok.text.contains("_||_") {
        return Err(ParseError::new(line, tok.col, format!("`{}` is not a valid node label", tok.text)));
    }
    Ok(())
}
