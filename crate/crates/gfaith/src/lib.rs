//! Text formats, JSON output, parallel graphicality search and the
//! command-line front end for `gfaith-core`.

pub mod cli;
pub mod format;
pub mod json;
pub mod parallel;

pub use format::ParseError;
pub use parallel::decide_parallel;
