//! Independence models, separation in mixed graphs, preorders, and exact
//! decisions of Markovness and faithfulness.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod faithfulness;
pub mod gaussian;
pub mod graph;
pub mod model;
pub mod nodeset;
pub mod preorder;

pub use error::{Error, GroundError, Result};
pub use faithfulness::{decide_graphical, is_faithful, ClassFilter, FaithfulnessVerdict};
pub use gaussian::{RationalMatrix, Role};
pub use graph::{EdgeKind, Mark, MixedGraph};
pub use model::{CheckReport, IndependenceModel, Property, Statement};
pub use nodeset::{Ground, NodeSet};
pub use preorder::Preorder;
