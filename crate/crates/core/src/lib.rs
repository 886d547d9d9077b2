//! Exact verification engine for combinatorial certificates about the
//! (2,4,5) triangle Coxeter group `W = ⟨r, s, t⟩`.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computation; file formats, reports and the command line live in the
//! `tricox` companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod coxeter;
pub mod disc;
pub mod edge_type;
pub mod field;
pub mod graph;
pub mod implication;
pub mod certificates;
pub mod pentagon;

pub use coxeter::{GroupElement, Generator, ParabolicId, Word};
pub use edge_type::{EdgeTypeKey, Endpoint};
pub use field::FieldElement;
pub use graph::{CosetMode, Distance, GraphSlab, Vertex};
