//! Core engine for fragment-based ECMAScript test generation.
//!
//! The crate is `no_std` (it needs `alloc`): every IO concern, file format and
//! process interaction lives in the `fraggen` companion crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod ast;
pub mod error;
pub mod fragment;
pub mod generate;
pub mod nnlm;
pub mod normalize;
pub mod print;
pub mod resolve;
pub mod suggest;
#[cfg(test)]
mod test_corpus;

pub use ast::{AstNode, NodeKind, Slot, Value};
pub use error::Error;
pub use fragment::{Fragment, FragmentId, FragmentSequence, Vocabulary};
