//! File formats, process harness and command-line front end around
//! `fraggen-core`.

pub mod adapter;
pub mod checkpoint;
pub mod cli;
pub mod error;
pub mod estree;
pub mod harness;
pub mod ingest;
pub mod pipeline;
pub mod registry;
pub mod store;

pub use error::{Error, Result};
