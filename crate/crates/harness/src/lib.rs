//! Generators, lemma verification, file formats and the `tsr` command line
//! on top of `tsr_core`.

pub mod cli;
pub mod dot;
pub mod error;
pub mod gen;
pub mod json;
pub mod sweep;
pub mod verify;

pub use error::{HResult, HarnessError};
