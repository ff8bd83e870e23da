//! Independent-set reconfiguration under token sliding on chordal graphs.
//!
//! Graph substrate, chordal structure, an exact sliding engine, brute-force
//! source solvers and the gadget compilers live here; IO and the command line
//! are in the companion `tsr-harness` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bits;
pub mod chordal;
pub mod combinatorics;
pub mod engine;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod reductions;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
