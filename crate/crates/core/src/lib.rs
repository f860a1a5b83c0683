//! Algebraic connectivity and clique number of simple graphs.
//!
//! The crate is `no_std` (with `alloc`) and contains everything that is pure
//! computation: graph construction and structure queries, the graph6 codec,
//! a dense Jacobi eigensolver for Laplacians, exact maximum clique, the
//! α/ω bounds, the pendant-path rewrites and the exhaustive small-order
//! scanners that certify the extremal results. IO, parallel scan drivers and
//! the command line live in the `algconn` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod clique;
mod error;
pub mod graph;
pub mod graph6;
pub mod scan;
pub mod spectra;
pub mod transforms;

pub use error::{Error, Graph6Error, Result};
pub use graph::{Graph, GraphCode, TailedCliqueSpec};
