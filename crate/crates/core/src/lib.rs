//! Exact graph-parameter laboratory for corona product graphs.
//!
//! The crate constructs corona products, computes distance-k chromatic
//! numbers and a family of domination-type parameters by certified
//! exhaustive search, realizes the constructive witnesses behind the known
//! closed formulas, and ships a theorem-checking harness that compares
//! formulas and bounds against the exact solvers on generated instance
//! families.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod cli;
pub mod coloring;
pub mod config;
pub mod domination;
pub mod error;
pub mod graph;
pub mod harness;

pub use config::SolverCaps;
pub use error::{Error, Result};
