//! Signed edge domination on complete tripartite graphs K(m,n,p).
//!
//! - [`graph`]: the graph, ±1 edge labelings and the dominating-function verifier.
//! - [`oracle`]: closed-form values with case dispatch and conflict reporting.
//! - [`constructor`]: explicit minimum-weight labelings from per-vertex quotas.
//! - [`solver`]: exact branch-and-bound search for small instances.
//! - [`harness`]: sweeps and conjecture audits behind the CLI.

pub mod error;
pub mod graph;
pub mod oracle;
pub mod constructor;
pub mod solver;
pub mod harness;

pub use error::{Result, SednError};
pub use graph::{EdgeLabeling, TripartiteParams};
