//! Short rainbow cycles in edge-coloured graphs.
//!
//! * [`graph`]: edge-coloured multigraphs, digraphs, subgraphs and cycle
//!   certificates.
//! * [`oracle`]: exact rainbow girth, girth, directed girth and maximum stable
//!   set.
//! * [`excess`]: vertex-minimal excess-k subgraphs and their short cycles.
//! * [`short_cycle`]: a rainbow cycle of length at most `4n/9 + 7` when every
//!   colour class has three edges.
//! * [`instances`]: the digraph reduction, extremal and random instances.
//! * [`harness`] and [`cli`]: randomized checks and the `rainbow` command.

pub mod cli;
pub mod error;
pub mod excess;
pub mod format;
pub mod graph;
pub mod harness;
pub mod instances;
pub mod oracle;
pub mod rng;
pub mod short_cycle;

pub use error::{Error, Result, TheoremViolation};
pub use graph::{CycleCertificate, Digraph, Edge, EdgeColouredGraph, Subgraph};
