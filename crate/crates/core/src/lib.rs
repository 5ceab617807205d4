//! Commuting graphs of finite groups and line-graph recognition.
//!
//! The crate builds the commuting graph Γ(G) of a finite group together
//! with Γ*(G) (identity removed) and Γ**(G) (dominating vertices removed),
//! decides whether a graph is a line graph or the complement of one, and
//! checks the classification of groups whose commuting graphs have these
//! properties over a corpus of small groups.
//!
//! ```
//! use comgraph::{commuting::commuting_graph, group::FiniteGroup, recognition};
//!
//! let s3 = FiniteGroup::symmetric(3).unwrap();
//! let gamma = commuting_graph(&s3);
//! let result = recognition::is_line_graph(gamma.graph());
//! assert!(!result.verdict);
//! ```

pub mod cli;
pub mod commuting;
pub mod graph;
pub mod group;
pub mod harness;
pub mod recognition;
pub mod selector;

pub use commuting::{CommutingGraph, Variant};
pub use graph::SimpleGraph;
pub use group::FiniteGroup;
pub use recognition::{ForbiddenFamily, RecognitionResult};
