//! Recognition of acyclic hypergraph classes (α, β, γ, interval, hypertree)
//! and fast construction of their subset graphs and union join graphs.

pub mod bachman;
pub mod bench;
pub mod error;
pub mod generators;
pub mod hgfile;
pub mod hypergraph;
pub mod jointree;
pub mod oracle;
pub mod orderings;
pub mod recognition;
pub mod sperner;
pub mod subset;
pub mod unionjoin;

pub use error::{Error, Result};
pub use hypergraph::{Components, DirectedGraph, Hypergraph, UndirectedGraph};
pub use jointree::{
    build_join_tree, canonical_join_tree, canonicalize, separator_hypergraph, verify_join_tree, CanonicalJoinTree,
    JoinTree, Separator, SeparatorHypergraph, NO_PARENT,
};
