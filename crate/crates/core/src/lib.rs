//! Up-color kernels in vertex-colored digraphs.
//!
//! An up-color kernel of a digraph whose vertices carry non-negative integer
//! colors is an independent set `K`, free of color-0 vertices, such that every
//! vertex outside `K` has an arc to some member of `K` with strictly greater
//! color. The crate provides the predicates, an exhaustive oracle, fast
//! deciders for structured families, the graph operations those deciders are
//! stated over, and the correspondence between a digraph and its line digraph.

pub mod constructors;
pub mod digraph;
pub mod error;
pub mod families;
pub mod gen;
pub mod line;
pub mod oracle;
pub mod predicates;
pub mod products;
pub mod shape;

pub use digraph::{Color, ColoredDigraph, Vertex, VertexSet};
pub use error::{Error, Result};
pub use families::{FamilyDecision, Violation};
pub use oracle::{
    count_up_color_kernels, enumerate_classic_kernels, enumerate_up_color_kernels, FailureReason,
    KernelReport, Oracle, Restriction,
};
pub use predicates::{is_independent, is_up_color_absorbent, is_up_color_kernel};
