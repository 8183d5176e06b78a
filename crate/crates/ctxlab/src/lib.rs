//! ctxlab analyzes finite quantum-logic hypergraphs with exact arithmetic:
//! chromatic numbers with exhaustive certificates, two-valued states and
//! their separability, aggregation of colorings into (fractional) states,
//! orthogonal vector realizations, and Boole-Bell-type inequalities by
//! facet enumeration of correlation polytopes.
//!
//! Start from the built-in [`catalog`](catalog::catalog) or parse a logic
//! from the line-oriented text format in [`dsl`]. The `examples/` directory
//! has one runnable example per capability.

pub mod catalog;
pub mod coloring;
pub mod dsl;
pub mod export;
pub mod hypergraph;
pub mod polytope;
pub mod realization;
pub mod state;

pub use catalog::{catalog, LogicBundle};
pub use hypergraph::{Hypergraph, VertexId};
