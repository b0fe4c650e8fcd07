//! Cycle packings through a common vertex in digraphs, with the machinery
//! around them: Menger-style disjoint path families and separators, density
//! recursion for extracting well-connected subdigraphs, k-linked sets and
//! havens as directed tree-width certificates, generators for walls,
//! blow-ups and random regular digraphs, and closed-form degree bounds.
//!
//! All verification-grade arithmetic on thresholds is exact rational; no
//! floating point decides any comparison.

pub mod bounds;
pub mod constructions;
pub mod cycles;
pub mod density;
pub mod digraph;
pub mod dtw;
pub mod edgelist;
pub mod menger;
pub mod rational;
pub mod undirected;
pub mod witness;
pub(crate) mod util;

pub use digraph::{Digraph, GraphError, VertexSet};
pub use undirected::UndirectedGraph;
