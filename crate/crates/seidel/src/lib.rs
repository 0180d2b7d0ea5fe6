//! Seidel switching on strongly regular graphs.
//!
//! A strongly regular graph with v = 2(k - theta1) sits in the switching
//! class of a regular two-graph; switching it by a subset H yields another
//! strongly regular graph exactly when the subgraph induced by H is
//! k - (v-h)/2 regular, and one with shifted parameters exactly when H has
//! size v/2 and induces a (k - mu)-regular subgraph. This crate implements
//! those predicates together with the machinery around them: exact SRG
//! verification, Seidel matrices and two-graphs, exact-rational spherical
//! embeddings with design certification, canonical forms with isomorph
//! rejection, and an iterated switching closure search.
//!
//! All arithmetic is exact (integers and rationals); floating point is not
//! used anywhere in the library.

pub mod canon;
pub mod catalog;
pub mod cli;
pub mod embedding;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod srg;
pub mod switching;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, DEFAULT_VERTEX_CAP};
pub use srg::{derive_spectrum, verify_srg, SrgClass, SrgParams, SrgSpectrum};
