//! Exact metric dimension, zero forcing number and path cover number of small
//! graphs, closed forms for trees, constructions for unicyclic graphs, and a
//! sweep engine that checks the known inequalities between these parameters
//! over generated corpora.

pub mod bits;
pub mod canon;
pub mod checks;
pub mod enumerate;
pub mod error;
pub mod even_cycle;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod io;
pub mod pathcover;
pub mod profile;
pub mod report;
pub mod resolve;
pub mod suite;
pub mod sweep;
pub mod tree;
pub mod unicyclic;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, GraphClass, Vertex};
