//! Defective 2-colouring of girth-5 graphs on surfaces: embedded graphs,
//! the discharging argument as an executable audit, and a constructive
//! (1, t)-colourer.

pub mod batch;
pub mod colorer;
pub mod coloring;
pub mod discharge;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod io;

pub use coloring::{Coloring, DefectVector, SolveResult};
pub use graph::{Adjacency, EmbeddedGraph, GraphError, Neighbor, SimpleGraph};
