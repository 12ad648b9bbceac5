//! Exact interval edge-coloring of small multigraphs.
//!
//! An interval `t`-coloring colors the edges with `1..=t`, uses every color,
//! and gives each vertex a set of incident colors that is a run of
//! consecutive integers. This crate decides interval colorability and the
//! chromatic index exactly, builds subdivisions, star augmentations and line
//! graphs, and checks the parity obstruction for Eulerian multigraphs over
//! exhaustive censuses of small graphs.

pub mod cli;
pub mod coloring;
pub mod enumerator;
pub mod format;
pub mod multigraph;
pub mod solver;

pub use coloring::{Color, EdgeColoring, Spectrum};
pub use enumerator::{EnumerationBounds, EnumerationReport, Harness};
pub use multigraph::{EulerCertificate, Multigraph};
pub use solver::{Reason, Solver, SolverConfig, Verdict};
