//! Orientations of small diameter for bridgeless graphs: graph primitives,
//! extremal constructions, constructive orientation with verified bounds, and
//! exhaustive oracles for small orders.

pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod orient;

pub use error::{Error, Result};
pub use graph::{Distance, Orientation, UndirectedGraph};
