//! Exact dimension, containment parameters and planar witnessing-path
//! machinery for finite posets.

pub mod budget;
pub mod cli;
pub mod clique;
pub mod containment;
pub mod dimension;
pub mod embedding;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod layout;
pub mod metrics;
pub mod planarity;
pub mod poset;
pub mod witness;

pub use budget::Budget;
pub use error::{Error, Result};
pub use poset::{LinearExtension, Poset, Realizer};
