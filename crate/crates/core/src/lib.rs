//! SuperHyperGraph machinery: nested supervertices and superedges, expansion
//! to flat hypergraphs, spectral convolution networks, uncertain-membership
//! graph networks, random walks, multilevel partitioning and small exhaustive
//! combinatorial oracles.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod io;
pub mod kmeans;
pub mod linalg;
pub mod partition;
pub mod rng;
pub mod shgnn;
pub mod structures;
pub mod uncertain;
pub mod walk;

pub use error::{Error, Result};
