//! Exact computations with finite truncated simplicial and bisimplicial sets:
//! joins, suspensions, coend realizations, the cubes `Q(i,j)`, the
//! cosimplicial object `W`, coherent nerves, mapping spaces and integer
//! homology.

pub mod bisset;
pub mod coherent;
pub mod error;
pub mod graded;
pub mod homology;
pub mod monotone;
pub mod quasicat;
pub mod realize;
pub mod sset;

pub use error::{Error, Result};
pub use sset::{PointedDirected, SimplicialMap, SimplicialSet};
