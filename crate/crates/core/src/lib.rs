//! Exact combinatorics for longest paths and cycles in k-connected graphs:
//! enumeration, vertex connectivity with witnesses, pairwise intersection
//! bounds, the universal-vertex reduction, and the structural machinery
//! behind the intersection theorems.

pub mod claims;
pub mod connectivity;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod intersect;
pub mod reduction;
pub mod report;
pub mod solve;

pub use error::Error;
pub use graph::{Cycle, Graph, Path};
