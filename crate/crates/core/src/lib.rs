//! Multigraph invariants around spanning forests: the Tutte polynomial,
//! forest counts, orientation degree and score vectors, and degree sequences
//! of spanning subgraphs, with a harness that checks how these counts relate.

mod cap;
mod decimal;
pub mod degseq;
mod dsu;
pub mod edgelist;
pub mod error;
pub mod generators;
mod gray;
pub mod multigraph;
pub mod orientations;
pub mod tutte;
mod vector;
pub mod verify;

pub use cap::EnumerationCap;
pub use edgelist::{parse_edge_list, to_edge_list};
pub use error::{Error, Result};
pub use multigraph::{Bipartition, Edge, EdgeId, EdgeSubset, Multigraph, Side};
pub use orientations::Orientation;
pub use tutte::{BigCount, TuttePolynomial};
pub use vector::IntVector;
pub use verify::{Verdict, VerifyReport};
