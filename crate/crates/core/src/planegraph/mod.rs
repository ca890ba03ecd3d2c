//! Combinatorial plane structure of a validated drawing: faces, blocks,
//! boundary cycle, and the structural identities and inequalities built on
//! them.

use thiserror::Error;

mod blocks;
mod boundary;
mod checks;
mod faces;
mod graph;
mod split;

pub use blocks::{blocks, BlockDecomposition};
pub use boundary::{boundary_angles, boundary_peel, boundary_profile, BoundaryAngles, BoundaryProfile, PeelResult};
pub use checks::{
    angle_sum_check, double_count_check, double_count_terms, euler_check, inequality_two_check, inequality_two_terms,
    isoperimetric_check, isoperimetric_terms, DoubleCount, InequalityTwo, Isoperimetric, ANGLE_SUM_REL_TOL,
};
pub use faces::{extract_faces, FaceReport};
pub use graph::{validate, EmbeddedGraph, GraphError, MatchstickGraph, ValidationError, Violation};
pub use split::{split_at_cut_vertex, split_at_pair, Split};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneGraphError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("outer cycle has chord {0}-{1}")]
    HasChord(usize, usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("removing {0:?} does not disconnect the graph")]
    NotASeparator(Vec<usize>),
}

#[cfg(test)]
mod tests;
