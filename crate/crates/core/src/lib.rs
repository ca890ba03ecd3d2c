//! Matchstick graphs on the plane: validation, face structure, exact edge
//! bounds, the hexagonal spiral construction and an exhaustive lattice
//! search.

pub mod analysis;
pub mod bounds;
pub mod construct;
pub mod corpus;
pub mod exec;
pub mod geometry;
pub mod io;
pub mod planegraph;
pub mod search;
pub mod svg;

pub use exec::Exec;
pub use geometry::{LatticePoint, PlanePoint, Tolerance};
pub use planegraph::{validate, EmbeddedGraph, MatchstickGraph};
