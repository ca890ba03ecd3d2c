//! JSON graph files.
//!
//! ```json
//! {"vertices": [[0, 0], [1, 0]], "edges": [[0, 1]], "tolerance": 1e-9}
//! {"lattice": [[0, 0], [1, 0]], "edges": [[0, 1]]}
//! ```
//!
//! When `lattice` is present it defines the positions and `vertices` may be
//! omitted; if both are given they must have the same length.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{LatticePoint, PlanePoint, Tolerance, ToleranceError};
use crate::planegraph::{EmbeddedGraph, GraphError};

#[derive(Debug, Error)]
pub enum GraphFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed graph file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("graph file has neither vertices nor lattice")]
    NoVertices,
    #[error("lattice has {lattice} points but vertices has {vertices}")]
    LengthMismatch { lattice: usize, vertices: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tolerance(#[from] ToleranceError),
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<[f64; 2]>>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<[i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl GraphFile {
    pub fn from_lattice(points: &[LatticePoint], edges: &[(usize, usize)]) -> Self {
        Self {
            vertices: None,
            edges: edges.iter().map(|&(i, j)| [i, j]).collect(),
            lattice: Some(points.iter().map(|p| [p.a, p.b]).collect()),
            tolerance: None,
        }
    }

    /// Lattice form when every vertex has exact coordinates, cartesian
    /// otherwise.
    pub fn from_graph(g: &EmbeddedGraph) -> Self {
        let edges = g.edges().iter().map(|&(i, j)| [i, j]).collect();
        if g.is_exact() {
            let lattice = g.vertices().iter().map(|p| p.exact.map(|q| [q.a, q.b]).expect("exact")).collect();
            Self { vertices: None, edges, lattice: Some(lattice), tolerance: None }
        } else {
            let vertices = g.vertices().iter().map(|p| [p.x, p.y]).collect();
            Self { vertices: Some(vertices), edges, lattice: None, tolerance: None }
        }
    }

    pub fn parse(text: &str) -> Result<Self, GraphFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, GraphFileError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| GraphFileError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph files always serialize")
    }

    pub fn write(&self, path: &Path) -> Result<(), GraphFileError> {
        std::fs::write(path, self.to_json() + "\n")
            .map_err(|source| GraphFileError::Io { path: path.display().to_string(), source })
    }

    pub fn to_graph(&self) -> Result<EmbeddedGraph, GraphFileError> {
        let vertices: Vec<PlanePoint> = match (&self.lattice, &self.vertices) {
            (Some(l), Some(v)) if l.len() != v.len() => {
                return Err(GraphFileError::LengthMismatch { lattice: l.len(), vertices: v.len() })
            }
            (Some(l), _) => l.iter().map(|&[a, b]| LatticePoint::new(a, b).into()).collect(),
            (None, Some(v)) => v.iter().map(|&[x, y]| PlanePoint::new(x, y)).collect(),
            (None, None) => return Err(GraphFileError::NoVertices),
        };
        Ok(EmbeddedGraph::new(vertices, self.edges.iter().map(|&[i, j]| (i, j)))?)
    }

    /// The file's own tolerance, if any, else `fallback`.
    pub fn tolerance_or(&self, fallback: Tolerance) -> Result<Tolerance, GraphFileError> {
        match self.tolerance {
            Some(eps) => Ok(Tolerance::new(eps)?),
            None => Ok(fallback),
        }
    }
}
