use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{is_unit_length, same_point, segments_properly_cross, LatticePoint, PlanePoint, Tolerance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} references vertex {index}, but there are only {vertex_count} vertices")]
    IndexOutOfRange { edge: usize, index: usize, vertex_count: usize },
    #[error("edge {edge} is a loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {0}-{1} is listed more than once")]
    DuplicateEdge(usize, usize),
}

/// Vertices with plane coordinates and an undirected edge list, before any
/// geometric validation.
///
/// Edges are stored as `(min, max)` pairs in input order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbeddedGraph {
    vertices: Vec<PlanePoint>,
    edges: Vec<(usize, usize)>,
}

impl EmbeddedGraph {
    pub fn new(vertices: Vec<PlanePoint>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let n = vertices.len();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (k, (i, j)) in edges.into_iter().enumerate() {
            for index in [i, j] {
                if index >= n {
                    return Err(GraphError::IndexOutOfRange { edge: k, index, vertex_count: n });
                }
            }
            if i == j {
                return Err(GraphError::SelfLoop { edge: k, vertex: i });
            }
            let e = (i.min(j), i.max(j));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            out.push(e);
        }
        Ok(Self { vertices, edges: out })
    }

    pub fn from_lattice(
        points: &[LatticePoint],
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::new(points.iter().map(|&p| PlanePoint::from(p)).collect(), edges)
    }

    pub fn vertices(&self) -> &[PlanePoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True when every vertex carries lattice coordinates.
    pub fn is_exact(&self) -> bool {
        self.vertices.iter().all(|p| p.exact.is_some())
    }

    /// Neighbour lists, each sorted by vertex index.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Subgraph induced by `keep`, with vertices renumbered in the order of
    /// `keep`. Returns the graph and the old index of each new vertex.
    pub fn induced(&self, keep: &[usize]) -> (EmbeddedGraph, Vec<usize>) {
        let mut new_index = HashMap::with_capacity(keep.len());
        for (new, &old) in keep.iter().enumerate() {
            new_index.insert(old, new);
        }
        let vertices = keep.iter().map(|&v| self.vertices[v]).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(i, j)| Some((*new_index.get(&i)?, *new_index.get(&j)?)))
            .map(|(i, j)| (i.min(j), i.max(j)))
            .collect();
        (EmbeddedGraph { vertices, edges }, keep.to_vec())
    }

    /// Applies a rigid motion (rotation by `angle` then translation) and
    /// drops exact lattice coordinates.
    pub fn transformed(&self, angle: f64, dx: f64, dy: f64) -> EmbeddedGraph {
        let (s, c) = angle.sin_cos();
        let vertices = self
            .vertices
            .iter()
            .map(|p| PlanePoint::new(c * p.x - s * p.y + dx, s * p.x + c * p.y + dy))
            .collect();
        EmbeddedGraph { vertices, edges: self.edges.clone() }
    }
}

/// One reason a drawing is not a matchstick graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Violation {
    NonUnitEdge { edge: (usize, usize), length: f64 },
    EdgesCross { first: (usize, usize), second: (usize, usize) },
    DuplicateVertices { first: usize, second: usize, distance: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonUnitEdge { edge: (i, j), length } => {
                write!(f, "NonUnitEdge {i} {j} length={length:.12}")
            }
            Violation::EdgesCross { first: (i, j), second: (k, l) } => {
                write!(f, "EdgesCross {i}-{j} {k}-{l}")
            }
            Violation::DuplicateVertices { first, second, distance } => {
                write!(f, "DuplicateVertices {first} {second} distance={distance:.3e}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{} violation(s), first: {}", .violations.len(), .violations[0])]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

/// A drawing that passed [`validate`]: unit edges, no crossings, distinct
/// vertices. Also carries its rotation system.
#[derive(Clone, Debug)]
pub struct MatchstickGraph {
    graph: EmbeddedGraph,
    tol: Tolerance,
    rotation: Vec<Vec<usize>>,
}

impl MatchstickGraph {
    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn point(&self, v: usize) -> &PlanePoint {
        &self.graph.vertices[v]
    }

    /// Neighbours of `v` in counterclockwise angular order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn into_graph(self) -> EmbeddedGraph {
        self.graph
    }

    /// Angle of the edge `v → w` in `(-π, π]`.
    pub fn direction(&self, v: usize, w: usize) -> f64 {
        let (p, q) = (self.point(v), self.point(w));
        (q.y - p.y).atan2(q.x - p.x)
    }
}

fn cell(x: f64, y: f64, size: f64) -> (i64, i64) {
    ((x / size).floor() as i64, (y / size).floor() as i64)
}

fn neighbor_cells((cx, cy): (i64, i64)) -> impl Iterator<Item = (i64, i64)> {
    (-1..=1).flat_map(move |dx| (-1..=1).map(move |dy| (cx + dx, cy + dy)))
}

/// Checks every matchstick condition and reports all violations at once.
///
/// Candidate pairs for the duplicate and crossing tests come from a uniform
/// grid, so valid inputs cost roughly linear time.
pub fn validate(g: EmbeddedGraph, tol: Tolerance) -> Result<MatchstickGraph, ValidationError> {
    let mut violations = Vec::new();
    let pts = &g.vertices;

    let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (i, p) in pts.iter().enumerate() {
        buckets.entry(cell(p.x, p.y, 1.0)).or_default().push(i);
    }
    for (i, p) in pts.iter().enumerate() {
        for c in neighbor_cells(cell(p.x, p.y, 1.0)) {
            for &j in buckets.get(&c).into_iter().flatten() {
                if j > i && same_point(p, &pts[j], tol) {
                    violations.push(Violation::DuplicateVertices { first: i, second: j, distance: p.distance(&pts[j]) });
                }
            }
        }
    }

    let mut max_len: f64 = 1.0;
    for &(i, j) in &g.edges {
        let length = pts[i].distance(&pts[j]);
        max_len = max_len.max(length);
        if !is_unit_length(&pts[i], &pts[j], tol) {
            violations.push(Violation::NonUnitEdge { edge: (i, j), length });
        }
    }

    // Two crossing segments have midpoints at most max_len apart.
    let size = max_len + 2.0 * tol.eps();
    let midpoint = |&(i, j): &(usize, usize)| ((pts[i].x + pts[j].x) / 2.0, (pts[i].y + pts[j].y) / 2.0);
    let mut edge_buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (k, e) in g.edges.iter().enumerate() {
        let (x, y) = midpoint(e);
        edge_buckets.entry(cell(x, y, size)).or_default().push(k);
    }
    let mut crossings = Vec::new();
    for (k, e) in g.edges.iter().enumerate() {
        let (x, y) = midpoint(e);
        for c in neighbor_cells(cell(x, y, size)) {
            for &l in edge_buckets.get(&c).into_iter().flatten() {
                if l <= k {
                    continue;
                }
                let f = g.edges[l];
                if segments_properly_cross((&pts[e.0], &pts[e.1]), (&pts[f.0], &pts[f.1]), tol) {
                    crossings.push((e.min(&f).to_owned(), e.max(&f).to_owned()));
                }
            }
        }
    }
    crossings.sort_unstable();
    violations.extend(crossings.into_iter().map(|(first, second)| Violation::EdgesCross { first, second }));

    if !violations.is_empty() {
        return Err(ValidationError { violations });
    }

    let mut rotation = g.adjacency();
    for (v, list) in rotation.iter_mut().enumerate() {
        let p = pts[v];
        list.sort_by(|&a, &b| {
            let ta = (pts[a].y - p.y).atan2(pts[a].x - p.x);
            let tb = (pts[b].y - p.y).atan2(pts[b].x - p.x);
            ta.total_cmp(&tb)
        });
    }
    Ok(MatchstickGraph { graph: g, tol, rotation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::HALF_SQRT3;

    fn float_graph(coords: &[(f64, f64)], edges: &[(usize, usize)]) -> EmbeddedGraph {
        EmbeddedGraph::new(coords.iter().map(|&(x, y)| PlanePoint::new(x, y)).collect(), edges.iter().copied()).unwrap()
    }

    #[test]
    fn construction_errors() {
        let pts = vec![PlanePoint::new(0.0, 0.0), PlanePoint::new(1.0, 0.0)];
        assert_eq!(
            EmbeddedGraph::new(pts.clone(), [(0, 2)]),
            Err(GraphError::IndexOutOfRange { edge: 0, index: 2, vertex_count: 2 })
        );
        assert_eq!(EmbeddedGraph::new(pts.clone(), [(1, 1)]), Err(GraphError::SelfLoop { edge: 0, vertex: 1 }));
        assert_eq!(EmbeddedGraph::new(pts, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
    }

    #[test]
    fn unit_triangle_is_valid() {
        let g = float_graph(&[(0.0, 0.0), (1.0, 0.0), (0.5, HALF_SQRT3)], &[(0, 1), (1, 2), (0, 2)]);
        let m = validate(g, Tolerance::default()).unwrap();
        assert_eq!(m.edge_count(), 3);
        assert_eq!(m.rotation(0), &[1, 2]);
    }

    #[test]
    fn square_with_diagonals_reports_everything() {
        let g = float_graph(
            &[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)],
        );
        let err = validate(g, Tolerance::default()).unwrap_err();
        let non_unit: Vec<_> = err
            .violations
            .iter()
            .filter_map(|v| match v {
                Violation::NonUnitEdge { edge, length } => Some((*edge, *length)),
                _ => None,
            })
            .collect();
        assert_eq!(non_unit.len(), 2);
        assert!(non_unit.iter().all(|(_, l)| (l - 2f64.sqrt()).abs() < 1e-12));
        assert!(err.violations.contains(&Violation::EdgesCross { first: (0, 2), second: (1, 3) }));
        assert_eq!(err.violations.len(), 3);
    }

    #[test]
    fn duplicate_vertices_detected() {
        let g = float_graph(&[(0.0, 0.0), (1.0, 0.0), (1.0 + 1e-12, 0.0)], &[(0, 1)]);
        let err = validate(g, Tolerance::default()).unwrap_err();
        assert!(matches!(err.violations[0], Violation::DuplicateVertices { first: 1, second: 2, .. }));
    }

    #[test]
    fn long_edges_still_checked_for_crossings() {
        // A bad long edge crossing a far-away unit edge.
        let g = float_graph(&[(0.0, 0.0), (10.0, 0.0), (7.0, -0.5), (7.0, 0.5)], &[(0, 1), (2, 3)]);
        let err = validate(g, Tolerance::default()).unwrap_err();
        assert!(err.violations.contains(&Violation::EdgesCross { first: (0, 1), second: (2, 3) }));
    }

    #[test]
    fn rotation_is_counterclockwise() {
        let pts: Vec<LatticePoint> = std::iter::once(LatticePoint::ORIGIN).chain(LatticePoint::ORIGIN.neighbors()).collect();
        // Feed the spokes in scrambled order.
        let g = EmbeddedGraph::from_lattice(&pts, [(0, 4), (0, 1), (0, 6), (0, 3), (0, 2), (0, 5)]).unwrap();
        let m = validate(g, Tolerance::default()).unwrap();
        let angles: Vec<f64> = m.rotation(0).iter().map(|&w| m.direction(0, w)).collect();
        assert!(angles.windows(2).all(|w| w[0] < w[1]));
    }
}
