//! Hexagonal-spiral penny graphs on the triangular lattice.
//!
//! Ring `k ≥ 1` has corners `k·d_m` for the six lattice directions `d_m`.
//! The spiral enters ring `k` next to the last point of ring `k − 1` (the
//! corner `(k−1)·d_0`) and walks counterclockwise: the interior of side 0,
//! corner 1, the interior of side 1, corner 2, …, and closes the ring on
//! corner 0. Every prefix then has `3n − ⌈√(12n−3)⌉` edges.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{ceil_isqrt, conjectured_max_edges};
use crate::exec::Exec;
use crate::geometry::{LatticePoint, Tolerance, LATTICE_DIRECTIONS};
use crate::planegraph::{extract_faces, validate, EmbeddedGraph, MatchstickGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("vertex count must be positive")]
    NonPositive,
    #[error("points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),
}

/// Points of ring `k` in spiral order.
pub fn ring(k: u64) -> Vec<LatticePoint> {
    if k == 0 {
        return vec![LatticePoint::ORIGIN];
    }
    let k = k as i64;
    let corner = |m: usize| {
        let (da, db) = LATTICE_DIRECTIONS[m % 6];
        LatticePoint::new(k * da, k * db)
    };
    let mut out = Vec::with_capacity(6 * k as usize);
    for m in 0..6 {
        let step = LATTICE_DIRECTIONS[(m + 2) % 6];
        let start = corner(m);
        out.extend((1..k).map(|j| LatticePoint::new(start.a + j * step.0, start.b + j * step.1)));
        out.push(corner(m + 1));
    }
    out
}

/// Endless spiral order: the origin, then ring 1, ring 2, …
#[derive(Clone, Debug, Default)]
pub struct SpiralOrder {
    ring: u64,
    buffer: std::vec::IntoIter<LatticePoint>,
}

impl SpiralOrder {
    pub fn new() -> Self {
        Self { ring: 0, buffer: ring(0).into_iter() }
    }
}

impl Iterator for SpiralOrder {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        loop {
            if let Some(p) = self.buffer.next() {
                return Some(p);
            }
            self.ring += 1;
            self.buffer = ring(self.ring).into_iter();
        }
    }
}

pub fn spiral_points(n: u64) -> Result<Vec<LatticePoint>, ConstructError> {
    if n == 0 {
        return Err(ConstructError::NonPositive);
    }
    Ok(SpiralOrder::new().take(n as usize).collect())
}

/// Unit-distance pairs among distinct lattice points, as `(i, j)` with
/// `i < j`, sorted.
pub fn unit_pairs(points: &[LatticePoint]) -> Result<Vec<(usize, usize)>, ConstructError> {
    let mut index = HashMap::with_capacity(points.len());
    for (i, &p) in points.iter().enumerate() {
        if let Some(j) = index.insert(p, i) {
            return Err(ConstructError::DuplicatePoints(j, i));
        }
    }
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for &d in &LATTICE_DIRECTIONS[..3] {
            if let Some(&j) = index.get(&p.offset(d)) {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

/// The penny graph of a lattice point set: every unit-distance pair is an
/// edge.
pub fn penny_graph_of(points: &[LatticePoint]) -> Result<MatchstickGraph, ConstructError> {
    let edges = unit_pairs(points)?;
    let g = EmbeddedGraph::from_lattice(points, edges).expect("unit pairs are well formed");
    Ok(validate(g, Tolerance::default()).expect("lattice penny graphs are matchstick graphs"))
}

pub fn spiral_graph(n: u64) -> Result<MatchstickGraph, ConstructError> {
    penny_graph_of(&spiral_points(n)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub n: u64,
    pub edges: u64,
    pub triangles: u64,
    pub ok: bool,
}

/// Builds every spiral prefix up to `n_max`, counts edges and triangular
/// faces through the face extractor, and compares with `3n − ⌈√(12n−3)⌉`
/// and `2n + 1 − ⌈√(12n−3)⌉`.
pub fn extremality_audit(n_max: u64, exec: Exec) -> Result<Vec<AuditRow>, ConstructError> {
    if n_max == 0 {
        return Err(ConstructError::NonPositive);
    }
    let points = spiral_points(n_max)?;
    Ok(exec.map_range(1..=n_max, |n| {
        let m = penny_graph_of(&points[..n as usize]).expect("spiral points are distinct");
        let faces = extract_faces(&m);
        let edges = m.edge_count() as u64;
        let triangles = faces.f3 as u64;
        let root = ceil_isqrt(12 * n - 3).expect("n >= 1");
        let ok = edges == conjectured_max_edges(n).expect("n >= 1") && triangles == 2 * n + 1 - root;
        AuditRow { n, edges, triangles, ok }
    }))
}
