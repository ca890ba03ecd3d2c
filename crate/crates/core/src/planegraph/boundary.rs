use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::blocks::blocks;
use super::faces::{extract_faces, trace, FaceReport};
use super::graph::{EmbeddedGraph, MatchstickGraph};
use super::PlaneGraphError;
use crate::geometry::signed_area2;

/// The outer boundary of a 2-connected drawing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryProfile {
    /// Outer cycle in counterclockwise order.
    pub cycle: Vec<usize>,
    pub b: usize,
    /// Boundary vertices by degree.
    pub b_hist: BTreeMap<usize, usize>,
    /// Bounded non-triangular faces touching the boundary in at least one
    /// vertex.
    pub g_b: usize,
    pub has_chord: bool,
    /// First chord found, if any.
    pub chord: Option<(usize, usize)>,
    pub area: f64,
}

impl BoundaryProfile {
    /// `Σ (i-1)·b_i`: the number of angles at boundary vertices that lie in
    /// bounded faces.
    pub fn interior_angle_count(&self) -> usize {
        self.b_hist.iter().map(|(&i, &count)| (i - 1) * count).sum()
    }
}

pub(crate) fn require_biconnected(m: &MatchstickGraph) -> Result<(), PlaneGraphError> {
    if blocks(m.graph()).is_biconnected {
        Ok(())
    } else {
        Err(PlaneGraphError::NotBiconnected)
    }
}

pub(crate) fn profile_from(m: &MatchstickGraph, faces: &FaceReport) -> BoundaryProfile {
    let outer = faces.outer_face.expect("2-connected graphs have edges");
    let mut cycle = faces.faces[outer].clone();
    cycle.reverse();
    let b = cycle.len();
    let position: HashMap<usize, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut b_hist = BTreeMap::new();
    for &v in &cycle {
        *b_hist.entry(m.degree(v)).or_insert(0) += 1;
    }
    let g_b = faces
        .nontriangular_faces()
        .filter(|&f| faces.faces[f].iter().any(|v| position.contains_key(v)))
        .count();
    let chord = m.graph().edges().iter().copied().find(|&(u, v)| match (position.get(&u), position.get(&v)) {
        (Some(&i), Some(&j)) => {
            let gap = (i + b - j) % b;
            gap != 1 && gap != b - 1
        }
        _ => false,
    });
    let area = signed_area2(cycle.iter().map(|&v| (m.point(v).x, m.point(v).y))) / 2.0;
    BoundaryProfile { cycle, b, b_hist, g_b, has_chord: chord.is_some(), chord, area }
}

pub fn boundary_profile(m: &MatchstickGraph) -> Result<BoundaryProfile, PlaneGraphError> {
    require_biconnected(m)?;
    Ok(profile_from(m, &extract_faces(m)))
}

/// Angles at the boundary vertices that open into bounded faces.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryAngles {
    pub measured_degrees: f64,
    /// `180·(b-2)`.
    pub expected_degrees: f64,
    pub angle_count: usize,
    /// Angles measurably below 60°.
    pub acute_count: usize,
}

const ACUTE_SLACK_DEGREES: f64 = 1e-7;

pub fn boundary_angles(m: &MatchstickGraph) -> Result<BoundaryAngles, PlaneGraphError> {
    require_biconnected(m)?;
    let (half, _) = trace(m);
    let faces = extract_faces(m);
    let outer = faces.outer_face.expect("2-connected graphs have edges");
    let profile = profile_from(m, &faces);

    let mut measured = 0.0;
    let mut angle_count = 0;
    let mut acute_count = 0;
    for &v in &profile.cycle {
        let rot = m.rotation(v);
        for (k, &w) in rot.iter().enumerate() {
            // The face left of v → w fills the wedge from w counterclockwise
            // to the next neighbour.
            if half.face[half.offset[v] + k] == outer {
                continue;
            }
            let next = rot[(k + 1) % rot.len()];
            let mut wedge = m.direction(v, next) - m.direction(v, w);
            if wedge <= 0.0 {
                wedge += std::f64::consts::TAU;
            }
            let degrees = wedge.to_degrees();
            measured += degrees;
            angle_count += 1;
            if degrees < 60.0 - ACUTE_SLACK_DEGREES {
                acute_count += 1;
            }
        }
    }
    Ok(BoundaryAngles {
        measured_degrees: measured,
        expected_degrees: 180.0 * (profile.b as f64 - 2.0),
        angle_count,
        acute_count,
    })
}

/// Outcome of stripping the outer cycle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeelResult {
    /// What is left, vertices renumbered in their original order.
    pub remaining: EmbeddedGraph,
    /// Direct count of edges with at least one boundary endpoint.
    pub removed_edges: usize,
    pub removed_nontriangular_faces: usize,
    /// `Σ (i-1)·b_i` for comparison with `removed_edges`.
    pub interior_angle_count: usize,
}

pub fn boundary_peel(m: &MatchstickGraph) -> Result<PeelResult, PlaneGraphError> {
    require_biconnected(m)?;
    let profile = profile_from(m, &extract_faces(m));
    if let Some((u, v)) = profile.chord {
        return Err(PlaneGraphError::HasChord(u, v));
    }
    let mut on_boundary = vec![false; m.vertex_count()];
    for &v in &profile.cycle {
        on_boundary[v] = true;
    }
    let removed_edges = m.graph().edges().iter().filter(|&&(i, j)| on_boundary[i] || on_boundary[j]).count();
    let keep: Vec<usize> = (0..m.vertex_count()).filter(|&v| !on_boundary[v]).collect();
    let (remaining, _) = m.graph().induced(&keep);
    Ok(PeelResult {
        remaining,
        removed_edges,
        removed_nontriangular_faces: profile.g_b,
        interior_angle_count: profile.interior_angle_count(),
    })
}
