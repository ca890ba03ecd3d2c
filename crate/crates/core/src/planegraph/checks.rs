//! Per-graph checks of the counting identities and inequalities satisfied by
//! matchstick graphs. Integer identities are exact; only angle and area
//! checks touch floating point.

use std::collections::HashMap;
use std::f64::consts::PI;

use serde::Serialize;

use super::blocks::blocks;
use super::boundary::{boundary_angles, profile_from, require_biconnected};
use super::faces::extract_faces;
use super::graph::MatchstickGraph;
use super::PlaneGraphError;

/// Relative tolerance for the boundary angle sum.
pub const ANGLE_SUM_REL_TOL: f64 = 1e-6;

/// `n - e + f = 1`.
pub fn euler_check(m: &MatchstickGraph) -> Result<bool, PlaneGraphError> {
    if m.vertex_count() == 0 || !blocks(m.graph()).is_connected {
        return Err(PlaneGraphError::NotConnected);
    }
    let f = extract_faces(m).f;
    Ok(m.vertex_count() as i64 - m.edge_count() as i64 + f as i64 == 1)
}

/// Both sides of `e = 3n - 3 - b - Σ_{i≥4} (i-3)·f_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCount {
    pub e: i64,
    pub rhs: i64,
}

pub fn double_count_terms(m: &MatchstickGraph) -> Result<DoubleCount, PlaneGraphError> {
    require_biconnected(m)?;
    let faces = extract_faces(m);
    let b = faces.faces[faces.outer_face.expect("2-connected")].len() as i64;
    let n = m.vertex_count() as i64;
    let excess: i64 = faces.f_hist.iter().filter(|(&i, _)| i >= 4).map(|(&i, &c)| (i as i64 - 3) * c as i64).sum();
    Ok(DoubleCount { e: m.edge_count() as i64, rhs: 3 * n - 3 - b - excess })
}

pub fn double_count_check(m: &MatchstickGraph) -> Result<bool, PlaneGraphError> {
    double_count_terms(m).map(|t| t.e == t.rhs)
}

/// Both sides of `Σ (i-1)·b_i - g_b ≤ 3b - 6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityTwo {
    pub lhs: i64,
    pub rhs: i64,
}

/// The boundary-angle inequality used in the peeling step. Only claimed for
/// chord-free boundaries where every non-triangular face meets the boundary
/// in at most two consecutive vertices; anything else is reported as a
/// failed precondition.
pub fn inequality_two_terms(m: &MatchstickGraph) -> Result<InequalityTwo, PlaneGraphError> {
    require_biconnected(m)?;
    let faces = extract_faces(m);
    let profile = profile_from(m, &faces);
    if let Some((u, v)) = profile.chord {
        return Err(PlaneGraphError::PreconditionFailed(format!("outer cycle has chord {u}-{v}")));
    }
    let b = profile.b;
    let position: HashMap<usize, usize> = profile.cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for f in faces.nontriangular_faces() {
        let mut touching: Vec<usize> = faces.faces[f].iter().filter_map(|v| position.get(v).copied()).collect();
        touching.sort_unstable();
        touching.dedup();
        match touching.as_slice() {
            [] | [_] => {}
            [i, j] => {
                let gap = j - i;
                if gap != 1 && gap != b - 1 {
                    return Err(PlaneGraphError::PreconditionFailed(format!(
                        "face {f} meets the boundary in non-consecutive vertices {} and {}",
                        profile.cycle[*i], profile.cycle[*j]
                    )));
                }
            }
            more => {
                return Err(PlaneGraphError::PreconditionFailed(format!(
                    "face {f} meets the boundary in {} vertices",
                    more.len()
                )))
            }
        }
    }
    Ok(InequalityTwo { lhs: profile.interior_angle_count() as i64 - profile.g_b as i64, rhs: 3 * b as i64 - 6 })
}

pub fn inequality_two_check(m: &MatchstickGraph) -> Result<bool, PlaneGraphError> {
    inequality_two_terms(m).map(|t| t.lhs <= t.rhs)
}

pub fn angle_sum_check(m: &MatchstickGraph) -> Result<bool, PlaneGraphError> {
    let a = boundary_angles(m)?;
    Ok((a.measured_degrees - a.expected_degrees).abs() <= ANGLE_SUM_REL_TOL * a.expected_degrees)
}

/// Quantities in `b² ≥ 4πA` and `b² > π√3·f₃`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Isoperimetric {
    pub b_squared: f64,
    pub four_pi_area: f64,
    pub pi_sqrt3_f3: f64,
}

impl Isoperimetric {
    pub fn holds(&self) -> bool {
        self.b_squared >= self.four_pi_area && self.b_squared > self.pi_sqrt3_f3
    }
}

pub fn isoperimetric_terms(m: &MatchstickGraph) -> Result<Isoperimetric, PlaneGraphError> {
    require_biconnected(m)?;
    let faces = extract_faces(m);
    let profile = profile_from(m, &faces);
    let b = profile.b as f64;
    Ok(Isoperimetric {
        b_squared: b * b,
        four_pi_area: 4.0 * PI * profile.area,
        pi_sqrt3_f3: PI * 3f64.sqrt() * faces.f3 as f64,
    })
}

pub fn isoperimetric_check(m: &MatchstickGraph) -> Result<bool, PlaneGraphError> {
    isoperimetric_terms(m).map(|t| t.holds())
}
