//! Hand-built drawings with known structure.

use super::*;
use crate::geometry::{LatticePoint, Tolerance};

fn lattice(points: &[(i64, i64)]) -> MatchstickGraph {
    let pts: Vec<LatticePoint> = points.iter().map(|&(a, b)| LatticePoint::new(a, b)).collect();
    let mut edges = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i].is_unit_from(pts[j]) {
                edges.push((i, j));
            }
        }
    }
    validate(EmbeddedGraph::from_lattice(&pts, edges).unwrap(), Tolerance::default()).unwrap()
}

fn lattice_with(points: &[(i64, i64)], edges: &[(usize, usize)]) -> MatchstickGraph {
    let pts: Vec<LatticePoint> = points.iter().map(|&(a, b)| LatticePoint::new(a, b)).collect();
    validate(EmbeddedGraph::from_lattice(&pts, edges.iter().copied()).unwrap(), Tolerance::default()).unwrap()
}

fn triangle() -> MatchstickGraph {
    lattice(&[(0, 0), (1, 0), (0, 1)])
}

fn rhombus() -> MatchstickGraph {
    lattice(&[(0, 0), (1, 0), (0, 1), (1, 1)])
}

const HEX: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

fn wheel() -> MatchstickGraph {
    let mut pts = vec![(0, 0)];
    pts.extend(HEX);
    lattice(&pts)
}

fn hexagon() -> MatchstickGraph {
    lattice_with(&HEX, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
}

fn bowtie() -> MatchstickGraph {
    lattice(&[(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)])
}

#[test]
fn triangle_profile() {
    let p = boundary_profile(&triangle()).unwrap();
    assert_eq!(p.b, 3);
    assert_eq!(p.b_hist, [(2, 3)].into());
    assert!(!p.has_chord);
    assert!((p.area - 3f64.sqrt() / 4.0).abs() < 1e-12);
}

#[test]
fn rhombus_has_chord() {
    let m = rhombus();
    let p = boundary_profile(&m).unwrap();
    assert_eq!(p.b, 4);
    assert!(p.has_chord);
    assert_eq!(p.chord, Some((1, 2)));
    assert_eq!(boundary_peel(&m).unwrap_err(), PlaneGraphError::HasChord(1, 2));
    assert!(matches!(inequality_two_terms(&m), Err(PlaneGraphError::PreconditionFailed(_))));
}

#[test]
fn wheel_profile_and_inequality_two() {
    let m = wheel();
    let p = boundary_profile(&m).unwrap();
    assert_eq!(p.b, 6);
    assert_eq!(p.b_hist, [(3, 6)].into());
    assert!(!p.has_chord);
    assert_eq!(p.g_b, 0);
    assert_eq!(p.interior_angle_count(), 12);
    assert!((p.area - 6.0 * 3f64.sqrt() / 4.0).abs() < 1e-12);
    assert_eq!(inequality_two_terms(&m), Ok(InequalityTwo { lhs: 12, rhs: 12 }));
    assert_eq!(inequality_two_terms(&triangle()), Ok(InequalityTwo { lhs: 3, rhs: 3 }));
}

#[test]
fn boundary_cycle_is_counterclockwise() {
    for m in [triangle(), wheel(), hexagon()] {
        let p = boundary_profile(&m).unwrap();
        let pts = p.cycle.iter().map(|&v| (m.point(v).x, m.point(v).y));
        assert!(crate::geometry::signed_area2(pts) > 0.0);
    }
}

#[test]
fn peel() {
    let t = boundary_peel(&triangle()).unwrap();
    assert_eq!(t.remaining.vertex_count(), 0);
    assert_eq!(t.removed_edges, 3);
    assert_eq!(t.interior_angle_count, 3);

    let w = boundary_peel(&wheel()).unwrap();
    assert_eq!(w.remaining.vertex_count(), 1);
    assert_eq!(w.remaining.edge_count(), 0);
    assert_eq!(w.removed_edges, 12);
    assert_eq!(w.interior_angle_count, 12);

    let h = boundary_peel(&hexagon()).unwrap();
    assert_eq!(h.removed_edges, 6);
    assert_eq!(h.removed_nontriangular_faces, 1);
    assert_eq!(h.interior_angle_count, 6);
}

#[test]
fn angles() {
    let t = boundary_angles(&triangle()).unwrap();
    assert!((t.measured_degrees - 180.0).abs() < 1e-9);
    assert_eq!(t.expected_degrees, 180.0);
    let w = boundary_angles(&wheel()).unwrap();
    assert!((w.measured_degrees - 720.0).abs() < 1e-9);
    let h = boundary_angles(&hexagon()).unwrap();
    assert!((h.measured_degrees - 720.0).abs() < 1e-9);
    for m in [triangle(), rhombus(), wheel(), hexagon()] {
        assert_eq!(angle_sum_check(&m), Ok(true));
    }
    assert_eq!(angle_sum_check(&bowtie()), Err(PlaneGraphError::NotBiconnected));
}

#[test]
fn isoperimetric() {
    let t = isoperimetric_terms(&wheel()).unwrap();
    assert_eq!(t.b_squared, 36.0);
    // π√3·6 ≈ 32.648
    assert!((t.pi_sqrt3_f3 - 32.648).abs() < 1e-3);
    assert!(t.holds());
    for m in [triangle(), rhombus(), hexagon()] {
        assert_eq!(isoperimetric_check(&m), Ok(true));
    }
}

#[test]
fn euler_and_double_count() {
    for m in [triangle(), rhombus(), wheel(), hexagon()] {
        assert_eq!(euler_check(&m), Ok(true));
        assert_eq!(double_count_check(&m), Ok(true));
    }
    assert_eq!(double_count_terms(&hexagon()), Ok(DoubleCount { e: 6, rhs: 6 }));
    assert_eq!(euler_check(&bowtie()), Ok(true));
    let two = lattice(&[(0, 0), (5, 0)]);
    assert_eq!(euler_check(&two), Err(PlaneGraphError::NotConnected));
}

#[test]
fn split_bowtie_at_cut_vertex() {
    let m = bowtie();
    let s = split_at_cut_vertex(&m, 0).unwrap();
    let [a, b] = &s.parts;
    assert_eq!(a.vertex_count() + b.vertex_count(), m.vertex_count() + 1);
    assert_eq!(a.edge_count() + b.edge_count(), m.edge_count());
    assert!(!s.shares_edge);
    assert_eq!(s.vertex_maps[0], vec![0, 1, 2]);
    assert_eq!(split_at_cut_vertex(&m, 1).unwrap_err(), PlaneGraphError::NotASeparator(vec![1]));
}

#[test]
fn split_rhombus_at_chord() {
    let m = rhombus();
    let s = split_at_pair(&m, 1, 2).unwrap();
    let [a, b] = &s.parts;
    assert!(s.shares_edge);
    assert_eq!(a.vertex_count() + b.vertex_count(), m.vertex_count() + 2);
    assert_eq!(a.edge_count() + b.edge_count(), m.edge_count() + 1);
    let g = extract_faces(&m).g;
    assert_eq!(extract_faces(a).g + extract_faces(b).g, g);
}

#[test]
fn split_hexagon_at_opposite_pair() {
    let m = hexagon();
    let s = split_at_pair(&m, 0, 3).unwrap();
    let [a, b] = &s.parts;
    assert!(!s.shares_edge);
    assert_eq!(a.vertex_count() + b.vertex_count(), m.vertex_count() + 2);
    assert_eq!(a.edge_count() + b.edge_count(), m.edge_count());
    // The shared face is destroyed, not split.
    let g = extract_faces(&m).g;
    assert_eq!(g, 1);
    assert_eq!(extract_faces(a).g + extract_faces(b).g, g - 1);
    assert!(split_at_pair(&m, 0, 1).is_err());
}

#[test]
fn faces_invariant_under_rigid_motion() {
    for m in [triangle(), rhombus(), wheel(), hexagon(), bowtie()] {
        let before = extract_faces(&m);
        for (angle, dx, dy) in [(0.3, 1.5, -2.0), (2.0, -7.25, 0.125), (std::f64::consts::PI, 0.0, 0.0)] {
            let moved = validate(m.graph().transformed(angle, dx, dy), m.tolerance()).unwrap();
            let after = extract_faces(&moved);
            assert_eq!(after.f_hist, before.f_hist);
            assert_eq!((after.f, after.f3, after.g), (before.f, before.f3, before.g));
            let sorted = |r: &FaceReport| {
                let mut s = r.faces.clone();
                s.sort();
                s
            };
            assert_eq!(sorted(&after), sorted(&before));
        }
    }
}
