//! Face extraction from the rotation system.
//!
//! Every directed edge `u → v` is followed by `v → w`, where `w` is the
//! neighbour of `v` that comes clockwise-next after `u`. The resulting closed
//! walks keep their face on the left: bounded faces run counterclockwise and
//! the outer boundary of each component runs clockwise.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::graph::MatchstickGraph;
use crate::geometry::signed_area2;

/// Faces of a validated drawing.
///
/// `faces` holds every boundary walk. A bounded face is one walk plus the
/// outer walks (or isolated vertices) of components sitting inside it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FaceReport {
    /// Boundary walks as vertex sequences, each starting at its smallest
    /// directed edge.
    pub faces: Vec<Vec<usize>>,
    /// Twice the signed area of each walk.
    pub signed_areas2: Vec<f64>,
    /// The walk bounding the unbounded face; for disconnected drawings, the
    /// outermost component's. `None` when there are no edges.
    pub outer_face: Option<usize>,
    /// All walks that border the unbounded face.
    pub unbounded_walks: Vec<usize>,
    /// Walk ids of bounded faces, ascending.
    pub bounded_faces: Vec<usize>,
    /// Number of distinct vertices on the boundary of each walk's face.
    pub face_sizes: Vec<usize>,
    pub f_hist: BTreeMap<usize, usize>,
    pub f: usize,
    pub f3: usize,
    pub g: usize,
    pub components: usize,
}

impl FaceReport {
    pub fn is_bounded(&self, walk: usize) -> bool {
        self.bounded_faces.binary_search(&walk).is_ok()
    }

    /// Walk ids of the bounded faces with at least four boundary vertices.
    pub fn nontriangular_faces(&self) -> impl Iterator<Item = usize> + '_ {
        self.bounded_faces.iter().copied().filter(|&w| self.face_sizes[w] >= 4)
    }
}

/// Directed-edge bookkeeping: half-edge `offset[v] + k` leaves `v` towards
/// `rotation(v)[k]`.
pub(crate) struct HalfEdges {
    pub offset: Vec<usize>,
    pub origin: Vec<usize>,
    /// Index of the reverse half-edge.
    pub twin: Vec<usize>,
    pub face: Vec<usize>,
}

impl HalfEdges {
    pub fn id(&self, m: &MatchstickGraph, v: usize, w: usize) -> usize {
        let k = m.rotation(v).iter().position(|&x| x == w).expect("edge exists");
        self.offset[v] + k
    }
}

pub(crate) fn trace(m: &MatchstickGraph) -> (HalfEdges, Vec<Vec<usize>>) {
    let n = m.vertex_count();
    let mut offset = Vec::with_capacity(n + 1);
    let mut origin = Vec::new();
    let mut target = Vec::new();
    offset.push(0);
    for v in 0..n {
        for &w in m.rotation(v) {
            origin.push(v);
            target.push(w);
        }
        offset.push(origin.len());
    }
    let total = origin.len();
    let mut twin = vec![0; total];
    for h in 0..total {
        let (v, w) = (origin[h], target[h]);
        let k = m.rotation(w).iter().position(|&x| x == v).expect("adjacency is symmetric");
        twin[h] = offset[w] + k;
    }
    let mut half = HalfEdges { offset, origin, twin, face: vec![usize::MAX; total] };

    let mut walks = Vec::new();
    for start in 0..total {
        if half.face[start] != usize::MAX {
            continue;
        }
        let id = walks.len();
        let mut walk = Vec::new();
        let mut h = start;
        loop {
            half.face[h] = id;
            walk.push(half.origin[h]);
            // Arrive at w from v; leave towards the clockwise-next neighbour.
            let arrive = half.twin[h];
            let w = half.origin[arrive];
            let deg = half.offset[w + 1] - half.offset[w];
            let k = arrive - half.offset[w];
            h = half.offset[w] + (k + deg - 1) % deg;
            if h == start {
                break;
            }
        }
        let len = walk.len();
        let first = (0..len).min_by_key(|&i| (walk[i], walk[(i + 1) % len])).expect("walks are non-empty");
        walk.rotate_left(first);
        walks.push(walk);
    }
    (half, walks)
}

fn components(m: &MatchstickGraph) -> (Vec<usize>, usize) {
    let n = m.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = count;
        while let Some(v) = stack.pop() {
            for &w in m.rotation(v) {
                if comp[w] == usize::MAX {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

/// Even-odd ray test. Closed walks that traverse an edge in both directions
/// are fine: the two traversals cancel.
fn walk_contains(m: &MatchstickGraph, walk: &[usize], x: f64, y: f64) -> bool {
    let mut inside = false;
    for (i, &a) in walk.iter().enumerate() {
        let b = walk[(i + 1) % walk.len()];
        let (p, q) = (m.point(a), m.point(b));
        if (p.y > y) != (q.y > y) {
            let xc = p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y);
            if xc > x {
                inside = !inside;
            }
        }
    }
    inside
}

pub fn extract_faces(m: &MatchstickGraph) -> FaceReport {
    let (half, walks) = trace(m);
    let areas: Vec<f64> = walks
        .iter()
        .map(|w| signed_area2(w.iter().map(|&v| (m.point(v).x, m.point(v).y))))
        .collect();
    let (comp, ncomp) = components(m);

    // Per component: its lowest (then leftmost) vertex lies on the outer
    // boundary, and the outer face there is entered along the edge with the
    // largest direction angle.
    let mut lowest: Vec<Option<usize>> = vec![None; ncomp];
    for (v, &c) in comp.iter().enumerate() {
        let better = match lowest[c] {
            None => true,
            Some(u) => {
                let (p, q) = (m.point(v), m.point(u));
                (p.y, p.x) < (q.y, q.x)
            }
        };
        if better {
            lowest[c] = Some(v);
        }
    }
    let outer_walk_of: Vec<Option<usize>> = lowest
        .iter()
        .map(|&v| {
            let v = v.expect("components are non-empty");
            let w = *m
                .rotation(v)
                .iter()
                .max_by(|&&a, &&b| m.direction(v, a).total_cmp(&m.direction(v, b)))?;
            Some(half.face[half.id(m, v, w)])
        })
        .collect();
    let component_outer: BTreeSet<usize> = outer_walk_of.iter().flatten().copied().collect();
    let bounded_faces: Vec<usize> = (0..walks.len()).filter(|w| !component_outer.contains(w)).collect();
    let walk_component: Vec<usize> = walks.iter().map(|w| comp[w[0]]).collect();

    // Place each component inside the smallest bounded face of another
    // component that contains it, if any.
    let mut container: Vec<Option<usize>> = vec![None; ncomp];
    if ncomp > 1 {
        for c in 0..ncomp {
            let v = lowest[c].unwrap();
            let (x, y) = (m.point(v).x, m.point(v).y);
            container[c] = bounded_faces
                .iter()
                .copied()
                .filter(|&f| walk_component[f] != c && walk_contains(m, &walks[f], x, y))
                .min_by(|&a, &b| areas[a].abs().total_cmp(&areas[b].abs()).then(a.cmp(&b)));
        }
    }

    let mut face_vertices: Vec<BTreeSet<usize>> = walks.iter().map(|w| w.iter().copied().collect()).collect();
    let mut unbounded_walks = Vec::new();
    for c in 0..ncomp {
        let rim: Vec<usize> = match outer_walk_of[c] {
            Some(w) => walks[w].clone(),
            None => vec![lowest[c].unwrap()],
        };
        match container[c] {
            Some(f) => face_vertices[f].extend(rim),
            None => unbounded_walks.extend(outer_walk_of[c]),
        }
    }
    unbounded_walks.sort_unstable();
    let outer_face = unbounded_walks
        .iter()
        .copied()
        .min_by(|&a, &b| areas[a].total_cmp(&areas[b]).then(a.cmp(&b)));

    let face_sizes: Vec<usize> = face_vertices.iter().map(BTreeSet::len).collect();
    let mut f_hist = BTreeMap::new();
    for &f in &bounded_faces {
        *f_hist.entry(face_sizes[f]).or_insert(0) += 1;
    }
    let f3 = f_hist.get(&3).copied().unwrap_or(0);
    let f = bounded_faces.len();

    FaceReport {
        faces: walks,
        signed_areas2: areas,
        outer_face,
        unbounded_walks,
        bounded_faces,
        face_sizes,
        f_hist,
        f,
        f3,
        g: f - f3,
        components: ncomp,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{LatticePoint, PlanePoint, Tolerance};
    use crate::planegraph::{validate, EmbeddedGraph};

    fn lattice(points: &[(i64, i64)], edges: &[(usize, usize)]) -> MatchstickGraph {
        let pts: Vec<LatticePoint> = points.iter().map(|&(a, b)| LatticePoint::new(a, b)).collect();
        validate(EmbeddedGraph::from_lattice(&pts, edges.iter().copied()).unwrap(), Tolerance::default()).unwrap()
    }

    #[test]
    fn triangle() {
        let r = extract_faces(&lattice(&[(0, 0), (1, 0), (0, 1)], &[(0, 1), (1, 2), (0, 2)]));
        assert_eq!((r.f, r.f3, r.g), (1, 1, 0));
        let outer = r.outer_face.unwrap();
        assert_eq!(r.faces[outer].len(), 3);
        assert!(r.signed_areas2[outer] < 0.0);
        assert!(r.signed_areas2[r.bounded_faces[0]] > 0.0);
    }

    #[test]
    fn rhombus() {
        let r = extract_faces(&lattice(&[(0, 0), (1, 0), (0, 1), (1, 1)], &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]));
        assert_eq!((r.f, r.f3, r.g), (2, 2, 0));
        assert_eq!(r.faces[r.outer_face.unwrap()].len(), 4);
    }

    #[test]
    fn hexagon() {
        let ring: Vec<(i64, i64)> = LatticePoint::ORIGIN.neighbors().map(|p| (p.a, p.b)).collect();
        let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let r = extract_faces(&lattice(&ring, &edges));
        assert_eq!((r.f, r.f3, r.g), (1, 0, 1));
        assert_eq!(r.f_hist, BTreeMap::from([(6, 1)]));
    }

    #[test]
    fn path_has_only_the_outer_walk() {
        let r = extract_faces(&lattice(&[(0, 0), (1, 0), (2, 0)], &[(0, 1), (1, 2)]));
        assert_eq!(r.f, 0);
        assert_eq!(r.faces.len(), 1);
        assert_eq!(r.faces[0], vec![0, 1, 2, 1]);
        assert_eq!(r.signed_areas2[0], 0.0);
    }

    #[test]
    fn isolated_vertex_inside_a_hexagon_enlarges_the_face() {
        let mut pts: Vec<(i64, i64)> = LatticePoint::ORIGIN.neighbors().map(|p| (p.a, p.b)).collect();
        pts.push((0, 0));
        let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let r = extract_faces(&lattice(&pts, &edges));
        assert_eq!(r.components, 2);
        assert_eq!(r.f_hist, BTreeMap::from([(7, 1)]));
        assert_eq!(r.unbounded_walks.len(), 1);
    }

    #[test]
    fn separate_components_side_by_side() {
        let r = extract_faces(&lattice(
            &[(0, 0), (1, 0), (0, 1), (5, 0), (6, 0), (5, 1)],
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        ));
        assert_eq!((r.f, r.f3, r.components), (2, 2, 2));
        assert_eq!(r.unbounded_walks.len(), 2);
    }

    #[test]
    fn triangle_nested_in_a_large_ring() {
        // A unit triangle floating in the middle of a 12-ring of radius-2
        // lattice points.
        let mut pts: Vec<(i64, i64)> = Vec::new();
        let dirs = crate::geometry::LATTICE_DIRECTIONS;
        for side in 0..6 {
            let corner = (2 * dirs[side].0, 2 * dirs[side].1);
            let step = dirs[(side + 2) % 6];
            for j in 0..2 {
                pts.push((corner.0 + j * step.0, corner.1 + j * step.1));
            }
        }
        let mut edges: Vec<(usize, usize)> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
        let base = pts.len();
        let tri = [(-1.0 / 2.0, -0.2), (0.5, -0.2), (0.0, -0.2 + crate::geometry::HALF_SQRT3)];
        let mut vertices: Vec<PlanePoint> = pts.iter().map(|&(a, b)| LatticePoint::new(a, b).into()).collect();
        vertices.extend(tri.iter().map(|&(x, y)| PlanePoint::new(x, y)));
        edges.extend([(base, base + 1), (base + 1, base + 2), (base, base + 2)]);
        let m = validate(EmbeddedGraph::new(vertices, edges).unwrap(), Tolerance::default()).unwrap();
        let r = extract_faces(&m);
        assert_eq!(r.f, 2);
        assert_eq!(r.f3, 1);
        assert_eq!(r.f_hist.get(&15), Some(&1));
        assert_eq!(r.unbounded_walks.len(), 1);
    }
}
