//! Lattice and floating coordinates, and the two predicates that define a
//! matchstick drawing: unit edge length and proper segment crossing.
//!
//! Points that carry an exact [`LatticePoint`] are compared with integer
//! arithmetic only. Everything else goes through `f64` with an explicit
//! [`Tolerance`].

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// `√3 / 2`, the height of a unit equilateral triangle.
pub const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

/// The six unit steps of the triangular lattice in counterclockwise order,
/// starting from `(1, 0)`.
pub const LATTICE_DIRECTIONS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// A point `a·(1,0) + b·(1/2, √3/2)` of the triangular lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub a: i64,
    pub b: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// Squared euclidean distance, exact. The Eisenstein norm of the
    /// difference: `Δa² + Δa·Δb + Δb²`.
    pub fn norm_to(self, other: LatticePoint) -> i64 {
        let da = other.a - self.a;
        let db = other.b - self.b;
        da * da + da * db + db * db
    }

    pub fn is_unit_from(self, other: LatticePoint) -> bool {
        self.norm_to(other) == 1
    }

    pub fn offset(self, step: (i64, i64)) -> Self {
        Self::new(self.a + step.0, self.b + step.1)
    }

    /// Lattice neighbours in counterclockwise order starting from `(1, 0)`.
    pub fn neighbors(self) -> impl Iterator<Item = LatticePoint> {
        LATTICE_DIRECTIONS.into_iter().map(move |d| self.offset(d))
    }

    /// Hexagonal ring index: the lattice distance from the origin.
    pub fn ring(self) -> i64 {
        let (a, b) = (self.a, self.b);
        a.abs().max(b.abs()).max((a + b).abs())
    }

    pub fn to_cartesian(self) -> (f64, f64) {
        (self.a as f64 + 0.5 * self.b as f64, self.b as f64 * HALF_SQRT3)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// A vertex position. Unit of length is one matchstick.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
    pub exact: Option<LatticePoint>,
}

impl PlanePoint {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y, exact: None }
    }

    pub fn distance(&self, other: &PlanePoint) -> f64 {
        (other.x - self.x).hypot(other.y - self.y)
    }
}

impl From<LatticePoint> for PlanePoint {
    fn from(p: LatticePoint) -> Self {
        lattice_to_cartesian(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ToleranceError {
    #[error("tolerance must be a finite non-negative number, got {0}")]
    Invalid(f64),
    #[error("tolerance {0} is not below the 0.05 ceiling")]
    TooLarge(f64),
}

/// Absolute tolerance for floating coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;
    pub const CEILING: f64 = 0.05;

    pub fn new(eps: f64) -> Result<Self, ToleranceError> {
        if !eps.is_finite() || eps < 0.0 {
            return Err(ToleranceError::Invalid(eps));
        }
        if eps >= Self::CEILING {
            return Err(ToleranceError::TooLarge(eps));
        }
        Ok(Self { eps })
    }

    pub fn eps(self) -> f64 {
        self.eps
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { eps: Self::DEFAULT_EPS }
    }
}

pub fn lattice_to_cartesian(p: LatticePoint) -> PlanePoint {
    let (x, y) = p.to_cartesian();
    PlanePoint { x, y, exact: Some(p) }
}

pub fn is_unit_length(p: &PlanePoint, q: &PlanePoint, tol: Tolerance) -> bool {
    match (p.exact, q.exact) {
        (Some(a), Some(b)) => a.is_unit_from(b),
        _ => (p.distance(q) - 1.0).abs() <= tol.eps(),
    }
}

/// Coincidence of two points: exact for lattice points, within `eps` otherwise.
pub fn same_point(p: &PlanePoint, q: &PlanePoint, tol: Tolerance) -> bool {
    match (p.exact, q.exact) {
        (Some(a), Some(b)) => a == b,
        _ => p.distance(q) <= tol.eps(),
    }
}

/// Sign of a turn: `1` counterclockwise, `-1` clockwise, `0` collinear.
pub type Orientation = i8;

/// Orientation of `r` relative to the directed line `p → q`.
///
/// Lattice coordinates are related to cartesian ones by a linear map of
/// positive determinant, so for exact points the integer determinant has
/// the same sign as the cartesian one. Float determinants with magnitude
/// at most `eps` snap to collinear.
pub fn orientation(p: &PlanePoint, q: &PlanePoint, r: &PlanePoint, tol: Tolerance) -> Orientation {
    if let (Some(p), Some(q), Some(r)) = (p.exact, q.exact, r.exact) {
        let det = (q.a - p.a) * (r.b - p.b) - (q.b - p.b) * (r.a - p.a);
        return det.signum() as i8;
    }
    let det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if det.abs() <= tol.eps() {
        0
    } else if det > 0.0 {
        1
    } else {
        -1
    }
}

/// `r` lies on the closed segment `p q`, assuming the three are collinear.
fn within_span(p: &PlanePoint, q: &PlanePoint, r: &PlanePoint, tol: Tolerance) -> bool {
    if let (Some(p), Some(q), Some(r)) = (p.exact, q.exact, r.exact) {
        return p.a.min(q.a) <= r.a && r.a <= p.a.max(q.a) && p.b.min(q.b) <= r.b && r.b <= p.b.max(q.b);
    }
    let eps = tol.eps();
    p.x.min(q.x) - eps <= r.x && r.x <= p.x.max(q.x) + eps && p.y.min(q.y) - eps <= r.y && r.y <= p.y.max(q.y) + eps
}

/// True iff the closed segments meet somewhere other than an endpoint
/// shared by both. Collinear overlap and an endpoint touching the interior
/// of the other segment both count as crossings.
pub fn segments_properly_cross(
    s1: (&PlanePoint, &PlanePoint),
    s2: (&PlanePoint, &PlanePoint),
    tol: Tolerance,
) -> bool {
    let (p1, p2) = s1;
    let (q1, q2) = s2;

    let shared = [(p1, p2, q1, q2), (p1, p2, q2, q1), (p2, p1, q1, q2), (p2, p1, q2, q1)]
        .into_iter()
        .find(|(a, _, b, _)| same_point(a, b, tol));
    if let Some((common, p_far, _, q_far)) = shared {
        if same_point(p_far, q_far, tol) {
            // Same segment twice.
            return true;
        }
        // Two segments from a common point meet again only if they leave it
        // in the same direction.
        if orientation(common, p_far, q_far, tol) != 0 {
            return false;
        }
        return within_span(common, p_far, q_far, tol) || within_span(common, q_far, p_far, tol);
    }

    let o1 = orientation(p1, p2, q1, tol);
    let o2 = orientation(p1, p2, q2, tol);
    let o3 = orientation(q1, q2, p1, tol);
    let o4 = orientation(q1, q2, p2, tol);

    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within_span(p1, p2, q1, tol))
        || (o2 == 0 && within_span(p1, p2, q2, tol))
        || (o3 == 0 && within_span(q1, q2, p1, tol))
        || (o4 == 0 && within_span(q1, q2, p2, tol))
}

/// Twice the signed area of a closed polygon, counterclockwise positive.
pub fn signed_area2(points: impl IntoIterator<Item = (f64, f64)>) -> f64 {
    let pts: Vec<(f64, f64)> = points.into_iter().collect();
    if pts.len() < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for (i, &(x0, y0)) in pts.iter().enumerate() {
        let (x1, y1) = pts[(i + 1) % pts.len()];
        acc += x0 * y1 - x1 * y0;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(a: i64, b: i64) -> PlanePoint {
        lattice_to_cartesian(LatticePoint::new(a, b))
    }

    fn fp(x: f64, y: f64) -> PlanePoint {
        PlanePoint::new(x, y)
    }

    #[test]
    fn cartesian_images() {
        let o = lattice_to_cartesian(LatticePoint::new(0, 0));
        assert_eq!((o.x, o.y), (0.0, 0.0));
        let e = lattice_to_cartesian(LatticePoint::new(1, 0));
        assert_eq!((e.x, e.y), (1.0, 0.0));
        let f = lattice_to_cartesian(LatticePoint::new(0, 1));
        assert_eq!(f.x, 0.5);
        assert!((f.y - 3f64.sqrt() / 2.0).abs() < 1e-16);
        assert_eq!(f.exact, Some(LatticePoint::new(0, 1)));
    }

    #[test]
    fn unit_length_examples() {
        let tight = Tolerance::default();
        assert!(is_unit_length(&fp(0.0, 0.0), &fp(1.0, 0.0), tight));
        let loose = Tolerance::new(1e-4).unwrap();
        assert!(is_unit_length(&fp(0.0, 0.0), &fp(0.5, 0.866025), loose));
        assert!(!is_unit_length(&fp(0.0, 0.0), &fp(0.5, 0.866025), tight));
        let near_ceiling = Tolerance::new(0.0499).unwrap();
        assert!(!is_unit_length(&fp(0.0, 0.0), &fp(2.0, 0.0), near_ceiling));
    }

    #[test]
    fn unit_steps_are_exactly_the_six_directions() {
        let o = LatticePoint::ORIGIN;
        let mut unit = Vec::new();
        for a in -3..=3 {
            for b in -3..=3 {
                if o.is_unit_from(LatticePoint::new(a, b)) {
                    unit.push((a, b));
                }
            }
        }
        unit.sort();
        let mut expected = LATTICE_DIRECTIONS.to_vec();
        expected.sort();
        assert_eq!(unit, expected);
    }

    #[test]
    fn tolerance_bounds() {
        assert!(Tolerance::new(0.0).is_ok());
        assert!(matches!(Tolerance::new(-1e-3), Err(ToleranceError::Invalid(_))));
        assert!(matches!(Tolerance::new(f64::NAN), Err(ToleranceError::Invalid(_))));
        assert!(matches!(Tolerance::new(0.05), Err(ToleranceError::TooLarge(_))));
    }

    #[test]
    fn crossing_examples() {
        let tol = Tolerance::default();
        assert!(!segments_properly_cross(
            (&fp(0.0, 0.0), &fp(1.0, 0.0)),
            (&fp(0.0, 1.0), &fp(1.0, 1.0)),
            tol
        ));
        assert!(segments_properly_cross(
            (&fp(0.0, 0.0), &fp(1.0, 1.0)),
            (&fp(0.0, 1.0), &fp(1.0, 0.0)),
            tol
        ));
        assert!(!segments_properly_cross(
            (&fp(0.0, 0.0), &fp(1.0, 0.0)),
            (&fp(1.0, 0.0), &fp(1.5, 0.866)),
            tol
        ));
    }

    #[test]
    fn collinear_cases() {
        let tol = Tolerance::default();
        // Overlap along a line.
        assert!(segments_properly_cross(
            (&fp(0.0, 0.0), &fp(1.0, 0.0)),
            (&fp(0.5, 0.0), &fp(1.5, 0.0)),
            tol
        ));
        // Collinear, disjoint.
        assert!(!segments_properly_cross(
            (&fp(0.0, 0.0), &fp(1.0, 0.0)),
            (&fp(1.5, 0.0), &fp(2.5, 0.0)),
            tol
        ));
        // Shared endpoint, continuing straight on: fine.
        assert!(!segments_properly_cross(
            (&lp(0, 0), &lp(1, 0)),
            (&lp(1, 0), &lp(2, 0)),
            tol
        ));
        // Shared endpoint, folding back over each other.
        assert!(segments_properly_cross(
            (&fp(0.0, 0.0), &fp(1.0, 0.0)),
            (&fp(0.0, 0.0), &fp(0.6, 0.0)),
            tol
        ));
        // T-junction: endpoint on the other interior.
        assert!(segments_properly_cross(
            (&fp(0.0, 0.0), &fp(2.0, 0.0)),
            (&fp(1.0, 0.0), &fp(1.0, 1.0)),
            tol
        ));
        // Identical segments.
        assert!(segments_properly_cross((&lp(0, 0), &lp(1, 0)), (&lp(1, 0), &lp(0, 0)), tol));
    }

    #[test]
    fn lattice_edges_never_cross() {
        let tol = Tolerance::default();
        let o = LatticePoint::ORIGIN;
        let edges: Vec<(LatticePoint, LatticePoint)> = (-1..=1)
            .flat_map(|a| (-1..=1).map(move |b| LatticePoint::new(a, b)))
            .flat_map(|p| p.neighbors().map(move |q| (p, q)))
            .collect();
        for &(p, q) in &edges {
            for &(r, s) in &edges {
                let same = (p == r && q == s) || (p == s && q == r);
                let crosses = segments_properly_cross((&p.into(), &q.into()), (&r.into(), &s.into()), tol);
                assert_eq!(crosses, same, "{p} {q} vs {r} {s}");
            }
        }
        assert_eq!(o.ring(), 0);
    }

    proptest! {
        #[test]
        fn exact_and_float_unit_tests_agree(a1 in -50i64..=50, b1 in -50i64..=50, a2 in -50i64..=50, b2 in -50i64..=50) {
            let p = LatticePoint::new(a1, b1);
            let q = LatticePoint::new(a2, b2);
            let (x1, y1) = p.to_cartesian();
            let (x2, y2) = q.to_cartesian();
            let exact = is_unit_length(&p.into(), &q.into(), Tolerance::default());
            let float = is_unit_length(&fp(x1, y1), &fp(x2, y2), Tolerance::default());
            prop_assert_eq!(exact, float);
        }

        #[test]
        fn crossing_is_symmetric(coords in proptest::array::uniform8(-3.0f64..3.0)) {
            let tol = Tolerance::default();
            let [a, b, c, d, e, f, g, h] = coords;
            let (p1, p2, q1, q2) = (fp(a, b), fp(c, d), fp(e, f), fp(g, h));
            prop_assume!(p1.distance(&p2) > 1e-6 && q1.distance(&q2) > 1e-6);
            prop_assert_eq!(
                segments_properly_cross((&p1, &p2), (&q1, &q2), tol),
                segments_properly_cross((&q1, &q2), (&p1, &p2), tol)
            );
            prop_assert_eq!(
                segments_properly_cross((&p1, &p2), (&q1, &q2), tol),
                segments_properly_cross((&p2, &p1), (&q2, &q1), tol)
            );
        }

        #[test]
        fn interior_point_touch_is_a_crossing(
            x in -5.0f64..5.0, y in -5.0f64..5.0,
            angle in 0.0f64..std::f64::consts::TAU,
            len in 0.5f64..3.0, t in 0.05f64..0.95,
            off_angle in 0.2f64..2.9,
        ) {
            let (dx, dy) = (angle.cos(), angle.sin());
            let p = fp(x, y);
            let r = fp(x + len * dx, y + len * dy);
            let q = fp(x + t * len * dx, y + t * len * dy);
            let turn = angle + off_angle;
            let s = fp(q.x + turn.cos(), q.y + turn.sin());
            prop_assert!(segments_properly_cross((&p, &r), (&q, &s), Tolerance::default()));
        }
    }
}
