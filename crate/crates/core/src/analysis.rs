//! Everything known about one drawing, gathered into a single report.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bounds::{full_report, BoundsError, BoundsReport};
use crate::planegraph::{
    angle_sum_check, blocks, boundary_angles, boundary_peel, boundary_profile, double_count_terms, extract_faces,
    inequality_two_terms, isoperimetric_terms, validate, MatchstickGraph, PlaneGraphError,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub status: Status,
    pub detail: String,
}

impl CheckOutcome {
    fn new(ok: bool, detail: String) -> Self {
        Self { status: if ok { Status::Pass } else { Status::Fail }, detail }
    }

    fn skipped(detail: impl Into<String>) -> Self {
        Self { status: Status::Skipped, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Analysis {
    pub n: usize,
    pub e: usize,
    /// Length of the outer cycle, for 2-connected drawings.
    pub b: Option<usize>,
    pub f: usize,
    pub f3: usize,
    pub g: usize,
    pub f_hist: BTreeMap<usize, usize>,
    pub components: usize,
    pub connected: bool,
    pub biconnected: bool,
    pub cut_vertices: Vec<usize>,
    /// Bounded faces as vertex walks, sorted.
    pub faces: Vec<Vec<usize>>,
    pub bounds: BoundsReport,
    pub checks: BTreeMap<String, CheckOutcome>,
}

impl Analysis {
    pub fn failures(&self) -> impl Iterator<Item = (&str, &CheckOutcome)> {
        self.checks.iter().filter(|(_, c)| c.status == Status::Fail).map(|(k, c)| (k.as_str(), c))
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Pretty JSON with deterministic field and key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("analysis always serializes")
    }
}

/// The 2-connected pieces a structural identity can be applied to: the
/// drawing itself if it is 2-connected, else its blocks on three or more
/// vertices.
pub fn two_connected_pieces(m: &MatchstickGraph) -> Vec<MatchstickGraph> {
    let dec = blocks(m.graph());
    if dec.is_biconnected {
        return vec![m.clone()];
    }
    dec.block_vertices()
        .into_iter()
        .filter(|vs| vs.len() >= 3)
        .map(|vs| {
            let (g, _) = m.graph().induced(&vs);
            validate(g, m.tolerance()).expect("blocks of a valid drawing are valid")
        })
        .collect()
}

type PieceCheck = fn(&MatchstickGraph) -> Result<(bool, String), PlaneGraphError>;

fn over_pieces(pieces: &[MatchstickGraph], whole: bool, check: PieceCheck) -> CheckOutcome {
    if pieces.is_empty() {
        return CheckOutcome::skipped("no 2-connected block");
    }
    let mut details = Vec::new();
    let mut skipped = Vec::new();
    let mut failed = None;
    for (i, p) in pieces.iter().enumerate() {
        match check(p) {
            Ok((ok, detail)) => {
                if !ok && failed.is_none() {
                    failed = Some(if whole { detail.clone() } else { format!("block {i}: {detail}") });
                }
                details.push(detail);
            }
            Err(e) => skipped.push(e.to_string()),
        }
    }
    if details.is_empty() {
        return CheckOutcome::skipped(skipped.join("; "));
    }
    if let Some(detail) = failed {
        return CheckOutcome::new(false, detail);
    }
    let detail = if whole {
        details.pop().unwrap()
    } else {
        let mut d = format!("{} of {} blocks", details.len(), pieces.len());
        if !skipped.is_empty() {
            d.push_str(&format!(", {} not applicable", skipped.len()));
        }
        d
    };
    CheckOutcome::new(true, detail)
}

fn double_count(p: &MatchstickGraph) -> Result<(bool, String), PlaneGraphError> {
    let t = double_count_terms(p)?;
    Ok((t.e == t.rhs, format!("e={} rhs={}", t.e, t.rhs)))
}

fn angle_sum(p: &MatchstickGraph) -> Result<(bool, String), PlaneGraphError> {
    let a = boundary_angles(p)?;
    Ok((angle_sum_check(p)?, format!("measured={:.9} expected={}", a.measured_degrees, a.expected_degrees)))
}

fn isoperimetric(p: &MatchstickGraph) -> Result<(bool, String), PlaneGraphError> {
    let t = isoperimetric_terms(p)?;
    Ok((
        t.holds(),
        format!("b^2={} 4piA={:.6} pi*sqrt3*f3={:.6}", t.b_squared, t.four_pi_area, t.pi_sqrt3_f3),
    ))
}

fn inequality_two(p: &MatchstickGraph) -> Result<(bool, String), PlaneGraphError> {
    let t = inequality_two_terms(p)?;
    Ok((t.lhs <= t.rhs, format!("{} <= {}", t.lhs, t.rhs)))
}

fn peel(p: &MatchstickGraph) -> Result<(bool, String), PlaneGraphError> {
    let r = boundary_peel(p)?;
    Ok((
        r.removed_edges == r.interior_angle_count,
        format!("removed={} sum(i-1)b_i={}", r.removed_edges, r.interior_angle_count),
    ))
}

pub fn identity_checks(m: &MatchstickGraph) -> BTreeMap<String, CheckOutcome> {
    let faces = extract_faces(m);
    let (n, e) = (m.vertex_count() as i64, m.edge_count() as i64);
    let euler = n - e + faces.f as i64;
    let mut checks = BTreeMap::new();
    checks.insert(
        "euler".to_string(),
        CheckOutcome::new(euler == faces.components as i64, format!("n-e+f={euler} components={}", faces.components)),
    );
    let pieces = two_connected_pieces(m);
    let whole = pieces.len() == 1 && pieces[0].vertex_count() == m.vertex_count();
    let table: [(&str, PieceCheck); 5] = [
        ("double_count", double_count),
        ("angle_sum", angle_sum),
        ("isoperimetric", isoperimetric),
        ("inequality_two", inequality_two),
        ("peel", peel),
    ];
    for (name, check) in table {
        checks.insert(name.to_string(), over_pieces(&pieces, whole, check));
    }
    checks
}

pub fn analyze(m: &MatchstickGraph) -> Result<Analysis, BoundsError> {
    let bounds = full_report(m)?;
    let faces = extract_faces(m);
    let dec = blocks(m.graph());
    let b = boundary_profile(m).ok().map(|p| p.b);

    let mut checks = identity_checks(m);
    let bound_detail = |key: &str| match key {
        "theorem1" => format!("e={} <= floor(3n-sqrt(12n-3)+g)={}", bounds.e, bounds.thm1_rhs_floor),
        "theorem3" => format!("e={} <= floor(3n-c*sqrt(n-1/4))={}", bounds.e, bounds.thm3_rhs_floor),
        "corollary1" => format!("f3={} <= {}", bounds.f3, bounds.cor1_max_triangles),
        _ => format!("e={} <= {}", bounds.e, bounds.conjectured_max),
    };
    for (key, &ok) in &bounds.verdicts {
        checks.insert(key.clone(), CheckOutcome::new(ok, bound_detail(key)));
    }

    let mut bounded: Vec<Vec<usize>> = faces.bounded_faces.iter().map(|&w| faces.faces[w].clone()).collect();
    bounded.sort();
    Ok(Analysis {
        n: m.vertex_count(),
        e: m.edge_count(),
        b,
        f: faces.f,
        f3: faces.f3,
        g: faces.g,
        f_hist: faces.f_hist,
        components: faces.components,
        connected: dec.is_connected,
        biconnected: dec.is_biconnected,
        cut_vertices: dec.cut_vertices.into_iter().collect(),
        faces: bounded,
        bounds,
        checks,
    })
}
