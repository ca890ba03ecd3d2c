//! Exact evaluation of the edge and triangle bounds for matchstick graphs.
//!
//! Anything involving `√(12n − 3)` is decided by integer squaring. The one
//! transcendental bound, `3n − c·√(n − 1/4)`, goes through a certified
//! enclosure and refuses to guess when the enclosure straddles an integer.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::exec::Exec;
use crate::planegraph::{extract_faces, MatchstickGraph};

mod certified;
mod interval;
mod lemmas;

pub use certified::{c_fixed, c_interval, thm3_floor_fixed, thm3_value, ConstantC, FIXED_POINT_TIERS};
pub use interval::Interval;
pub use lemmas::{
    constant_inequalities, inequality_three_check, inequality_three_sweep, lemma_sqrt2_check, lemma_sqrt2_sweep,
    lemma_sqrt_check, ConstantInequality, SqrtLemma, Sqrt2Counterexample,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("argument must be positive")]
    NonPositive,
    #[error("floor of 3n - c*sqrt(n - 1/4) could not be decided for n = {0}")]
    AmbiguousFloor(u64),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

/// Smallest `k` with `k² ≥ m`.
pub fn ceil_isqrt(m: u64) -> Result<u64, BoundsError> {
    if m == 0 {
        return Err(BoundsError::NonPositive);
    }
    let r = m.isqrt();
    Ok(if r * r == m { r } else { r + 1 })
}

fn root_term(n: u64) -> Result<u64, BoundsError> {
    if n == 0 {
        return Err(BoundsError::NonPositive);
    }
    ceil_isqrt(12 * n - 3)
}

/// `3n − ⌈√(12n − 3)⌉`, which is also `⌊3n − √(12n − 3)⌋`.
pub fn conjectured_max_edges(n: u64) -> Result<u64, BoundsError> {
    Ok(3 * n - root_term(n)?)
}

/// `e ≤ 3n − √(12n − 3) + g`, decided as `s ≥ 0 ∧ s² ≥ 12n − 3` with
/// `s = 3n + g − e`.
pub fn thm1_check(n: u64, e: u64, g: u64) -> bool {
    if n == 0 {
        return true;
    }
    let s = 3 * n as i128 + g as i128 - e as i128;
    s >= 0 && s * s >= 12 * n as i128 - 3
}

/// `⌊2n + 1 − √(12n − 3)⌋`.
pub fn cor1_max_triangles(n: u64) -> Result<u64, BoundsError> {
    Ok(2 * n + 1 - root_term(n)?)
}

/// `⌊3n − c·√(n − 1/4)⌋`, certified.
pub fn thm3_max_edges(n: u64) -> Result<u64, BoundsError> {
    if n == 0 {
        return Err(BoundsError::NonPositive);
    }
    if n < 1 << 40 {
        if let Some(v) = thm3_value(n).floor() {
            return Ok(v as u64);
        }
    }
    FIXED_POINT_TIERS
        .iter()
        .find_map(|&digits| thm3_floor_fixed(n, digits))
        .ok_or(BoundsError::AmbiguousFloor(n))
}

/// All `n ≤ n_max` where the certified upper bound meets the lattice
/// construction, so the conjectured maximum is proven there.
pub fn settled_list(n_max: u64, exec: Exec) -> Result<Vec<u64>, BoundsError> {
    if n_max == 0 {
        return Err(BoundsError::NonPositive);
    }
    let rows = exec.map_range(1..=n_max, |n| -> Result<Option<u64>, BoundsError> {
        Ok((thm3_max_edges(n)? == conjectured_max_edges(n)?).then_some(n))
    });
    rows.into_iter().filter_map(Result::transpose).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: u64,
    pub e: u64,
    pub g: u64,
    pub f3: u64,
    pub conjectured_max: u64,
    /// `⌊3n − √(12n − 3) + g⌋`.
    pub thm1_rhs_floor: u64,
    pub thm3_rhs_floor: u64,
    pub cor1_max_triangles: u64,
    /// Pass/fail per bound, keyed by a stable name.
    pub verdicts: BTreeMap<String, bool>,
}

impl BoundsReport {
    pub fn all_proven_bounds_hold(&self) -> bool {
        ["theorem1", "theorem3", "corollary1"].iter().all(|k| self.verdicts[*k])
    }
}

pub fn report_from_counts(n: u64, e: u64, g: u64, f3: u64) -> Result<BoundsReport, BoundsError> {
    let conjectured_max = conjectured_max_edges(n)?;
    let thm3 = thm3_max_edges(n)?;
    let cor1 = cor1_max_triangles(n)?;
    let verdicts = BTreeMap::from([
        ("theorem1".to_string(), thm1_check(n, e, g)),
        ("theorem3".to_string(), e <= thm3),
        ("corollary1".to_string(), f3 <= cor1),
        ("conjecture1".to_string(), e <= conjectured_max),
    ]);
    Ok(BoundsReport {
        n,
        e,
        g,
        f3,
        conjectured_max,
        thm1_rhs_floor: conjectured_max + g,
        thm3_rhs_floor: thm3,
        cor1_max_triangles: cor1,
        verdicts,
    })
}

/// Every bound evaluated on one graph. `conjecture1` is informative only;
/// the other three must hold for any matchstick graph.
pub fn full_report(m: &MatchstickGraph) -> Result<BoundsReport, BoundsError> {
    let faces = extract_faces(m);
    report_from_counts(m.vertex_count() as u64, m.edge_count() as u64, faces.g as u64, faces.f3 as u64)
}
