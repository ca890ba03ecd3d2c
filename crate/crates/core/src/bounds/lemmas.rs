//! Square-root inequalities behind the induction, checked exactly.

use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use super::interval::Interval;
use super::{c_interval, conjectured_max_edges, BoundsError};
use crate::exec::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SqrtLemma {
    /// `√β + √γ ≤ √α + √δ`.
    pub holds: bool,
    /// Both sides equal.
    pub equality: bool,
}

/// Evaluates `√β + √γ ≤ √α + √δ` for `β ≤ α ≤ γ`, `α + δ = β + γ`.
///
/// Squaring both sides and cancelling `α + δ = β + γ` leaves `βγ ≤ αδ`, so
/// the comparison is exact on rationals.
pub fn lemma_sqrt_check(
    alpha: Ratio<i128>,
    beta: Ratio<i128>,
    gamma: Ratio<i128>,
    delta: Ratio<i128>,
) -> Result<SqrtLemma, BoundsError> {
    if [alpha, beta, gamma, delta].iter().any(|x| *x < Ratio::zero()) {
        return Err(BoundsError::PreconditionFailed("arguments must be non-negative".into()));
    }
    if !(beta <= alpha && alpha <= gamma) {
        return Err(BoundsError::PreconditionFailed("need beta <= alpha <= gamma".into()));
    }
    if alpha + delta != beta + gamma {
        return Err(BoundsError::PreconditionFailed("need alpha + delta = beta + gamma".into()));
    }
    let (lhs, rhs) = (beta * gamma, alpha * delta);
    Ok(SqrtLemma { holds: lhs <= rhs, equality: lhs == rhs })
}

/// `⌊3n − √(12n−3)⌋ + 1 ≥ ⌊3n₁ − √(12n₁−3)⌋ + ⌊3n₂ − √(12n₂−3)⌋`.
pub fn lemma_sqrt2_check(n: u64, n1: u64, n2: u64) -> Result<bool, BoundsError> {
    if n1 < 3 || n2 < 3 || n1 + n2 != n + 2 {
        return Err(BoundsError::PreconditionFailed(format!(
            "need n1, n2 >= 3 and n1 + n2 = n + 2, got n={n} n1={n1} n2={n2}"
        )));
    }
    Ok(conjectured_max_edges(n)? + 1 >= conjectured_max_edges(n1)? + conjectured_max_edges(n2)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sqrt2Counterexample {
    pub n: u64,
    pub n1: u64,
    pub n2: u64,
}

/// Checks every admissible `(n, n₁, n₂)` with `n ≤ n_max`. Returns the
/// number of triples checked, or the first failure in `(n, n₁)` order.
pub fn lemma_sqrt2_sweep(n_max: u64, exec: Exec) -> Result<u64, Sqrt2Counterexample> {
    if n_max < 4 {
        return Ok(0);
    }
    let rows = exec.map_range(4..=n_max, |n| {
        let mut checked = 0u64;
        for n1 in 3..=n - 1 {
            let n2 = n + 2 - n1;
            if !lemma_sqrt2_check(n, n1, n2).expect("admissible by construction") {
                return Err(Sqrt2Counterexample { n, n1, n2 });
            }
            checked += 1;
        }
        Ok(checked)
    });
    rows.into_iter().sum()
}

/// `√(12n − 3) ≤ √(12(n − b) − 3) + 6`, for `n ≥ 4` and
/// `3 ≤ b ≤ √(12n − 3) − 3`.
///
/// With `P − Q = 12b` the inequality reduces to `(b − 3)² ≤ 12(n − b) − 3`.
pub fn inequality_three_check(n: u64, b: u64) -> Result<bool, BoundsError> {
    if n < 4 || b < 3 || (b + 3) * (b + 3) > 12 * n - 3 {
        return Err(BoundsError::PreconditionFailed(format!(
            "need n >= 4 and 3 <= b <= sqrt(12n-3) - 3, got n={n} b={b}"
        )));
    }
    let q = 12 * (n - b) - 3;
    Ok((b - 3) * (b - 3) <= q)
}

/// Every admissible `(n, b)` with `4 ≤ n ≤ n_max`. Returns the number of
/// pairs checked, or the first failing pair.
pub fn inequality_three_sweep(n_max: u64, exec: Exec) -> Result<u64, (u64, u64)> {
    if n_max < 4 {
        return Ok(0);
    }
    let rows = exec.map_range(4..=n_max, |n| {
        let mut checked = 0u64;
        let mut b = 3;
        while (b + 3) * (b + 3) <= 12 * n - 3 {
            if !inequality_three_check(n, b).expect("admissible by construction") {
                return Err((n, b));
            }
            checked += 1;
            b += 1;
        }
        Ok(checked)
    });
    rows.into_iter().sum()
}

/// One of the numerical facts the proofs rely on, with a certified
/// enclosure of `lhs − rhs`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantInequality {
    pub name: &'static str,
    pub statement: &'static str,
    pub margin_lo: f64,
    pub margin_hi: f64,
    pub holds: bool,
}

fn strict(name: &'static str, statement: &'static str, margin: Interval) -> ConstantInequality {
    ConstantInequality { name, statement, margin_lo: margin.lo(), margin_hi: margin.hi(), holds: margin.lo() > 0.0 }
}

fn weak(name: &'static str, statement: &'static str, margin: Interval) -> ConstantInequality {
    ConstantInequality { name, statement, margin_lo: margin.lo(), margin_hi: margin.hi(), holds: margin.lo() >= 0.0 }
}

pub fn constant_inequalities() -> Vec<ConstantInequality> {
    let int = Interval::int;
    let sqrt = |k: i64| Interval::int(k).sqrt();
    let c = c_interval();
    let pi_root3 = Interval::pi() * sqrt(3);
    let root_iso = (int(2) * pi_root3).sqrt();
    let slack = pi_root3 + int(6) - c * root_iso;

    vec![
        strict("sqrt69_sqrt33", "sqrt(69) + sqrt(33) - 9 > 5", sqrt(69) + sqrt(33) - int(9) - int(5)),
        strict("sqrt45_sqrt33", "sqrt(45) - sqrt(33) < 1", int(1) - (sqrt(45) - sqrt(33))),
        strict(
            "cut_vertex_constant",
            "sqrt(5)/2 - sqrt(2) + sqrt(3/2) > 3/c",
            sqrt(5) / int(2) - sqrt(2) + (int(3) / int(2)).sqrt() - int(3) / c,
        ),
        strict("isoperimetric_slack", "pi*sqrt(3) + 6 - c*sqrt(2*pi*sqrt(3)) > 0", slack),
        weak(
            "isoperimetric_product",
            "(pi*sqrt(3) + 6 - c*sqrt(2*pi*sqrt(3))) * (pi*sqrt(3)/2 + 3) >= 9 - 3*pi*sqrt(3)/2",
            slack * (pi_root3 / int(2) + int(3)) - (int(9) - int(3) * pi_root3 / int(2)),
        ),
    ]
}
