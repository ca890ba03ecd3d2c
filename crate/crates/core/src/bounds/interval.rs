//! Outward-rounded `f64` intervals.
//!
//! IEEE basic operations and `sqrt` are correctly rounded, so stepping each
//! result one ulp outwards with `next_down`/`next_up` gives a guaranteed
//! enclosure without touching the FPU rounding mode.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Self { lo, hi }
    }

    /// A value that is exactly representable.
    pub fn exact(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn int(i: i64) -> Self {
        assert!(i.unsigned_abs() <= 1 << 53, "{i} is not exactly representable");
        Self::exact(i as f64)
    }

    pub fn pi() -> Self {
        Self { lo: std::f64::consts::PI.next_down(), hi: std::f64::consts::PI.next_up() }
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn mid(self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn sqrt(self) -> Self {
        assert!(self.hi >= 0.0, "sqrt of a negative interval");
        // The fused residual s·s − x has the sign of the exact one, so a
        // root that is already on the correct side is kept as is.
        let lo = if self.lo <= 0.0 {
            0.0
        } else {
            let s = self.lo.sqrt();
            if s.mul_add(s, -self.lo) <= 0.0 { s } else { s.next_down() }
        };
        let s = self.hi.sqrt();
        let hi = if s.mul_add(s, -self.hi) >= 0.0 { s } else { s.next_up() };
        Self { lo, hi }
    }

    /// Every point of `self` is strictly greater than every point of `other`.
    pub fn certainly_gt(self, other: Interval) -> bool {
        self.lo > other.hi
    }

    pub fn certainly_ge(self, other: Interval) -> bool {
        self.lo >= other.hi
    }

    pub fn certainly_lt(self, other: Interval) -> bool {
        self.hi < other.lo
    }

    /// `floor` of the enclosed value, if it is the same at both ends.
    pub fn floor(self) -> Option<i64> {
        let (a, b) = (self.lo.floor(), self.hi.floor());
        (a == b).then_some(a as i64)
    }
}

impl From<i64> for Interval {
    fn from(i: i64) -> Self {
        Self::int(i)
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval { lo: (self.lo + o.lo).next_down(), hi: (self.hi + o.hi).next_up() }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval { lo: (self.lo - o.hi).next_down(), hi: (self.hi - o.lo).next_up() }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let p = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo: lo.next_down(), hi: hi.next_up() }
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, o: Interval) -> Interval {
        assert!(o.lo > 0.0 || o.hi < 0.0, "division by an interval containing zero");
        let q = [self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi];
        let lo = q.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = q.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo: lo.next_down(), hi: hi.next_up() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sqrt_encloses() {
        let two = Interval::int(2).sqrt();
        assert!(two.contains(std::f64::consts::SQRT_2));
        assert!(two.width() < 1e-15);
        assert_eq!(Interval::int(9).sqrt().floor(), Some(3));
        assert_eq!(Interval::int(0).sqrt(), Interval::exact(0.0));
    }

    #[test]
    fn pi_encloses() {
        let p = Interval::pi();
        assert!(p.lo() < std::f64::consts::PI && std::f64::consts::PI < p.hi());
    }

    #[test]
    fn floor_detects_straddling() {
        assert_eq!(Interval::new(2.9, 3.1).floor(), None);
        assert_eq!(Interval::new(3.1, 3.2).floor(), Some(3));
    }

    proptest! {
        // Exact rational arithmetic on small integers as the oracle.
        #[test]
        fn arithmetic_encloses_integer_results(a in -1000i64..1000, b in -1000i64..1000, c in 1i64..1000) {
            let (ia, ib, ic) = (Interval::int(a), Interval::int(b), Interval::int(c));
            prop_assert!((ia + ib).contains((a + b) as f64));
            prop_assert!((ia - ib).contains((a - b) as f64));
            prop_assert!((ia * ib).contains((a * b) as f64));
            let q = ia / ic;
            // a/c lies in q iff c·lo ≤ a ≤ c·hi (checked with exact-ish margins).
            prop_assert!(q.lo() * c as f64 <= a as f64 + 1e-9 && a as f64 - 1e-9 <= q.hi() * c as f64);
        }

        #[test]
        fn sqrt_brackets_integer_roots(m in 0u64..1_000_000_000) {
            let r = Interval::int(m as i64).sqrt();
            let fl = m.isqrt();
            // floor(√m) ≤ hi and lo < floor(√m) + 1.
            prop_assert!(r.hi() >= fl as f64);
            prop_assert!(r.lo() < (fl + 1) as f64);
            if fl * fl == m {
                prop_assert!(r.contains(fl as f64));
            }
        }
    }
}
