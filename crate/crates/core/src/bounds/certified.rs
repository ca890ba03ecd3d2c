//! Certified evaluation of `c = (√12 + √(2π√3)) / 2` and of
//! `⌊3n − c·√(n − 1/4)⌋`.
//!
//! The fast path uses [`Interval`]. When its enclosure straddles an integer
//! the value is recomputed in decimal fixed point on big integers, with
//! every operation rounded outwards.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::interval::Interval;

/// π truncated after 100 decimals, without the point.
const PI_DIGITS: &str =
    "31415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

/// Precisions (decimal digits) tried after the `f64` path fails.
pub const FIXED_POINT_TIERS: [u32; 3] = [30, 60, 95];

/// The constant of the `3n − c·√(n − 1/4)` bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConstantC {
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
}

impl ConstantC {
    pub fn certified() -> Self {
        let c = c_interval();
        Self { value: c.mid(), lower: c.lo(), upper: c.hi() }
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lower, self.upper)
    }
}

pub fn c_interval() -> Interval {
    let three = Interval::int(3);
    let root12 = Interval::int(12).sqrt();
    let root_iso = (Interval::int(2) * Interval::pi() * three.sqrt()).sqrt();
    (root12 + root_iso) / Interval::int(2)
}

/// Enclosure of `3n − c·√(n − 1/4)` in `f64`.
pub fn thm3_value(n: u64) -> Interval {
    let n_i = Interval::int(n as i64);
    let shifted = Interval::int(4 * n as i64 - 1) / Interval::int(4);
    Interval::int(3) * n_i - c_interval() * shifted.sqrt()
}

/// Closed enclosure `[lo, hi] / 10^digits` of a non-negative real.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Fixed {
    lo: BigUint,
    hi: BigUint,
}

struct FixedCtx {
    digits: u32,
    scale: BigUint,
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    let q = a / b;
    if &q * b == *a {
        q
    } else {
        q + 1u32
    }
}

fn ceil_sqrt(a: &BigUint) -> BigUint {
    let r = a.sqrt();
    if &r * &r == *a {
        r
    } else {
        r + 1u32
    }
}

impl FixedCtx {
    fn new(digits: u32) -> Self {
        assert!((digits as usize) < PI_DIGITS.len(), "π is only tabulated to 100 decimals");
        Self { digits, scale: BigUint::from(10u32).pow(digits) }
    }

    fn int(&self, k: u64) -> Fixed {
        let v = BigUint::from(k) * &self.scale;
        Fixed { lo: v.clone(), hi: v }
    }

    fn pi(&self) -> Fixed {
        let lo: BigUint = PI_DIGITS[..=self.digits as usize].parse().expect("digit string");
        let hi = &lo + BigUint::one();
        Fixed { lo, hi }
    }

    fn add(&self, a: &Fixed, b: &Fixed) -> Fixed {
        Fixed { lo: &a.lo + &b.lo, hi: &a.hi + &b.hi }
    }

    fn mul(&self, a: &Fixed, b: &Fixed) -> Fixed {
        Fixed { lo: (&a.lo * &b.lo) / &self.scale, hi: ceil_div(&(&a.hi * &b.hi), &self.scale) }
    }

    fn div_int(&self, a: &Fixed, k: u64) -> Fixed {
        let k = BigUint::from(k);
        Fixed { lo: &a.lo / &k, hi: ceil_div(&a.hi, &k) }
    }

    fn sqrt(&self, a: &Fixed) -> Fixed {
        Fixed { lo: (&a.lo * &self.scale).sqrt(), hi: ceil_sqrt(&(&a.hi * &self.scale)) }
    }

    /// `⌊v⌋` if it is the same for every point of the enclosure.
    fn floor(&self, v: &Fixed) -> Option<BigUint> {
        let (a, b) = (&v.lo / &self.scale, &v.hi / &self.scale);
        (a == b).then_some(a)
    }
}

/// `⌊3n − c·√(n − 1/4)⌋` with `digits` decimals of working precision, or
/// `None` if that is not enough to decide it.
pub fn thm3_floor_fixed(n: u64, digits: u32) -> Option<u64> {
    let ctx = FixedCtx::new(digits);
    let root3 = ctx.sqrt(&ctx.int(3));
    let iso = ctx.mul(&ctx.mul(&ctx.int(2), &ctx.pi()), &root3);
    let m = 4 * n - 1;
    // c·√(n − 1/4) = (√(12·m) + √(2π√3·m)) / 4 with m = 4n − 1.
    let a = ctx.sqrt(&ctx.int(12 * m));
    let b = ctx.sqrt(&ctx.mul(&iso, &ctx.int(m)));
    let x = ctx.div_int(&ctx.add(&a, &b), 4);
    let three_n = BigUint::from(3 * n) * &ctx.scale;
    if x.hi > three_n {
        return None;
    }
    let value = Fixed { lo: &three_n - &x.hi, hi: &three_n - &x.lo };
    let fl = ctx.floor(&value)?;
    let digits = fl.to_u64_digits();
    Some(if digits.is_empty() { 0 } else { digits[0] })
}

/// Decimal enclosure of `c` at the given precision, as `(lo, hi)` scaled by
/// `10^digits`. Only used to cross-check the `f64` bracket.
pub fn c_fixed(digits: u32) -> (BigUint, BigUint) {
    let ctx = FixedCtx::new(digits);
    let root12 = ctx.sqrt(&ctx.int(12));
    let iso = ctx.sqrt(&ctx.mul(&ctx.mul(&ctx.int(2), &ctx.pi()), &ctx.sqrt(&ctx.int(3))));
    let c = ctx.div_int(&ctx.add(&root12, &iso), 2);
    (c.lo, c.hi)
}
