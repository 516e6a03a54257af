//! Ford circles: the decorated horospheres of the integer spinors (p, q).
//!
//! For coprime p, q the circle sits at p/q with diameter 1/q²; q = 0 gives
//! the horizontal line at height 1 (the circle at ∞). Tangency and distance
//! are exact integer predicates on det = p₁q₂ − p₂q₁: tangent iff |det| = 1,
//! ρ = 2 log |det|, never overlapping. The mediant (p₁+p₂)/(q₁+q₂) of two
//! tangent circles is tangent to both, which generates the Farey/Stern–Brocot
//! structure.

use crate::error::{Error, Result};
use crate::models::{horosphere_of_spinor, DecoratedHorosphereU};
use crate::spinor::NonzeroSpinor;

fn gcd(a: i64, b: i64) -> u64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduced fraction p/q with q ≥ 0; (1, 0) is the line at height 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FordCircle {
    p: i64,
    q: i64,
}

impl FordCircle {
    /// Requires gcd(p, q) = 1 (so (0, 0) is rejected); the sign is
    /// normalized so q ≥ 0, and the q = 0 representatives ±1/0 both
    /// become 1/0.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        let (p, q) = if q < 0 {
            (p.checked_neg().ok_or(Error::Overflow)?, -q)
        } else {
            (p, q)
        };
        if q == 0 {
            return Ok(Self { p: 1, q: 0 });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The decorated horosphere of the real spinor (p, q): circle at p/q
    /// with diameter 1/q², or the height-1 line for q = 0.
    pub fn to_horosphere(&self) -> DecoratedHorosphereU {
        let k = NonzeroSpinor::from_reals(self.p as f64, self.q as f64)
            .expect("(p, q) ≠ (0, 0) for a reduced fraction");
        horosphere_of_spinor(&k)
    }
}

fn det(c1: &FordCircle, c2: &FordCircle) -> Result<i64> {
    let a = c1.p.checked_mul(c2.q).ok_or(Error::Overflow)?;
    let b = c2.p.checked_mul(c1.q).ok_or(Error::Overflow)?;
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// Tangency is exact: |p₁q₂ − p₂q₁| = 1. Equal circles are an error.
pub fn ford_tangent(c1: &FordCircle, c2: &FordCircle) -> Result<bool> {
    let d = det(c1, c2)?;
    if d == 0 {
        return Err(Error::SameCircle);
    }
    Ok(d.unsigned_abs() == 1)
}

/// ρ = 2 log |p₁q₂ − p₂q₁|: 0 for tangent circles, > 0 otherwise.
pub fn ford_distance(c1: &FordCircle, c2: &FordCircle) -> Result<f64> {
    let d = det(c1, c2)?;
    if d == 0 {
        return Err(Error::SameCircle);
    }
    Ok(2.0 * (d.unsigned_abs() as f64).ln())
}

/// Farey sum (p₁+p₂)/(q₁+q₂), reduced. Already reduced whenever the
/// parents are tangent.
pub fn mediant(c1: &FordCircle, c2: &FordCircle) -> Result<FordCircle> {
    let p = c1.p.checked_add(c2.p).ok_or(Error::Overflow)?;
    let q = c1.q.checked_add(c2.q).ok_or(Error::Overflow)?;
    let g = gcd(p, q) as i64;
    FordCircle::new(p / g, q / g)
}

/// Depths beyond this would not overflow i64, but keep enumeration sizes
/// sane (the Farey sequence grows quadratically).
pub const MAX_FAREY_DEPTH: u32 = 30;

/// All reduced fractions in [0, 1] with denominator ≤ depth, ascending.
/// Adjacent entries a/b, c/d always satisfy bc − ad = 1.
pub fn farey_enumerate(depth: u32) -> Result<Vec<FordCircle>> {
    if depth > MAX_FAREY_DEPTH {
        return Err(Error::DepthTooLarge { depth, max: MAX_FAREY_DEPTH });
    }
    if depth == 0 {
        return Ok(Vec::new());
    }
    let n = depth as i64;
    // next-term recurrence: from consecutive a/b, c/d the successor is
    // (kc − a)/(kd − b) with k = ⌊(n + b)/d⌋
    let (mut a, mut b, mut c, mut d) = (0i64, 1i64, 1i64, n);
    let mut out = vec![FordCircle::new(0, 1).expect("0/1 is reduced")];
    while c <= n {
        out.push(FordCircle::new(c, d).expect("Farey terms are reduced"));
        let k = (n + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
    }
    Ok(out)
}
