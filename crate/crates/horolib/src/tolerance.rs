//! Mixed absolute/relative floating-point comparison.

use num_complex::Complex64;

/// Comparison rule |x − y| ≤ atol + rtol·max(|x|, |y|).
///
/// Every approximate predicate in this crate takes one of these explicitly;
/// the defaults are atol = 1e−12, rtol = 1e−9.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { atol: 1e-12, rtol: 1e-9 }
    }
}

impl Tolerance {
    pub const fn new(atol: f64, rtol: f64) -> Self {
        Self { atol, rtol }
    }

    /// Default atol with the given rtol.
    pub fn with_rtol(rtol: f64) -> Self {
        Self { rtol, ..Self::default() }
    }

    /// Allowed margin for quantities of the given magnitude.
    pub fn margin(&self, scale: f64) -> f64 {
        self.atol + self.rtol * scale.abs()
    }

    pub fn eq_f64(&self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.margin(x.abs().max(y.abs()))
    }

    pub fn eq_c64(&self, x: Complex64, y: Complex64) -> bool {
        (x - y).norm() <= self.margin(x.norm().max(y.norm()))
    }

    /// Is `x` negligible at the given scale?
    pub fn is_zero(&self, x: f64, scale: f64) -> bool {
        x.abs() <= self.margin(scale)
    }
}
