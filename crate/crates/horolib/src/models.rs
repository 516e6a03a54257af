//! Horospheres in the hyperboloid, disc, and upper half-space models, the
//! isometries between the models, distances, and the Möbius action on
//! decorated horospheres.
//!
//! The hyperboloid model ℍ is the sheet ⟨q,q⟩ = 1, T > 0 of Minkowski
//! space; each future light-cone point p determines the horosphere
//! {q ∈ ℍ : ⟨q, p⟩ = 1}. In the upper half-space model a horosphere is a
//! Euclidean sphere tangent to ℂ at its center, or a horizontal plane when
//! the center is ∞; one nonzero complex number δ carries both its size
//! (|δ| = diameter, or height) and the direction of a parallel tangent
//! line field (arg δ, read at the north pole).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::minkowski::{mink_inner, CelestialPoint, MinkVec, Vec3};
use crate::spinor::{NonzeroSpinor, SL2C};
use crate::tolerance::Tolerance;

/// A horosphere of the hyperboloid model, stored as its light-cone point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorosphereH {
    p: MinkVec,
}

impl HorosphereH {
    /// The horosphere {q ∈ ℍ : ⟨q, p⟩ = 1} of a future light-cone point.
    pub fn from_cone_point(p: MinkVec, tol: Tolerance) -> Result<Self> {
        if p.is_future_lightlike(tol) {
            Ok(Self { p })
        } else {
            Err(Error::NotFutureLightlike { norm_sqr: p.mink_norm_sqr(), t: p.t })
        }
    }

    pub fn cone_point(&self) -> MinkVec {
        self.p
    }
}

fn require_hyperboloid(q: &MinkVec, tol: Tolerance) -> Result<()> {
    let norm_sqr = q.mink_norm_sqr();
    if tol.is_zero(norm_sqr - 1.0, q.euclid_norm_sqr().max(1.0)) && q.t > 0.0 {
        Ok(())
    } else {
        Err(Error::NotOnHyperboloid { norm_sqr, t: q.t })
    }
}

/// Is the hyperboloid point q on the horosphere (⟨q, p⟩ = 1)?
pub fn on_horosphere(q: &MinkVec, h: &HorosphereH, tol: Tolerance) -> Result<bool> {
    require_hyperboloid(q, tol)?;
    let pairing = mink_inner(q, &h.p);
    Ok(tol.is_zero(pairing - 1.0, pairing.abs().max(1.0)))
}

/// Signed distance log⟨q, p⟩ from a hyperboloid point to a horosphere;
/// negative inside the horoball.
pub fn dist_point_horosphere(q: &MinkVec, h: &HorosphereH, tol: Tolerance) -> Result<f64> {
    require_hyperboloid(q, tol)?;
    Ok(mink_inner(q, &h.p).ln())
}

/// Signed distance ρ between two horospheres: ⟨p₁, p₂⟩ = 2e^ρ, with
/// ρ = −∞ when the horospheres share a center (⟨p₁, p₂⟩ = 0).
pub fn dist_horospheres(h1: &HorosphereH, h2: &HorosphereH) -> f64 {
    dist_horospheres_tol(h1, h2, Tolerance::default())
}

/// As [`dist_horospheres`] with an explicit common-center tolerance.
pub fn dist_horospheres_tol(h1: &HorosphereH, h2: &HorosphereH, tol: Tolerance) -> f64 {
    let pairing = mink_inner(&h1.p, &h2.p);
    let scale = (h1.p.euclid_norm_sqr() * h2.p.euclid_norm_sqr()).sqrt();
    if pairing <= tol.margin(scale) {
        f64::NEG_INFINITY
    } else {
        (pairing / 2.0).ln()
    }
}

/// A point of the boundary ℂ ∪ {∞} of the upper half-space model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPointU {
    Finite(Complex64),
    Infinity,
}

impl BoundaryPointU {
    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPointU::Infinity)
    }

    pub fn approx_eq(&self, other: &BoundaryPointU, tol: Tolerance) -> bool {
        match (self, other) {
            (BoundaryPointU::Infinity, BoundaryPointU::Infinity) => true,
            (BoundaryPointU::Finite(a), BoundaryPointU::Finite(b)) => tol.eq_c64(*a, *b),
            _ => false,
        }
    }
}

/// A horosphere of the upper half-space model with a parallel oriented
/// tangent line field, as (center, δ) with δ ≠ 0.
///
/// Finite center: Euclidean sphere of diameter |δ| tangent at the center,
/// decorated in direction arg δ at its north pole. Center ∞: horizontal
/// plane at height |δ|, decorated in direction arg δ everywhere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecoratedHorosphereU {
    center: BoundaryPointU,
    delta: Complex64,
}

impl DecoratedHorosphereU {
    pub fn new(center: BoundaryPointU, delta: Complex64) -> Result<Self> {
        if delta.norm_sqr() > 0.0 {
            Ok(Self { center, delta })
        } else {
            Err(Error::ZeroDecoration)
        }
    }

    pub fn center(&self) -> BoundaryPointU {
        self.center
    }

    pub fn delta(&self) -> Complex64 {
        self.delta
    }

    /// Euclidean diameter (finite center) or height (center ∞).
    pub fn size(&self) -> f64 {
        self.delta.norm()
    }

    pub fn is_plane(&self) -> bool {
        self.center.is_infinity()
    }

    pub fn approx_eq(&self, other: &DecoratedHorosphereU, tol: Tolerance) -> bool {
        self.center.approx_eq(&other.center, tol) && tol.eq_c64(self.delta, other.delta)
    }
}

/// A decorated horosphere with its two spin lifts distinguished: the lift
/// is the spinor itself, and κ, −κ are different values projecting to the
/// same [`DecoratedHorosphereU`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinDecoratedHorosphereU {
    spinor: NonzeroSpinor,
}

impl SpinDecoratedHorosphereU {
    pub fn new(spinor: NonzeroSpinor) -> Self {
        Self { spinor }
    }

    pub fn spinor(&self) -> NonzeroSpinor {
        self.spinor
    }

    pub fn decorated(&self) -> DecoratedHorosphereU {
        horosphere_of_spinor(&self.spinor)
    }
}

/// The decorated horosphere of a spinor:
/// η ≠ 0 ↦ (center ξ/η, δ = i/η²); η = 0 ↦ (center ∞, δ = iξ²).
///
/// |δ| is the Euclidean diameter 1/|η|² (resp. height |ξ|²). Invariant
/// under κ ↦ −κ; two spinors give the same result iff they differ by sign.
pub fn horosphere_of_spinor(k: &NonzeroSpinor) -> DecoratedHorosphereU {
    let i = Complex64::i();
    if k.eta.norm_sqr() == 0.0 {
        DecoratedHorosphereU { center: BoundaryPointU::Infinity, delta: i * k.xi * k.xi }
    } else {
        DecoratedHorosphereU {
            center: BoundaryPointU::Finite(k.xi / k.eta),
            delta: i / (k.eta * k.eta),
        }
    }
}

/// One of the two spinors projecting to the given decorated horosphere
/// (the other is its negative).
pub fn spinor_of_horosphere(h: &DecoratedHorosphereU) -> NonzeroSpinor {
    let i = Complex64::i();
    match h.center {
        BoundaryPointU::Infinity => {
            let xi = (-i * h.delta).sqrt();
            NonzeroSpinor::from_components(xi, Complex64::new(0.0, 0.0))
                .expect("delta is nonzero, so xi is nonzero")
        }
        BoundaryPointU::Finite(z) => {
            let eta = (i / h.delta).sqrt();
            NonzeroSpinor::from_components(z * eta, eta)
                .expect("delta is finite, so eta is nonzero")
        }
    }
}

/// The Hopf map κ ↦ ξ/η into ℂ ∪ {∞} (the center of the horosphere).
pub fn hopf(k: &NonzeroSpinor) -> BoundaryPointU {
    if k.eta.norm_sqr() == 0.0 {
        BoundaryPointU::Infinity
    } else {
        BoundaryPointU::Finite(k.xi / k.eta)
    }
}

/// Inverse stereographic projection ℂ ∪ {∞} → S² from the north pole:
/// a+bi ↦ (2a, 2b, −1+a²+b²)/(1+a²+b²), ∞ ↦ (0, 0, 1).
pub fn stereo_to_sphere(b: &BoundaryPointU) -> CelestialPoint {
    let north = Vec3::new(0.0, 0.0, 1.0);
    let v = match b {
        BoundaryPointU::Infinity => north,
        BoundaryPointU::Finite(z) => {
            let n = z.norm_sqr();
            if !n.is_finite() {
                north
            } else {
                let denom = 1.0 + n;
                Vec3::new(2.0 * z.re / denom, 2.0 * z.im / denom, (n - 1.0) / denom)
            }
        }
    };
    // Unit up to rounding; project exactly.
    CelestialPoint::new(v.scale(1.0 / v.norm())).expect("normalized vector is unit")
}

/// Boundary map of hyperboloid → disc: a future light-cone point (a ray)
/// lands at (X/T, Y/T, Z/T) on the unit sphere.
pub fn i_boundary(p: &MinkVec, tol: Tolerance) -> Result<CelestialPoint> {
    if !p.is_future_lightlike(tol) {
        return Err(Error::NotFutureLightlike { norm_sqr: p.mink_norm_sqr(), t: p.t });
    }
    let v = p.xyz().scale(1.0 / p.t);
    CelestialPoint::new(v.scale(1.0 / v.norm()))
}

/// Interior map of hyperboloid → disc: q ↦ (X, Y, Z)/(1 + T).
pub fn i_interior(q: &MinkVec, tol: Tolerance) -> Result<Vec3> {
    require_hyperboloid(q, tol)?;
    Ok(q.xyz().scale(1.0 / (1.0 + q.t)))
}

/// Boundary map of disc → upper half space: (x,y,z) ↦ (x+iy)/(1−z), with
/// the north pole mapped to ∞.
pub fn j_boundary(u: &CelestialPoint, tol: Tolerance) -> BoundaryPointU {
    let v = u.as_vec3();
    if 1.0 - v.z <= tol.margin(1.0) {
        BoundaryPointU::Infinity
    } else {
        BoundaryPointU::Finite(Complex64::new(v.x, v.y) / (1.0 - v.z))
    }
}

/// Interior map of disc → upper half space, returning (horizontal point
/// w ∈ ℂ, height h > 0): (x,y,z) ↦ (2x+2iy, 1−x²−y²−z²)/(x²+y²+(1−z)²).
pub fn j_interior(v: &Vec3) -> Result<(Complex64, f64)> {
    let n = v.norm_sqr();
    if n >= 1.0 {
        return Err(Error::NotInUnitBall { norm: n.sqrt() });
    }
    let s = v.x * v.x + v.y * v.y + (1.0 - v.z) * (1.0 - v.z);
    Ok((Complex64::new(2.0 * v.x, 2.0 * v.y) / s, (1.0 - n) / s))
}

/// The Möbius action of [[a,b],[c,d]] on ℂ ∪ {∞}: z ↦ (az+b)/(cz+d).
pub fn mobius_apply(m: &SL2C, p: &BoundaryPointU) -> BoundaryPointU {
    let [[a, b], [c, d]] = m.entries();
    match p {
        BoundaryPointU::Infinity => {
            if c.norm_sqr() == 0.0 {
                BoundaryPointU::Infinity
            } else {
                BoundaryPointU::Finite(a / c)
            }
        }
        BoundaryPointU::Finite(z) => {
            let denom = c * z + d;
            if denom.norm_sqr() == 0.0 {
                BoundaryPointU::Infinity
            } else {
                BoundaryPointU::Finite((a * z + b) / denom)
            }
        }
    }
}

/// The action of SL(2,ℂ) on decorated horospheres, routed through a spinor
/// representative (the two lifts ±κ project to the same result).
///
/// The center moves by the Möbius map; in the finite-to-finite case δ is
/// multiplied by the Möbius derivative 1/(cz+d)² at the center.
pub fn mobius_act_horosphere(m: &SL2C, h: &DecoratedHorosphereU) -> DecoratedHorosphereU {
    horosphere_of_spinor(&m.act_nonzero(&spinor_of_horosphere(h)))
}
