//! Minkowski space ℝ^{1,3}, the linear isomorphism with Hermitian 2×2
//! matrices, null flags, the orthogonal frame of a spinor, and the
//! SL(2,ℂ) action as future-preserving Lorentz transformations.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::models::{hopf, stereo_to_sphere, BoundaryPointU};
use crate::spinor::{act_hermitian, Hermitian2, NonzeroSpinor, Spinor, SL2C};
use crate::tolerance::Tolerance;

/// A Euclidean 3-vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(&self, o: &Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Vec3 {
        Vec3::new(s * self.x, s * self.y, s * self.z)
    }

    pub fn approx_eq(&self, o: &Vec3, tol: Tolerance) -> bool {
        (*self - *o).norm() <= tol.margin(self.norm().max(o.norm()))
    }
}

impl std::ops::Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl std::ops::Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl std::ops::Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        self.scale(-1.0)
    }
}

/// A point (T, X, Y, Z) of Minkowski space with signature (+, −, −, −).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkVec {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl MinkVec {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    /// ⟨p, p⟩ = T² − X² − Y² − Z².
    pub fn mink_norm_sqr(&self) -> f64 {
        mink_inner(self, self)
    }

    /// T² + X² + Y² + Z², the scale used by the causal predicates.
    pub fn euclid_norm_sqr(&self) -> f64 {
        self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn xyz(&self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    pub fn is_lightlike(&self, tol: Tolerance) -> bool {
        tol.is_zero(self.mink_norm_sqr(), self.euclid_norm_sqr())
    }

    pub fn is_timelike(&self, tol: Tolerance) -> bool {
        self.mink_norm_sqr() > tol.margin(self.euclid_norm_sqr())
    }

    pub fn is_spacelike(&self, tol: Tolerance) -> bool {
        self.mink_norm_sqr() < -tol.margin(self.euclid_norm_sqr())
    }

    /// On the future light cone: lightlike with T > 0.
    pub fn is_future_lightlike(&self, tol: Tolerance) -> bool {
        self.is_lightlike(tol) && self.t > 0.0
    }

    pub fn scale(&self, s: f64) -> MinkVec {
        MinkVec::new(s * self.t, s * self.x, s * self.y, s * self.z)
    }

    pub fn approx_eq(&self, o: &MinkVec, tol: Tolerance) -> bool {
        let diff = (*self - *o).euclid_norm_sqr().sqrt();
        diff <= tol.margin(self.euclid_norm_sqr().sqrt().max(o.euclid_norm_sqr().sqrt()))
    }
}

impl std::ops::Add for MinkVec {
    type Output = MinkVec;
    fn add(self, o: MinkVec) -> MinkVec {
        MinkVec::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl std::ops::Sub for MinkVec {
    type Output = MinkVec;
    fn sub(self, o: MinkVec) -> MinkVec {
        MinkVec::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

/// ⟨p, q⟩ = T_p T_q − X_p X_q − Y_p Y_q − Z_p Z_q.
pub fn mink_inner(p: &MinkVec, q: &MinkVec) -> f64 {
    p.t * q.t - p.x * q.x - p.y * q.y - p.z * q.z
}

/// g(S) = (a+d, 2·Re b, 2·Im b, a−d); satisfies 4·det S = ⟨g(S), g(S)⟩
/// and trace S = T.
pub fn g_map(s: &Hermitian2) -> MinkVec {
    MinkVec::new(s.a + s.d, 2.0 * s.b.re, 2.0 * s.b.im, s.a - s.d)
}

/// Inverse of [`g_map`]: (T,X,Y,Z) ↦ ½ [[T+Z, X+iY], [X−iY, T−Z]].
pub fn g_inv(p: &MinkVec) -> Hermitian2 {
    Hermitian2::new(
        0.5 * (p.t + p.z),
        0.5 * (p.t - p.z),
        Complex64::new(0.5 * p.x, 0.5 * p.y),
    )
}

/// g∘f in closed form: (|ξ|²+|η|², 2 Re ξη̄, 2 Im ξη̄, |ξ|²−|η|²).
/// Lands on the future light cone.
pub fn gf(k: &NonzeroSpinor) -> MinkVec {
    let prod = k.xi * k.eta.conj();
    MinkVec::new(
        k.xi.norm_sqr() + k.eta.norm_sqr(),
        2.0 * prod.re,
        2.0 * prod.im,
        k.xi.norm_sqr() - k.eta.norm_sqr(),
    )
}

/// A base point p on the future light cone together with an oriented
/// tangent 2-plane span(p, dir), stored in canonical form:
/// dir.T = 0, ⟨p, dir⟩ = 0, and |dir| = p.T (the Euclidean XYZ-norm).
///
/// Two flags are equal iff their bases agree and their directions agree up
/// to adding real multiples of the base and scaling by a positive factor;
/// canonical form reduces that to componentwise equality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Flag {
    base: MinkVec,
    dir: MinkVec,
}

impl Flag {
    /// Canonicalize and validate: `dir` may be any tangent representative
    /// of the flag plane (not proportional to `base`).
    pub fn new(base: MinkVec, dir: MinkVec, tol: Tolerance) -> Result<Self> {
        if !base.is_future_lightlike(tol) {
            return Err(Error::NotFutureLightlike {
                norm_sqr: base.mink_norm_sqr(),
                t: base.t,
            });
        }
        // Shift by a multiple of base to zero the T-component; this stays
        // within the flag plane and inside the tangent space.
        let shifted = dir - base.scale(dir.t / base.t);
        let scale = base.euclid_norm_sqr().sqrt() * dir.euclid_norm_sqr().sqrt().max(1.0);
        let pairing = mink_inner(&base, &shifted);
        if !tol.is_zero(pairing, scale) {
            return Err(Error::FlagDirectionNotTangent { residual: pairing });
        }
        let len = shifted.xyz().norm();
        if tol.is_zero(len, dir.euclid_norm_sqr().sqrt()) {
            return Err(Error::DegenerateFlagDirection);
        }
        Ok(Self { base, dir: shifted.scale(base.t / len) })
    }

    pub fn base(&self) -> MinkVec {
        self.base
    }

    /// Canonical direction vector (T = 0, XYZ-norm = base.T).
    pub fn dir(&self) -> MinkVec {
        self.dir
    }
}

/// The flag of a spinor: base g∘f(κ) and, with ξ = a+bi, η = c+di,
/// direction (0, 2(cd−ab), a²−b²+c²−d², 2(ad+bc)).
///
/// The direction is half the tangent vector g(D_κf(𝒵(κ))); this half is
/// the representative with XYZ-norm equal to base.T.
pub fn flag_of_spinor(k: &NonzeroSpinor) -> Flag {
    let (a, b) = (k.xi.re, k.xi.im);
    let (c, d) = (k.eta.re, k.eta.im);
    let base = gf(k);
    let dir = MinkVec::new(
        0.0,
        2.0 * (c * d - a * b),
        a * a - b * b + c * c - d * d,
        2.0 * (a * d + b * c),
    );
    // Already canonical: dir.t = 0, <base,dir> = 0, |dir| = base.t hold in
    // closed form, so skip the constructor's renormalization.
    Flag { base, dir }
}

/// Equality of flags in canonical form, at tolerance.
pub fn flags_equal(f1: &Flag, f2: &Flag, tol: Tolerance) -> bool {
    f1.base.approx_eq(&f2.base, tol) && f1.dir.approx_eq(&f2.dir, tol)
}

/// The right-handed orthogonal frame of κ = (a+bi, c+di):
///
/// e1 = (a²−b²−c²+d², 2(ab+cd), 2(bd−ac))
/// e2 = (2(cd−ab), a²−b²+c²−d², 2(ad+bc))
/// e3 = (2(ac+bd), 2(bc−ad), a²+b²−c²−d²)
///
/// Each has norm r = |ξ|²+|η|², e1×e2 = r·e3, e3 is the XYZ-part of
/// g∘f(κ), and e2 spans the flag direction. Multiplying κ by e^{iθ} fixes
/// e3 and turns the frame: e1 ↦ e1·cos2θ + e2·sin2θ,
/// e2 ↦ e2·cos2θ − e1·sin2θ.
pub fn frame_basis(k: &NonzeroSpinor) -> [Vec3; 3] {
    let (a, b) = (k.xi.re, k.xi.im);
    let (c, d) = (k.eta.re, k.eta.im);
    [
        Vec3::new(a * a - b * b - c * c + d * d, 2.0 * (a * b + c * d), 2.0 * (b * d - a * c)),
        Vec3::new(2.0 * (c * d - a * b), a * a - b * b + c * c - d * d, 2.0 * (a * d + b * c)),
        Vec3::new(2.0 * (a * c + b * d), 2.0 * (b * c - a * d), a * a + b * b - c * c - d * d),
    ]
}

/// A point of the unit sphere (the T = 1 slice of the future light cone).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CelestialPoint(Vec3);

impl CelestialPoint {
    pub const UNIT_TOL: f64 = 1e-12;

    pub fn new(v: Vec3) -> Result<Self> {
        let norm = v.norm();
        if (norm - 1.0).abs() <= Self::UNIT_TOL {
            Ok(Self(v))
        } else {
            Err(Error::NotUnitVector { norm })
        }
    }

    pub fn as_vec3(&self) -> Vec3 {
        self.0
    }
}

/// For a unit spinor, the XYZ-part of g∘f(κ) — a point of the unit sphere.
///
/// Equals the composition of the Hopf map ξ/η with inverse stereographic
/// projection ([`hopf_then_stereo`], the independent computation path).
pub fn hopf_stereo(k: &Spinor, tol: Tolerance) -> Result<CelestialPoint> {
    let norm_sqr = k.norm_sqr();
    if !tol.eq_f64(norm_sqr, 1.0) {
        return Err(Error::NotUnitSpinor { norm_sqr });
    }
    let k = NonzeroSpinor::new(*k).expect("unit spinors are nonzero");
    let p = gf(&k);
    let v = p.xyz();
    // gf of a unit spinor has T = 1 and lies on the cone, so v is unit up
    // to rounding; project exactly onto the sphere.
    CelestialPoint::new(v.scale(1.0 / v.norm()))
}

/// Independent path for [`hopf_stereo`]: Hopf map to ℂ ∪ {∞}, then
/// inverse stereographic projection to the unit sphere.
pub fn hopf_then_stereo(k: &Spinor, tol: Tolerance) -> Result<CelestialPoint> {
    let norm_sqr = k.norm_sqr();
    if !tol.eq_f64(norm_sqr, 1.0) {
        return Err(Error::NotUnitSpinor { norm_sqr });
    }
    let k = NonzeroSpinor::new(*k).expect("unit spinors are nonzero");
    let b: BoundaryPointU = hopf(&k);
    Ok(stereo_to_sphere(&b))
}

/// A·p = g(A · g⁻¹(p) · A*): the SO(1,3)⁺ action of SL(2,ℂ).
pub fn act_minkowski(a: &SL2C, p: &MinkVec) -> MinkVec {
    g_map(&act_hermitian(a, &g_inv(p)))
}

/// Apply A to base and direction, then re-canonicalize.
pub fn act_flag(a: &SL2C, f: &Flag, tol: Tolerance) -> Result<Flag> {
    Flag::new(act_minkowski(a, &f.base), act_minkowski(a, &f.dir), tol)
}

/// Residual of the pairing identity 2·|{κ₁,κ₂}|² = ⟨g∘f(κ₁), g∘f(κ₂)⟩.
pub fn spinor_mink_identity(k1: &NonzeroSpinor, k2: &NonzeroSpinor) -> f64 {
    let lam = crate::spinor::inner_product(k1, k2);
    2.0 * lam.norm_sqr() - mink_inner(&gf(k1), &gf(k2))
}
