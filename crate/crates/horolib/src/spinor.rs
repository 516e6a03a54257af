//! Two-component complex spinors, their antisymmetric inner product, the
//! outer-product map into Hermitian matrices, and the SL(2,ℂ) actions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// A spinor κ = (ξ, η) ∈ ℂ².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    pub xi: Complex64,
    pub eta: Complex64,
}

impl Spinor {
    pub const fn new(xi: Complex64, eta: Complex64) -> Self {
        Self { xi, eta }
    }

    /// Spinor with real components (ξ, η) = (p, q).
    pub fn from_reals(p: f64, q: f64) -> Self {
        Self::new(Complex64::new(p, 0.0), Complex64::new(q, 0.0))
    }

    /// |ξ|² + |η|².
    pub fn norm_sqr(&self) -> f64 {
        self.xi.norm_sqr() + self.eta.norm_sqr()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(c * self.xi, c * self.eta)
    }
}

impl std::ops::Neg for Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor::new(-self.xi, -self.eta)
    }
}

/// A spinor with some component nonzero, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonzeroSpinor(Spinor);

impl NonzeroSpinor {
    /// The check is componentwise-exact: `norm_sqr` would underflow for
    /// magnitudes below ~1e−162 and reject genuinely nonzero spinors.
    pub fn new(s: Spinor) -> Result<Self> {
        let zero = (0.0, 0.0);
        if (s.xi.re, s.xi.im) == zero && (s.eta.re, s.eta.im) == zero {
            Err(Error::ZeroSpinor)
        } else {
            Ok(Self(s))
        }
    }

    pub fn from_components(xi: Complex64, eta: Complex64) -> Result<Self> {
        Self::new(Spinor::new(xi, eta))
    }

    pub fn from_reals(p: f64, q: f64) -> Result<Self> {
        Self::new(Spinor::from_reals(p, q))
    }

    pub fn spinor(&self) -> Spinor {
        self.0
    }

    pub fn scale(&self, c: Complex64) -> Result<Self> {
        Self::new(self.0.scale(c))
    }
}

impl std::ops::Deref for NonzeroSpinor {
    type Target = Spinor;
    fn deref(&self) -> &Spinor {
        &self.0
    }
}

impl std::ops::Neg for NonzeroSpinor {
    type Output = NonzeroSpinor;
    fn neg(self) -> NonzeroSpinor {
        NonzeroSpinor(-self.0)
    }
}

impl From<NonzeroSpinor> for Spinor {
    fn from(k: NonzeroSpinor) -> Spinor {
        k.0
    }
}

/// {κ₁, κ₂} = ξ₁η₂ − ξ₂η₁. Bilinear, antisymmetric, SL(2,ℂ)-invariant.
pub fn inner_product(k1: &Spinor, k2: &Spinor) -> Complex64 {
    k1.xi * k2.eta - k2.xi * k1.eta
}

/// A 2×2 Hermitian matrix [[a, b], [conj(b), d]].
///
/// Storing (a, d, b) makes Hermiticity structural. The determinant-zero,
/// trace-positive cone is exactly the image of the outer-product map
/// [`f_map`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hermitian2 {
    /// Entry (1,1), real.
    pub a: f64,
    /// Entry (2,2), real.
    pub d: f64,
    /// Entry (1,2); entry (2,1) is its conjugate.
    pub b: Complex64,
}

impl Hermitian2 {
    pub const fn new(a: f64, d: f64, b: Complex64) -> Self {
        Self { a, d, b }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, Complex64::new(0.0, 0.0))
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b.norm_sqr()
    }

    /// Squared Frobenius norm a² + d² + 2|b|².
    pub fn frob_norm_sqr(&self) -> f64 {
        self.a * self.a + self.d * self.d + 2.0 * self.b.norm_sqr()
    }

    /// Full entries [[a, b], [conj(b), d]].
    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        [
            [Complex64::new(self.a, 0.0), self.b],
            [self.b.conj(), Complex64::new(self.d, 0.0)],
        ]
    }

    pub fn approx_eq(&self, other: &Hermitian2, tol: Tolerance) -> bool {
        let scale = self.frob_norm_sqr().sqrt().max(other.frob_norm_sqr().sqrt());
        let diff = (self.a - other.a).hypot(self.d - other.d);
        let diff = diff.hypot((self.b - other.b).norm());
        diff <= tol.margin(scale)
    }
}

impl std::ops::Add for Hermitian2 {
    type Output = Hermitian2;
    fn add(self, rhs: Hermitian2) -> Hermitian2 {
        Hermitian2::new(self.a + rhs.a, self.d + rhs.d, self.b + rhs.b)
    }
}

impl std::ops::Sub for Hermitian2 {
    type Output = Hermitian2;
    fn sub(self, rhs: Hermitian2) -> Hermitian2 {
        Hermitian2::new(self.a - rhs.a, self.d - rhs.d, self.b - rhs.b)
    }
}

impl std::ops::Mul<Hermitian2> for f64 {
    type Output = Hermitian2;
    fn mul(self, rhs: Hermitian2) -> Hermitian2 {
        Hermitian2::new(self * rhs.a, self * rhs.d, self * rhs.b)
    }
}

/// f(κ) = κκ*, the rank-≤1 positive-semidefinite Hermitian matrix of κ.
///
/// With ξ = a+bi, η = c+di the off-diagonal entry is (ac+bd) + (bc−ad)i.
/// Invariant under κ ↦ e^{iθ}κ.
pub fn f_map(k: &NonzeroSpinor) -> Hermitian2 {
    Hermitian2::new(k.xi.norm_sqr(), k.eta.norm_sqr(), k.xi * k.eta.conj())
}

/// 𝒵(κ) = (i·conj(η), −i·conj(ξ)).
///
/// A tangent direction with {κ, 𝒵(κ)} = −(|ξ|²+|η|²)i; together with κ and
/// iκ it spans the directions seen by the derivative of f.
pub fn zeta(k: &Spinor) -> Spinor {
    let i = Complex64::i();
    Spinor::new(i * k.eta.conj(), -i * k.xi.conj())
}

/// D_κf(ν) = κν* + νκ*, the derivative of [`f_map`] at κ in direction ν.
pub fn derivative_f(k: &Spinor, v: &Spinor) -> Hermitian2 {
    Hermitian2::new(
        2.0 * (k.xi * v.xi.conj()).re,
        2.0 * (k.eta * v.eta.conj()).re,
        k.xi * v.eta.conj() + v.xi * k.eta.conj(),
    )
}

/// Position of a Hermitian matrix relative to the determinant-zero cone.
///
/// `H0`: det = 0. `H0Nonneg`: det = 0 and trace ≥ 0 (positive
/// semidefinite). `H0Pos`: det = 0 and trace > 0 — exactly the image of
/// [`f_map`] on nonzero spinors. Each class is contained in the previous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeClass {
    Generic,
    H0,
    H0Nonneg,
    H0Pos,
}

impl ConeClass {
    pub fn in_h0(self) -> bool {
        self != ConeClass::Generic
    }

    pub fn in_h0_nonneg(self) -> bool {
        matches!(self, ConeClass::H0Nonneg | ConeClass::H0Pos)
    }

    pub fn in_h0_pos(self) -> bool {
        self == ConeClass::H0Pos
    }
}

/// Classify into the most specific cone class.
///
/// det is compared at scale ‖S‖²_F and trace at scale ‖S‖_F, so both
/// predicates are invariant under S ↦ cS, c > 0.
pub fn classify_hermitian(s: &Hermitian2, tol: Tolerance) -> ConeClass {
    let frob_sqr = s.frob_norm_sqr();
    if !tol.is_zero(s.det(), frob_sqr) {
        return ConeClass::Generic;
    }
    let trace_margin = tol.margin(frob_sqr.sqrt());
    if s.trace() > trace_margin {
        ConeClass::H0Pos
    } else if s.trace() >= -trace_margin {
        ConeClass::H0Nonneg
    } else {
        ConeClass::H0
    }
}

/// A matrix in SL(2,ℂ), validated (never renormalized) at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SL2C {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl SL2C {
    pub const DEFAULT_DET_TOL: f64 = 1e-12;

    /// Build [[a, b], [c, d]] requiring |ad − bc − 1| ≤ 1e−12.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        Self::new_with_tol(a, b, c, d, Self::DEFAULT_DET_TOL)
    }

    /// As [`SL2C::new`] with an explicit determinant tolerance.
    pub fn new_with_tol(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
        tol_det: f64,
    ) -> Result<Self> {
        let det = a * d - b * c;
        let residual = (det - 1.0).norm();
        if residual <= tol_det {
            Ok(Self { a, b, c, d })
        } else {
            Err(Error::NotUnimodular { residual, tol: tol_det })
        }
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self { a: one, b: zero, c: zero, d: one }
    }

    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Exact inverse [[d, −b], [−c, a]] (determinant is unchanged).
    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }
}

impl std::ops::Mul for SL2C {
    type Output = SL2C;
    fn mul(self, rhs: SL2C) -> SL2C {
        SL2C {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}

impl std::ops::Neg for SL2C {
    type Output = SL2C;
    fn neg(self) -> SL2C {
        SL2C { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }
}

/// A·κ, the left matrix-vector action on ℂ².
pub fn act_spinor(a: &SL2C, k: &Spinor) -> Spinor {
    Spinor::new(a.a * k.xi + a.b * k.eta, a.c * k.xi + a.d * k.eta)
}

impl SL2C {
    /// A·κ on a nonzero spinor; SL(2,ℂ) is invertible so the image is
    /// nonzero.
    pub fn act_nonzero(&self, k: &NonzeroSpinor) -> NonzeroSpinor {
        NonzeroSpinor::new(act_spinor(self, &k.spinor()))
            .expect("an invertible matrix maps nonzero spinors to nonzero spinors")
    }
}

/// A·S = ASA*. The Hermitian result is symmetrized against rounding.
pub fn act_hermitian(a: &SL2C, s: &Hermitian2) -> Hermitian2 {
    let m = s.entries();
    let [[a11, a12], [a21, a22]] = a.entries();
    // rows of A·S
    let r11 = a11 * m[0][0] + a12 * m[1][0];
    let r12 = a11 * m[0][1] + a12 * m[1][1];
    let r21 = a21 * m[0][0] + a22 * m[1][0];
    let r22 = a21 * m[0][1] + a22 * m[1][1];
    // (A·S)·A*
    let p11 = r11 * a11.conj() + r12 * a12.conj();
    let p12 = r11 * a21.conj() + r12 * a22.conj();
    let p21 = r21 * a11.conj() + r22 * a12.conj();
    let p22 = r21 * a21.conj() + r22 * a22.conj();
    Hermitian2::new(p11.re, p22.re, 0.5 * (p12 + p21.conj()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: Tolerance = Tolerance::new(1e-12, 1e-9);

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn k(xi: Complex64, eta: Complex64) -> NonzeroSpinor {
        NonzeroSpinor::from_components(xi, eta).unwrap()
    }

    #[test]
    fn inner_product_standard_pair() {
        let k1 = Spinor::from_reals(1.0, 0.0);
        let k2 = Spinor::from_reals(0.0, 1.0);
        assert_eq!(inner_product(&k1, &k2), c(1.0, 0.0));
    }

    #[test]
    fn inner_product_self_is_zero() {
        let k1 = Spinor::from_reals(1.0, 0.0);
        assert_eq!(inner_product(&k1, &k1), c(0.0, 0.0));
    }

    #[test]
    fn inner_product_column_determinant() {
        // {(0,1), (z,1)} = -z
        let z = c(2.0, 3.0);
        let k1 = Spinor::new(c(0.0, 0.0), c(1.0, 0.0));
        let k2 = Spinor::new(z, c(1.0, 0.0));
        assert_eq!(inner_product(&k1, &k2), -z);
    }

    #[test]
    fn inner_product_antisymmetric_bit_exact() {
        let k1 = Spinor::new(c(0.3, -1.7), c(2.2, 0.9));
        let k2 = Spinor::new(c(-1.1, 0.4), c(0.6, -2.3));
        assert_eq!(inner_product(&k1, &k2), -inner_product(&k2, &k1));
    }

    #[test]
    fn zero_spinor_rejected() {
        assert_eq!(NonzeroSpinor::from_reals(0.0, 0.0), Err(Error::ZeroSpinor));
        assert!(NonzeroSpinor::from_reals(1e-200, 0.0).is_ok());
    }

    #[test]
    fn f_map_basis_spinors() {
        let s = f_map(&k(c(1.0, 0.0), c(0.0, 0.0)));
        assert_eq!((s.a, s.d, s.b), (1.0, 0.0, c(0.0, 0.0)));
        let s = f_map(&k(c(0.0, 0.0), c(1.0, 0.0)));
        assert_eq!((s.a, s.d, s.b), (0.0, 1.0, c(0.0, 0.0)));
    }

    #[test]
    fn f_map_real_coordinates() {
        // off-diagonal of f(a+bi, c+di) is (ac+bd) + (bc-ad)i
        let (a, b, cc, d) = (0.7, -1.3, 2.1, 0.4);
        let s = f_map(&k(c(a, b), c(cc, d)));
        assert!(TOL.eq_c64(s.b, c(a * cc + b * d, b * cc - a * d)));
        assert!(TOL.eq_f64(s.a, a * a + b * b));
        assert!(TOL.eq_f64(s.d, cc * cc + d * d));
    }

    #[test]
    fn f_map_lands_in_h0_pos() {
        let s = f_map(&k(c(0.3, 1.2), c(-0.8, 0.5)));
        assert_eq!(classify_hermitian(&s, TOL), ConeClass::H0Pos);
    }

    #[test]
    fn f_map_phase_invariant() {
        let kk = k(c(0.3, 1.2), c(-0.8, 0.5));
        let rot = kk.scale(Complex64::from_polar(1.0, 0.77)).unwrap();
        assert!(f_map(&kk).approx_eq(&f_map(&rot), TOL));
    }

    #[test]
    fn zeta_basis_values() {
        let z = zeta(&Spinor::from_reals(1.0, 0.0));
        assert_eq!((z.xi, z.eta), (c(0.0, 0.0), c(0.0, -1.0)));
        let z = zeta(&Spinor::from_reals(0.0, 1.0));
        assert_eq!((z.xi, z.eta), (c(0.0, 1.0), c(0.0, 0.0)));
    }

    #[test]
    fn zeta_pairing_is_negative_imaginary() {
        let kk = Spinor::new(c(0.3, 1.2), c(-0.8, 0.5));
        let got = inner_product(&kk, &zeta(&kk));
        assert!(TOL.eq_c64(got, c(0.0, -kk.norm_sqr())));
    }

    #[test]
    fn classify_cone_examples() {
        let diag = |a, d| Hermitian2::new(a, d, c(0.0, 0.0));
        assert_eq!(classify_hermitian(&diag(1.0, 0.0), TOL), ConeClass::H0Pos);
        assert_eq!(classify_hermitian(&Hermitian2::zero(), TOL), ConeClass::H0Nonneg);
        assert_eq!(classify_hermitian(&diag(1.0, 1.0), TOL), ConeClass::Generic);
        assert_eq!(classify_hermitian(&diag(-1.0, 0.0), TOL), ConeClass::H0);
        assert!(classify_hermitian(&Hermitian2::zero(), TOL).in_h0());
    }

    #[test]
    fn classify_scale_invariant() {
        let s = f_map(&k(c(0.3, 1.2), c(-0.8, 0.5)));
        assert_eq!(classify_hermitian(&(1e8 * s), TOL), ConeClass::H0Pos);
        assert_eq!(classify_hermitian(&(1e-8 * s), TOL), ConeClass::H0Pos);
    }

    #[test]
    fn sl2c_validates_determinant() {
        let bad = SL2C::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.1, 0.0));
        assert!(matches!(bad, Err(Error::NotUnimodular { .. })));
        assert!(SL2C::new(c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).is_ok());
    }

    #[test]
    fn sl2c_inverse_and_product() {
        let a = SL2C::new(c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        let prod = a * a.inverse();
        assert!(TOL.eq_c64(prod.a, c(1.0, 0.0)));
        assert!(TOL.eq_c64(prod.b, c(0.0, 0.0)));
        assert!(TOL.eq_c64(prod.det(), c(1.0, 0.0)));
    }

    #[test]
    fn act_spinor_rotation_generator() {
        // [[0,-1],[1,0]] sends (1,0) to (0,1)
        let a = SL2C::new(c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let img = act_spinor(&a, &Spinor::from_reals(1.0, 0.0));
        assert_eq!((img.xi, img.eta), (c(0.0, 0.0), c(1.0, 0.0)));
    }

    #[test]
    fn act_identity_fixes_everything() {
        let id = SL2C::identity();
        let kk = Spinor::new(c(0.3, 1.2), c(-0.8, 0.5));
        assert_eq!(act_spinor(&id, &kk), kk);
        let s = Hermitian2::new(1.5, 0.25, c(0.3, -0.7));
        let img = act_hermitian(&id, &s);
        assert!(s.approx_eq(&img, TOL));
    }

    #[test]
    fn action_preserves_inner_product() {
        let a = SL2C::new(c(1.3, 0.2), c(-0.4, 1.1), c(0.7, -0.3), cdet(1.3, 0.2, -0.4, 1.1, 0.7, -0.3)).unwrap();
        let k1 = Spinor::new(c(0.3, -1.7), c(2.2, 0.9));
        let k2 = Spinor::new(c(-1.1, 0.4), c(0.6, -2.3));
        let lhs = inner_product(&act_spinor(&a, &k1), &act_spinor(&a, &k2));
        let rhs = inner_product(&k1, &k2);
        assert!((lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1.0));
    }

    // Solve for the (2,2) entry making det = 1 exactly enough for SL2C::new.
    fn cdet(ar: f64, ai: f64, br: f64, bi: f64, cr: f64, ci: f64) -> Complex64 {
        let (a, b, cc) = (c(ar, ai), c(br, bi), c(cr, ci));
        (Complex64::new(1.0, 0.0) + b * cc) / a
    }

    #[test]
    fn act_hermitian_matches_outer_product_action() {
        // A·f(k) = f(A·k)
        let a = SL2C::new(c(1.3, 0.2), c(-0.4, 1.1), c(0.7, -0.3), cdet(1.3, 0.2, -0.4, 1.1, 0.7, -0.3)).unwrap();
        let kk = k(c(0.3, -1.7), c(2.2, 0.9));
        let lhs = act_hermitian(&a, &f_map(&kk));
        let rhs = f_map(&a.act_nonzero(&kk));
        assert!(lhs.approx_eq(&rhs, TOL));
    }

    #[test]
    fn derivative_radial_and_phase_directions() {
        let kk = Spinor::from_reals(1.0, 0.0);
        // D_k f(k) = 2 f(k)
        let s = derivative_f(&kk, &kk);
        assert_eq!((s.a, s.d, s.b), (2.0, 0.0, c(0.0, 0.0)));
        // D_k f(ik) = 0
        let s = derivative_f(&kk, &Spinor::new(c(0.0, 1.0), c(0.0, 0.0)));
        assert!(s.approx_eq(&Hermitian2::zero(), TOL));
    }

    #[test]
    fn derivative_in_zeta_direction() {
        // k = (1,0), v = zeta(k) = (0,-i): D_k f(v) = [[0, i], [-i, 0]]
        let kk = Spinor::from_reals(1.0, 0.0);
        let s = derivative_f(&kk, &zeta(&kk));
        assert_eq!((s.a, s.d), (0.0, 0.0));
        assert_eq!(s.b, c(0.0, 1.0));
    }

    #[test]
    fn derivative_general_radial_identity() {
        let kk = Spinor::new(c(0.3, -1.7), c(2.2, 0.9));
        let s = derivative_f(&kk, &kk);
        let f = f_map(&NonzeroSpinor::new(kk).unwrap());
        assert!(s.approx_eq(&(2.0 * f), TOL));
    }
}
