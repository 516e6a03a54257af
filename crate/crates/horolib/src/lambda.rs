//! Lambda lengths and complex distances between decorated horospheres.
//!
//! The complex distance between two decorated horospheres with distinct
//! centers is d = ρ + iθ: translate distance ρ along the common
//! perpendicular geodesic, then rotate by θ to carry one decoration to the
//! other. θ is defined mod 2π for decorated horospheres and mod 4π for
//! spin-decorated ones. The lambda length is λ = exp(d/2), and for spinor
//! representatives it equals the inner product: λ₁₂ = {κ₁, κ₂}.
//!
//! Two independent computations are provided: [`complex_distance_spin`]
//! reads d from the inner product, while [`complex_distance_geometric`]
//! never sees the spinors — it moves the pair into standard position with
//! a Möbius map built from the two centers alone and reads d off the
//! normalized decorations.

use num_complex::Complex64;

use crate::models::{
    horosphere_of_spinor, spinor_of_horosphere, BoundaryPointU, DecoratedHorosphereU,
};
use crate::spinor::{inner_product, NonzeroSpinor, Spinor, SL2C};
use crate::tolerance::Tolerance;

/// Which multiple of 2π the rotation angle is defined modulo.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleMode {
    /// θ mod 2π (decorated horospheres).
    Decorated,
    /// θ mod 4π (spin-decorated horospheres).
    Spin,
}

impl AngleMode {
    pub fn period(self) -> f64 {
        match self {
            AngleMode::Decorated => std::f64::consts::TAU,
            AngleMode::Spin => 2.0 * std::f64::consts::TAU,
        }
    }
}

/// d = ρ + iθ with θ normalized into [0, period); ρ = −∞ exactly when the
/// two horospheres share a center (flagged separately).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexDistance {
    rho: f64,
    theta: f64,
    mode: AngleMode,
    same_center: bool,
}

impl ComplexDistance {
    pub fn new(rho: f64, theta: f64, mode: AngleMode) -> Self {
        let period = mode.period();
        let mut theta = theta.rem_euclid(period);
        if theta >= period {
            // rem_euclid may round up to the period for tiny negatives
            theta -= period;
        }
        Self { rho, theta, mode, same_center: false }
    }

    /// The ρ = −∞ value for a pair sharing a center.
    pub fn same_center(mode: AngleMode) -> Self {
        Self { rho: f64::NEG_INFINITY, theta: 0.0, mode, same_center: true }
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn mode(&self) -> AngleMode {
        self.mode
    }

    pub fn is_same_center(&self) -> bool {
        self.same_center
    }

    /// θ reduced to [0, 2π), forgetting spin.
    pub fn theta_mod_2pi(&self) -> f64 {
        let tau = std::f64::consts::TAU;
        let mut th = self.theta.rem_euclid(tau);
        if th >= tau {
            th -= tau;
        }
        th
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.rho, self.theta)
    }

    /// exp(d); equals λ² in spin mode and 0 for a same-center pair.
    pub fn exp(&self) -> Complex64 {
        Complex64::from_polar(self.rho.exp(), self.theta)
    }
}

/// λ = exp(d/2); zero exactly for proportional spinors (shared center).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaLength {
    pub value: Complex64,
}

impl LambdaLength {
    /// Pairs below this modulus are treated as too close to degenerate for
    /// oracle comparisons.
    pub const DEGENERATE_THRESHOLD: f64 = 1e-6;

    pub fn modulus(&self) -> f64 {
        self.value.norm()
    }

    pub fn is_near_degenerate(&self) -> bool {
        self.value.norm() < Self::DEGENERATE_THRESHOLD
    }
}

/// λ₁₂ = {κ₁, κ₂}. Antisymmetric; invariant under the simultaneous
/// SL(2,ℂ) action.
pub fn lambda(k1: &NonzeroSpinor, k2: &NonzeroSpinor) -> LambdaLength {
    LambdaLength { value: inner_product(k1, k2) }
}

/// d = 2·Log λ with θ in [0, 4π): the complex distance of the two
/// spin-decorated horospheres represented by the spinors.
pub fn complex_distance_spin(k1: &NonzeroSpinor, k2: &NonzeroSpinor, tol: Tolerance) -> ComplexDistance {
    let lam = inner_product(k1, k2);
    if lam.norm() <= tol.atol {
        return ComplexDistance::same_center(AngleMode::Spin);
    }
    ComplexDistance::new(2.0 * lam.norm().ln(), 2.0 * lam.arg(), AngleMode::Spin)
}

/// Möbius map sending c1 → ∞ and c2 → 0, built from the centers only.
///
/// Both finite: m(z) = 1/(z−z1) − 1/(z2−z1), scaled into SL(2,ℂ); the sign
/// ambiguity of the scaling square root is invisible to the action on
/// decorated horospheres. The determinant check is relaxed to 1e−9: for
/// widely separated centers the entries accumulate a few ulps of relative
/// rounding, and the action used here is projective.
fn normalizing_mobius(c1: &BoundaryPointU, c2: &BoundaryPointU) -> SL2C {
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let (a, b, c, d) = match (c1, c2) {
        (BoundaryPointU::Finite(z1), BoundaryPointU::Finite(z2)) => {
            let w = z2 - z1;
            let s = (i * w).inv();
            (-s, s * z2, s * w, -s * w * z1)
        }
        // z − z2 fixes ∞ and kills z2
        (BoundaryPointU::Infinity, BoundaryPointU::Finite(z2)) => (one, -z2, zero, one),
        // 1/(z − z1) swaps z1 and ∞
        (BoundaryPointU::Finite(z1), BoundaryPointU::Infinity) => (zero, -i, -i, i * z1),
        (BoundaryPointU::Infinity, BoundaryPointU::Infinity) => {
            unreachable!("distinct centers required")
        }
    };
    SL2C::new_with_tol(a, b, c, d, 1e-9).expect("determinant is 1 by construction")
}

/// Zero out an η that vanishes mathematically but carries rounding noise.
fn snap_eta(k: &NonzeroSpinor, tol: Tolerance) -> NonzeroSpinor {
    if k.eta.norm() <= tol.margin(k.norm_sqr().sqrt()) && k.xi.norm_sqr() > 0.0 {
        NonzeroSpinor::new(Spinor::new(k.xi, Complex64::new(0.0, 0.0))).expect("xi is nonzero")
    } else {
        *k
    }
}

/// Geometric computation of d = ρ + iθ (θ mod 2π), independent of the
/// spinor inner product.
///
/// A Möbius map built from the two centers alone sends them to ∞ and 0;
/// in that standard position the first horosphere is a plane with
/// decoration α at height |α| and the second a sphere at 0 with decoration
/// β and diameter |β|, and d = Log(α/β). The residual normalization
/// freedom scales α and β together, leaving d unchanged.
pub fn complex_distance_geometric(
    h1: &DecoratedHorosphereU,
    h2: &DecoratedHorosphereU,
    tol: Tolerance,
) -> ComplexDistance {
    if h1.center().approx_eq(&h2.center(), tol) {
        return ComplexDistance::same_center(AngleMode::Decorated);
    }
    let m = normalizing_mobius(&h1.center(), &h2.center());
    // Route through spinor representatives; the first image's η vanishes
    // mathematically (its center goes to ∞), so snap the rounding residue.
    let k1 = snap_eta(&m.act_nonzero(&spinor_of_horosphere(h1)), tol);
    let k2 = m.act_nonzero(&spinor_of_horosphere(h2));
    let plane = horosphere_of_spinor(&k1);
    let sphere = horosphere_of_spinor(&k2);
    debug_assert!(plane.is_plane());
    debug_assert!(!sphere.is_plane());
    let ratio = plane.delta() / sphere.delta();
    ComplexDistance::new(ratio.norm().ln(), ratio.arg(), AngleMode::Decorated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::gf;
    use crate::models::{dist_horospheres, mobius_act_horosphere, HorosphereH};

    const TOL: Tolerance = Tolerance::new(1e-12, 1e-9);
    const TAU: f64 = std::f64::consts::TAU;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn k(xi: Complex64, eta: Complex64) -> NonzeroSpinor {
        NonzeroSpinor::from_components(xi, eta).unwrap()
    }

    fn k10() -> NonzeroSpinor {
        k(c(1.0, 0.0), c(0.0, 0.0))
    }

    fn k01() -> NonzeroSpinor {
        k(c(0.0, 0.0), c(1.0, 0.0))
    }

    #[test]
    fn lambda_golden_values() {
        assert_eq!(lambda(&k10(), &k01()).value, c(1.0, 0.0));
        let d = c(-0.7, 2.3);
        assert_eq!(lambda(&k10(), &k(c(0.0, 0.0), d)).value, d);
        // proportional spinors: λ = 0
        let kk = k(c(0.3, -1.7), c(2.2, 0.9));
        let ck = kk.scale(c(1.4, -0.2)).unwrap();
        assert!(lambda(&kk, &ck).modulus() <= 1e-15 * kk.norm_sqr());
        assert!(lambda(&kk, &ck).is_near_degenerate());
    }

    #[test]
    fn lambda_antisymmetric_bit_exact() {
        let k1 = k(c(0.3, -1.7), c(2.2, 0.9));
        let k2 = k(c(-1.1, 0.4), c(0.6, -2.3));
        assert_eq!(lambda(&k1, &k2).value, -lambda(&k2, &k1).value);
    }

    #[test]
    fn spin_distance_golden_values() {
        let d = complex_distance_spin(&k10(), &k01(), TOL);
        assert_eq!((d.rho(), d.theta()), (0.0, 0.0));
        assert_eq!(d.mode(), AngleMode::Spin);

        // reversing the pair adds 2π to θ
        let d = complex_distance_spin(&k01(), &k10(), TOL);
        assert_eq!(d.rho(), 0.0);
        assert!(TOL.eq_f64(d.theta(), TAU));

        // (1,0), (0, e^{iπ/4}): ρ = 0, θ = π/2
        let d = complex_distance_spin(&k10(), &k(c(0.0, 0.0), Complex64::from_polar(1.0, TAU / 8.0)), TOL);
        assert!(TOL.is_zero(d.rho(), 1.0));
        assert!(TOL.eq_f64(d.theta(), TAU / 4.0));
    }

    #[test]
    fn spin_distance_antisymmetry_relation() {
        // d₁₂ = d₂₁ + 2πi mod 4πi
        let k1 = k(c(0.3, -1.7), c(2.2, 0.9));
        let k2 = k(c(-1.1, 0.4), c(0.6, -2.3));
        let d12 = complex_distance_spin(&k1, &k2, TOL);
        let d21 = complex_distance_spin(&k2, &k1, TOL);
        assert!(TOL.eq_f64(d12.rho(), d21.rho()));
        let diff = (d12.theta() - d21.theta() - TAU).rem_euclid(2.0 * TAU);
        assert!(diff < 1e-9 || diff > 2.0 * TAU - 1e-9, "diff = {diff}");
    }

    #[test]
    fn same_center_is_flagged() {
        let kk = k(c(0.3, -1.7), c(2.2, 0.9));
        let ck = kk.scale(c(1.4, -0.2)).unwrap();
        let d = complex_distance_spin(&kk, &ck, TOL);
        assert!(d.is_same_center());
        assert_eq!(d.rho(), f64::NEG_INFINITY);
        assert_eq!(d.exp(), c(0.0, 0.0));

        let g = complex_distance_geometric(
            &horosphere_of_spinor(&kk),
            &horosphere_of_spinor(&ck),
            TOL,
        );
        assert!(g.is_same_center());
        assert_eq!(g.rho(), f64::NEG_INFINITY);
    }

    #[test]
    fn geometric_distance_golden_values() {
        // height-1 plane vs unit-diameter sphere at 0: d = 0
        let d = complex_distance_geometric(
            &horosphere_of_spinor(&k10()),
            &horosphere_of_spinor(&k01()),
            TOL,
        );
        assert_eq!((d.rho(), d.theta()), (0.0, 0.0));
        assert_eq!(d.mode(), AngleMode::Decorated);

        // r e^{iθ}·(1,0) against (0,1): d = 2 log r + 2θi (mod 2πi)
        let (r, th) = (1.7, 0.4);
        let d = complex_distance_geometric(
            &horosphere_of_spinor(&k10().scale(Complex64::from_polar(r, th)).unwrap()),
            &horosphere_of_spinor(&k01()),
            TOL,
        );
        assert!(TOL.eq_f64(d.rho(), 2.0 * r.ln()));
        assert!(TOL.eq_f64(d.theta(), 2.0 * th));
    }

    #[test]
    fn geometric_matches_squared_lambda_all_center_cases() {
        let pairs = [
            // both centers finite
            (k(c(0.3, -1.7), c(2.2, 0.9)), k(c(-1.1, 0.4), c(0.6, -2.3))),
            // first center at ∞
            (k(c(1.3, 0.4), c(0.0, 0.0)), k(c(-1.1, 0.4), c(0.6, -2.3))),
            // second center at ∞
            (k(c(0.3, -1.7), c(2.2, 0.9)), k(c(0.2, -1.9), c(0.0, 0.0))),
        ];
        for (k1, k2) in pairs {
            let d = complex_distance_geometric(
                &horosphere_of_spinor(&k1),
                &horosphere_of_spinor(&k2),
                TOL,
            );
            let lam_sqr = inner_product(&k1, &k2).powi(2);
            let got = d.exp();
            assert!(
                (got - lam_sqr).norm() <= 1e-10 * lam_sqr.norm(),
                "exp(d) = {got}, λ² = {lam_sqr}"
            );
        }
    }

    #[test]
    fn geometric_and_spin_agree_mod_2pi() {
        let k1 = k(c(0.3, -1.7), c(2.2, 0.9));
        let k2 = k(c(-1.1, 0.4), c(0.6, -2.3));
        let ds = complex_distance_spin(&k1, &k2, TOL);
        let dg = complex_distance_geometric(
            &horosphere_of_spinor(&k1),
            &horosphere_of_spinor(&k2),
            TOL,
        );
        assert!(TOL.eq_f64(ds.rho(), dg.rho()));
        let diff = (ds.theta_mod_2pi() - dg.theta()).rem_euclid(TAU);
        assert!(diff < 1e-9 || diff > TAU - 1e-9, "diff = {diff}");
    }

    #[test]
    fn standard_position_ratio_ignores_residual_scaling() {
        // z ↦ μ²z preserves ∞ and 0; α/β must not move.
        let h1 = horosphere_of_spinor(&k10().scale(c(1.4, 0.3)).unwrap());
        let h2 = horosphere_of_spinor(&k01().scale(c(-0.2, 1.1)).unwrap());
        let base = complex_distance_geometric(&h1, &h2, TOL);
        let mu = c(0.9, -0.6);
        let b = SL2C::new(mu, c(0.0, 0.0), c(0.0, 0.0), mu.inv()).unwrap();
        let scaled = complex_distance_geometric(
            &mobius_act_horosphere(&b, &h1),
            &mobius_act_horosphere(&b, &h2),
            TOL,
        );
        assert!(TOL.eq_f64(base.rho(), scaled.rho()));
        let diff = (base.theta() - scaled.theta()).rem_euclid(TAU);
        assert!(diff < 1e-9 || diff > TAU - 1e-9, "diff = {diff}");
    }

    #[test]
    fn lambda_invariant_under_isometries() {
        let a = SL2C::new(
            c(1.3, 0.2),
            c(-0.4, 1.1),
            c(0.7, -0.3),
            (Complex64::new(1.0, 0.0) + c(-0.4, 1.1) * c(0.7, -0.3)) / c(1.3, 0.2),
        )
        .unwrap();
        let k1 = k(c(0.3, -1.7), c(2.2, 0.9));
        let k2 = k(c(-1.1, 0.4), c(0.6, -2.3));
        let before = lambda(&k1, &k2).value;
        let after = lambda(&a.act_nonzero(&k1), &a.act_nonzero(&k2)).value;
        assert!((before - after).norm() <= 1e-10 * before.norm());
    }

    #[test]
    fn modulus_law_matches_horosphere_distance() {
        // |λ|² = e^ρ with ρ from the hyperboloid-model distance
        let k1 = k(c(0.3, -1.7), c(2.2, 0.9));
        let k2 = k(c(-1.1, 0.4), c(0.6, -2.3));
        let h1 = HorosphereH::from_cone_point(gf(&k1), TOL).unwrap();
        let h2 = HorosphereH::from_cone_point(gf(&k2), TOL).unwrap();
        let rho = dist_horospheres(&h1, &h2);
        let lam2 = lambda(&k1, &k2).value.norm_sqr();
        assert!(TOL.eq_f64(rho.exp(), lam2));
    }
}
