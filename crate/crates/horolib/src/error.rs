//! Error type shared by every fallible operation in the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero spinor: |xi|^2 + |eta|^2 must be positive")]
    ZeroSpinor,

    #[error("determinant is not 1: |det - 1| = {residual:.3e} exceeds {tol:.3e}")]
    NotUnimodular { residual: f64, tol: f64 },

    #[error("vector is not on the future light cone: <p,p> = {norm_sqr:.3e}, T = {t:.3e}")]
    NotFutureLightlike { norm_sqr: f64, t: f64 },

    #[error("point is not on the hyperboloid sheet: <q,q> = {norm_sqr:.3e}, T = {t:.3e}")]
    NotOnHyperboloid { norm_sqr: f64, t: f64 },

    #[error("spinor norm^2 = {norm_sqr:.6} is not 1")]
    NotUnitSpinor { norm_sqr: f64 },

    #[error("vector norm {norm:.6} is not 1")]
    NotUnitVector { norm: f64 },

    #[error("vector norm {norm:.6} is not inside the unit ball")]
    NotInUnitBall { norm: f64 },

    #[error("flag direction is parallel to the base point")]
    DegenerateFlagDirection,

    #[error("flag direction is not tangent to the light cone at the base point (residual {residual:.3e})")]
    FlagDirectionNotTangent { residual: f64 },

    #[error("decoration must be a nonzero complex number")]
    ZeroDecoration,

    #[error("degenerate tetrahedron")]
    DegenerateTetrahedron,

    #[error("spinor matrix must have at least one column")]
    EmptyMatrix,

    #[error("zero column at index {index}")]
    ZeroColumn { index: usize },

    #[error("matrix tagged real has an imaginary entry of magnitude {magnitude:.3e}")]
    NotReal { magnitude: f64 },

    #[error("boundary points must be real or infinity (got imaginary part {magnitude:.3e})")]
    NotRealBoundary { magnitude: f64 },

    #[error("repeated boundary point at indices {first} and {second}")]
    RepeatedPoint { first: usize, second: usize },

    #[error("{p}/{q} is not reduced: gcd must be 1")]
    NotCoprime { p: i64, q: i64 },

    #[error("circles coincide: determinant is zero")]
    SameCircle,

    #[error("depth {depth} exceeds the maximum {max}")]
    DepthTooLarge { depth: u32, max: u32 },

    #[error("integer overflow in exact arithmetic")]
    Overflow,
}
