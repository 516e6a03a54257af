//! Spinors, null flags, and decorated horospheres in hyperbolic 3-space.
//!
//! A two-component complex spinor κ = (ξ, η) ≠ 0 determines, in turn:
//!
//! * a positive-semidefinite Hermitian matrix κκ* ([`spinor`]),
//! * a point on the future light cone of Minkowski space ℝ^{1,3} together
//!   with a null flag — an oriented tangent 2-plane ([`minkowski`]),
//! * a horosphere in hyperbolic 3-space carrying a parallel tangent line
//!   field, realized in the hyperboloid, disc, and upper half-space models
//!   ([`models`]).
//!
//! The inner product {κ₁, κ₂} = ξ₁η₂ − ξ₂η₁ equals the lambda length
//! exp(d/2) of the complex distance d = ρ + iθ between the two decorated
//! horospheres ([`lambda`]), which yields Ptolemy and shape-parameter
//! identities for ideal tetrahedra, total-positivity criteria for ideal
//! polygons, and the classical Ford circles ([`polygon`], [`ford`]).
//!
//! Every map is implemented in closed form over `f64` complex scalars; all
//! approximate comparisons go through [`Tolerance`].

pub mod error;
pub mod ford;
pub mod lambda;
pub mod minkowski;
pub mod models;
pub mod polygon;
pub mod spinor;
pub mod tolerance;

pub use error::{Error, Result};
pub use ford::{farey_enumerate, ford_distance, ford_tangent, mediant, FordCircle};
pub use lambda::{
    complex_distance_geometric, complex_distance_spin, lambda, AngleMode, ComplexDistance,
    LambdaLength,
};
pub use minkowski::{
    act_flag, act_minkowski, flag_of_spinor, flags_equal, frame_basis, gf, g_inv, g_map,
    hopf_stereo, hopf_then_stereo, mink_inner, spinor_mink_identity, CelestialPoint, Flag, MinkVec,
    Vec3,
};
pub use models::{
    dist_horospheres, dist_horospheres_tol, dist_point_horosphere, hopf, horosphere_of_spinor,
    i_boundary, i_interior, j_boundary, j_interior, mobius_apply, mobius_act_horosphere,
    on_horosphere, spinor_of_horosphere, stereo_to_sphere, BoundaryPointU, DecoratedHorosphereU,
    HorosphereH, SpinDecoratedHorosphereU,
};
pub use polygon::{
    classify_polygon_matrix, ptolemy_residual, shape_parameters, vertices_in_order, PolygonClass,
    ScalarTag, ShapeTriple, SpinorMatrix,
};
pub use spinor::{
    act_hermitian, act_spinor, classify_hermitian, derivative_f, f_map, inner_product, zeta,
    ConeClass, Hermitian2, NonzeroSpinor, Spinor, SL2C,
};
pub use tolerance::Tolerance;
