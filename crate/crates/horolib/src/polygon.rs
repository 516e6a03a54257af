//! Ideal polygons and tetrahedra: the Ptolemy identity, shape parameters,
//! and classification of spinor matrices by rank, minors, and positivity.
//!
//! A collection of d spinors forms the columns of a 2×d matrix whose 2×2
//! minors are exactly the pairwise inner products {κᵢ, κⱼ}. Rank and
//! positivity conditions on the minors translate to geometric conditions on
//! the decorated horospheres: rank 2 means at least two distinct centers,
//! all minors nonzero means pairwise-distinct centers, and (for real
//! matrices) all ordered minors positive — total positivity — means the
//! decorations are spin-coherent and the centers sit in cyclic decreasing
//! order on ℝ ∪ {∞}.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::models::BoundaryPointU;
use crate::spinor::{inner_product, NonzeroSpinor, Spinor};
use crate::tolerance::Tolerance;

/// Scalar field of a spinor matrix: real entries model planar (2D)
/// configurations, complex entries general ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarTag {
    Real,
    Complex,
}

/// 2×d matrix of spinor columns, d ≥ 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorMatrix {
    columns: Vec<Spinor>,
    tag: ScalarTag,
}

impl SpinorMatrix {
    /// Real-tagged matrices must have all imaginary parts below the
    /// absolute tolerance.
    pub fn new(columns: Vec<Spinor>, tag: ScalarTag, tol: Tolerance) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        if tag == ScalarTag::Real {
            for col in &columns {
                let magnitude = col.xi.im.abs().max(col.eta.im.abs());
                if magnitude > tol.atol {
                    return Err(Error::NotReal { magnitude });
                }
            }
        }
        Ok(Self { columns, tag })
    }

    pub fn columns(&self) -> &[Spinor] {
        &self.columns
    }

    pub fn tag(&self) -> ScalarTag {
        self.tag
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }
}

/// Classes of spinor matrices, ordered from weakest to strongest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PolygonClass {
    /// Any matrix of nonzero columns (rank may be 1).
    Generalized,
    /// Rank 2: some 2×2 minor is nonzero.
    Nondegenerate,
    /// Every 2×2 minor is nonzero: pairwise-distinct centers.
    Ideal,
    /// Real matrix with every ordered minor det(κᵢ κⱼ) > 0 for i < j
    /// (total positivity).
    SpinCoherent,
}

/// Strongest class the matrix satisfies. A minor counts as nonzero when
/// |det| > rtol·‖κᵢ‖‖κⱼ‖, a scale-invariant predicate. Complex-tagged
/// matrices cap at `Ideal`: positivity has no meaning there.
pub fn classify_polygon_matrix(m: &SpinorMatrix, tol: Tolerance) -> Result<PolygonClass> {
    for (index, col) in m.columns().iter().enumerate() {
        if col.norm_sqr() == 0.0 {
            return Err(Error::ZeroColumn { index });
        }
    }
    let norms: Vec<f64> = m.columns().iter().map(|c| c.norm_sqr().sqrt()).collect();
    let d = m.num_columns();

    let mut rank2 = false;
    let mut all_nonzero = d >= 2;
    let mut all_positive = d >= 2;
    for i in 0..d {
        for j in (i + 1)..d {
            let minor = inner_product(&m.columns()[i], &m.columns()[j]);
            let threshold = tol.rtol * norms[i] * norms[j];
            if minor.norm() > threshold {
                rank2 = true;
            } else {
                all_nonzero = false;
            }
            if minor.re <= threshold {
                all_positive = false;
            }
        }
    }

    if !rank2 {
        return Ok(PolygonClass::Generalized);
    }
    if !all_nonzero {
        return Ok(PolygonClass::Nondegenerate);
    }
    if m.tag() == ScalarTag::Real && all_positive {
        return Ok(PolygonClass::SpinCoherent);
    }
    Ok(PolygonClass::Ideal)
}

/// True iff the points are a cyclic rotation of a strictly decreasing
/// sequence on ℝ ∪ {∞}, with ∞ greatest. Repeated points (including value
/// ties) are an error, and every point must lie on ℝ ∪ {∞}.
pub fn vertices_in_order(points: &[BoundaryPointU], tol: Tolerance) -> Result<bool> {
    let mut keys = Vec::with_capacity(points.len());
    for p in points {
        keys.push(match p {
            BoundaryPointU::Infinity => f64::INFINITY,
            BoundaryPointU::Finite(z) => {
                if z.im.abs() > tol.margin(z.norm()) {
                    return Err(Error::NotRealBoundary { magnitude: z.im.abs() });
                }
                z.re
            }
        });
    }
    for i in 0..keys.len() {
        for j in (i + 1)..keys.len() {
            if keys[i] == keys[j] {
                return Err(Error::RepeatedPoint { first: i, second: j });
            }
        }
    }
    if keys.len() <= 1 {
        return Ok(true);
    }
    let max_at = keys
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("nonempty")
        .0;
    Ok((1..keys.len()).all(|s| keys[(max_at + s - 1) % keys.len()] > keys[(max_at + s) % keys.len()]))
}

/// λ01λ23 + λ03λ12 − λ02λ13: the Ptolemy / Plücker residual, identically
/// zero up to rounding.
pub fn ptolemy_residual(
    k0: &NonzeroSpinor,
    k1: &NonzeroSpinor,
    k2: &NonzeroSpinor,
    k3: &NonzeroSpinor,
) -> Complex64 {
    let l01 = inner_product(k0, k1);
    let l02 = inner_product(k0, k2);
    let l03 = inner_product(k0, k3);
    let l12 = inner_product(k1, k2);
    let l13 = inner_product(k1, k3);
    let l23 = inner_product(k2, k3);
    l01 * l23 + l03 * l12 - l02 * l13
}

/// Shape parameters of the ideal tetrahedron on four decorated vertices:
/// the cross-ratio z at edge 01|23 and its companions at the other two
/// edge pairs. Always z′ = 1/(1−z), z″ = (z−1)/z, and z + 1/z′ = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeTriple {
    pub z: Complex64,
    pub z_prime: Complex64,
    pub z_dprime: Complex64,
}

/// z = λ02λ13/(λ03λ12), z′ = −λ03λ12/(λ01λ23), z″ = λ01λ23/(λ02λ13).
/// Errors when any λᵢⱼ vanishes (two vertices share a center).
pub fn shape_parameters(
    k0: &NonzeroSpinor,
    k1: &NonzeroSpinor,
    k2: &NonzeroSpinor,
    k3: &NonzeroSpinor,
    tol: Tolerance,
) -> Result<ShapeTriple> {
    let ks = [k0, k1, k2, k3];
    let mut l = [[Complex64::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in (i + 1)..4 {
            let lam = inner_product(ks[i], ks[j]);
            let scale = ks[i].norm_sqr().sqrt() * ks[j].norm_sqr().sqrt();
            if lam.norm() <= tol.margin(scale) {
                return Err(Error::DegenerateTetrahedron);
            }
            l[i][j] = lam;
        }
    }
    Ok(ShapeTriple {
        z: l[0][2] * l[1][3] / (l[0][3] * l[1][2]),
        z_prime: -(l[0][3] * l[1][2]) / (l[0][1] * l[2][3]),
        z_dprime: l[0][1] * l[2][3] / (l[0][2] * l[1][3]),
    })
}
