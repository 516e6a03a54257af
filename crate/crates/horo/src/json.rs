//! JSON views of the library types: complex numbers as {"re", "im"}
//! objects, ∞ as the string "inf", distance −∞ as "-inf". Every float is
//! rounded to 12 significant digits at construction, so serializing is
//! deterministic and parse → serialize is byte-stable.

use horolib::{
    BoundaryPointU, DecoratedHorosphereU, Flag, MinkVec, NonzeroSpinor, Spinor, Tolerance,
};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Round to 12 significant digits; collapses −0 to 0.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatted float")
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("no non-finite floats reach the serializer")
}

fn from_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T, CliError> {
    serde_json::from_str(s).map_err(|e| CliError::Parse(e.to_string()))
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl ComplexJson {
    pub fn of(z: Complex64) -> Self {
        Self { re: sig12(z.re), im: sig12(z.im) }
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct SpinorJson {
    pub xi: ComplexJson,
    pub eta: ComplexJson,
}

impl SpinorJson {
    pub fn of(s: &Spinor) -> Self {
        Self { xi: ComplexJson::of(s.xi), eta: ComplexJson::of(s.eta) }
    }
}

pub fn spinor_to_json(s: &Spinor) -> String {
    to_json(&SpinorJson::of(s))
}

pub fn spinor_from_json(s: &str) -> Result<NonzeroSpinor, CliError> {
    let j: SpinorJson = from_str(s)?;
    Ok(NonzeroSpinor::from_components(j.xi.value(), j.eta.value())?)
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct MinkVecJson {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl MinkVecJson {
    pub fn of(p: &MinkVec) -> Self {
        Self { t: sig12(p.t), x: sig12(p.x), y: sig12(p.y), z: sig12(p.z) }
    }

    pub fn value(&self) -> MinkVec {
        MinkVec::new(self.t, self.x, self.y, self.z)
    }
}

pub fn mink_to_json(p: &MinkVec) -> String {
    to_json(&MinkVecJson::of(p))
}

pub fn mink_from_json(s: &str) -> Result<MinkVec, CliError> {
    Ok(from_str::<MinkVecJson>(s)?.value())
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct FlagJson {
    pub base: MinkVecJson,
    pub dir: MinkVecJson,
}

impl FlagJson {
    pub fn of(f: &Flag) -> Self {
        Self { base: MinkVecJson::of(&f.base()), dir: MinkVecJson::of(&f.dir()) }
    }
}

pub fn flag_to_json(f: &Flag) -> String {
    to_json(&FlagJson::of(f))
}

pub fn flag_from_json(s: &str, tol: Tolerance) -> Result<Flag, CliError> {
    let j: FlagJson = from_str(s)?;
    Ok(Flag::new(j.base.value(), j.dir.value(), tol)?)
}

/// Either the string "inf" or a finite complex point.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(untagged)]
pub enum CenterJson {
    Word(String),
    Finite(ComplexJson),
}

impl CenterJson {
    pub fn of(b: &BoundaryPointU) -> Self {
        match b {
            BoundaryPointU::Infinity => Self::Word("inf".to_string()),
            BoundaryPointU::Finite(z) => Self::Finite(ComplexJson::of(*z)),
        }
    }

    pub fn value(&self) -> Result<BoundaryPointU, CliError> {
        match self {
            Self::Word(w) if w == "inf" => Ok(BoundaryPointU::Infinity),
            Self::Word(w) => Err(CliError::Parse(format!("invalid center '{w}', expected \"inf\""))),
            Self::Finite(z) => Ok(BoundaryPointU::Finite(z.value())),
        }
    }
}

/// A float that may be −∞, serialized as the string "-inf".
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(untagged)]
pub enum ExtendedReal {
    Word(String),
    Value(f64),
}

impl ExtendedReal {
    pub fn of(x: f64) -> Self {
        if x == f64::NEG_INFINITY {
            Self::Word("-inf".to_string())
        } else {
            Self::Value(sig12(x))
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct HorosphereJson {
    pub center: CenterJson,
    pub delta: ComplexJson,
    pub size: f64,
}

impl HorosphereJson {
    pub fn of(h: &DecoratedHorosphereU) -> Self {
        Self {
            center: CenterJson::of(&h.center()),
            delta: ComplexJson::of(h.delta()),
            size: sig12(h.size()),
        }
    }

    /// Center and decoration determine the horosphere; `size` is derived.
    pub fn value(&self) -> Result<DecoratedHorosphereU, CliError> {
        Ok(DecoratedHorosphereU::new(self.center.value()?, self.delta.value())?)
    }
}

pub fn horosphere_to_json(h: &DecoratedHorosphereU) -> String {
    to_json(&HorosphereJson::of(h))
}

pub fn horosphere_from_json(s: &str) -> Result<DecoratedHorosphereU, CliError> {
    from_str::<HorosphereJson>(s)?.value()
}

// ---- per-subcommand result documents (field order is the output order) ----

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MapOut {
    pub spinor: SpinorJson,
    pub cone_point: MinkVecJson,
    pub flag: FlagJson,
    pub horosphere: HorosphereJson,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct LambdaOut {
    pub lambda: ComplexJson,
    pub rho: ExtendedReal,
    pub theta_mod_2pi: Option<f64>,
    pub theta_mod_4pi: Option<f64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ShapeJson {
    pub z: ComplexJson,
    pub z_prime: ComplexJson,
    pub z_dprime: ComplexJson,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PtolemyOut {
    pub residual: ComplexJson,
    pub shape: ShapeJson,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ClassifyOut {
    pub columns: usize,
    pub tag: String,
    pub class: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct FordCircleJson {
    pub p: i64,
    pub q: i64,
    pub center: CenterJson,
    pub diameter: f64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct FordOut {
    pub depth: u32,
    pub count: usize,
    pub circles: Vec<FordCircleJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct SceneOut {
    pub count: usize,
    pub horospheres: Vec<HorosphereJson>,
    pub svg: String,
}
