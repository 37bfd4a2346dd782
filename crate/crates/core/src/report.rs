//! JSON documents emitted by the command-line tool. Every rational and every
//! big integer is written as a string (`"p/q"` or `"p"`).

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{serde_bigint, serde_rational, Rational};
use crate::error::Result;
use crate::families::{Family, FamilyTriangle};
use crate::geometry::{column_profile, lattice_point_count, LatticePoint, Triangle};
use crate::laurent::{newton_polygon, vanishing_order, LaurentPoly};
use crate::mds::{classify, d0_intersection, MdsStatus, Reason};
use crate::pell::PellSolution;
use crate::search::SearchReport;
use crate::solver::Irreducibility;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellReport {
    #[serde(with = "serde_bigint")]
    pub k: BigInt,
    pub solutions: Vec<PellSolution>,
}

/// Identifies a family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub family: Family,
    #[serde(with = "serde_bigint")]
    pub k: BigInt,
    #[serde(rename = "M", with = "serde_bigint")]
    pub big_m: BigInt,
    #[serde(rename = "N", with = "serde_bigint")]
    pub big_n: BigInt,
    #[serde(with = "serde_rational")]
    pub alpha: Rational,
    #[serde(with = "serde_rational")]
    pub beta: Rational,
}

impl Instance {
    pub fn of(t: &FamilyTriangle) -> Self {
        let s = t.solution();
        Self {
            family: t.kind(),
            k: s.k().clone(),
            big_m: s.m().clone(),
            big_n: s.n().clone(),
            alpha: t.alpha().clone(),
            beta: t.beta().clone(),
        }
    }

    pub fn to_triangle(&self) -> Result<FamilyTriangle> {
        let s = PellSolution::new(self.k.clone(), self.big_m.clone(), self.big_n.clone())?;
        FamilyTriangle::new(self.family, s, self.alpha.clone(), self.beta.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleReport {
    pub instance: Instance,
    pub vertices: Triangle,
    #[serde(with = "serde_bigint")]
    pub m: BigInt,
    #[serde(with = "serde_bigint")]
    pub h: BigInt,
    #[serde(with = "serde_rational")]
    pub b: Rational,
    pub lattice_count: u64,
    pub column_profile: Vec<u64>,
    pub multiplicities: [String; 3],
    #[serde(with = "serde_rational")]
    pub budget: Rational,
}

impl TriangleReport {
    pub fn new(t: &FamilyTriangle) -> Self {
        let mults = t.fan_multiplicities().0.map(|v| v.to_string());
        Self {
            instance: Instance::of(t),
            vertices: t.triangle().clone(),
            m: t.m(),
            h: t.h(),
            b: t.b(),
            lattice_count: lattice_point_count(t.triangle()),
            column_profile: column_profile(t.triangle()),
            multiplicities: mults,
            budget: t.negative_curve_budget(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Recurrence,
    Solver,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub instance: Instance,
    pub method: Method,
    pub polynomial: LaurentPoly,
    pub newton_polygon: Vec<LatticePoint>,
    pub vanishing_order: usize,
    #[serde(with = "serde_rational")]
    pub self_intersection: Rational,
    /// Present when the solver ran.
    pub irreducibility: Option<Irreducibility>,
    /// Present for `both`: whether the two methods produced the same polynomial.
    pub methods_agree: Option<bool>,
}

impl CurveReport {
    pub fn new(
        t: &FamilyTriangle,
        method: Method,
        poly: LaurentPoly,
        irreducibility: Option<Irreducibility>,
        methods_agree: Option<bool>,
    ) -> Result<Self> {
        let m = u32::try_from(t.m()).map_err(|_| crate::Error::Overflow)?;
        Ok(Self {
            instance: Instance::of(t),
            method,
            newton_polygon: newton_polygon(&poly)?.vertices().to_vec(),
            vanishing_order: vanishing_order(&poly)?,
            self_intersection: crate::solver::self_intersection(t.triangle(), m),
            polynomial: poly,
            irreducibility,
            methods_agree,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdsReport {
    pub instance: Instance,
    pub status: MdsStatus,
    pub reason: Reason,
    pub witness: Option<LaurentPoly>,
    #[serde(with = "serde_rational")]
    pub d0_intersection: Rational,
    #[serde(with = "serde_rational")]
    pub budget: Rational,
}

impl MdsReport {
    pub fn new(t: &FamilyTriangle) -> Result<Self> {
        let v = classify(t)?;
        Ok(Self {
            instance: Instance::of(t),
            status: v.status,
            reason: v.reason,
            witness: v.witness,
            d0_intersection: d0_intersection(t),
            budget: t.negative_curve_budget(),
        })
    }
}

/// One row of the invariant suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_m: u32,
    pub max_k: i64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Any document the tool emits, distinguished by its `kind` field.
// built once per command, so the size spread between variants does not matter
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Pell(PellReport),
    Triangle(TriangleReport),
    Curve(CurveReport),
    Mds(MdsReport),
    Search(SearchReport),
    Verify(VerifyReport),
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
