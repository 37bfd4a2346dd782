//! Mori Dream Space status of the blowup of an enlarged family triangle.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{to_i64, Rational};
use crate::error::{Error, Result};
use crate::families::{Family, FamilyTriangle};
use crate::geometry::twice_area;
use crate::laurent::{vanishing_order, LaurentPoly};
use crate::recurrence::xi;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MdsStatus {
    #[serde(rename = "MDS")]
    Mds,
    #[serde(rename = "NonMDS")]
    NonMds,
    Unknown,
}

impl fmt::Display for MdsStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MdsStatus::Mds => "MDS",
            MdsStatus::NonMds => "NonMDS",
            MdsStatus::Unknown => "Unknown",
        })
    }
}

/// Why a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// `α = 0`: `x^m (1-y)^h` cuts out a curve disjoint from the negative curve.
    AlphaZeroWitness,
    /// `β = 0`: a power of the neighbouring curve polynomial is the witness.
    BetaZeroWitness,
    /// `α, β > 0` and `h (b + 1/K) > m^2`.
    NonMdsInequality,
    /// `α, β > 0` with `N = 1` (integral) or `M + N = 1` (rational): no criterion applies.
    NoCriterion,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::AlphaZeroWitness => "alpha_zero_witness",
            Reason::BetaZeroWitness => "beta_zero_witness",
            Reason::NonMdsInequality => "nonmds_inequality",
            Reason::NoCriterion => "no_criterion",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdsVerdict {
    pub status: MdsStatus,
    pub witness: Option<LaurentPoly>,
    pub reason: Reason,
}

pub fn classify(t: &FamilyTriangle) -> Result<MdsVerdict> {
    let sum = t.alpha() + t.beta();
    let budget = t.negative_curve_budget();
    if sum > budget {
        return Err(Error::BudgetExceeded {
            sum: sum.to_string(),
            budget: budget.to_string(),
        });
    }
    if t.alpha().is_zero() || t.beta().is_zero() {
        let reason = if t.alpha().is_zero() {
            Reason::AlphaZeroWitness
        } else {
            Reason::BetaZeroWitness
        };
        return Ok(MdsVerdict {
            status: MdsStatus::Mds,
            witness: Some(mds_witness(t)?),
            reason,
        });
    }
    let s = t.solution();
    let criterion = match t.kind() {
        Family::Integral => s.n() > &BigInt::one(),
        Family::Rational => s.m() + s.n() > BigInt::one(),
    };
    Ok(if criterion {
        MdsVerdict {
            status: MdsStatus::NonMds,
            witness: None,
            reason: Reason::NonMdsInequality,
        }
    } else {
        MdsVerdict {
            status: MdsStatus::Unknown,
            witness: None,
            reason: Reason::NoCriterion,
        }
    })
}

fn u32_of(v: &BigInt) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Overflow)
}

/// A polynomial in the class orthogonal to the negative curve, when `α = 0` or `β = 0`.
pub fn mds_witness(t: &FamilyTriangle) -> Result<LaurentPoly> {
    if t.alpha().is_zero() {
        let one_minus_y = LaurentPoly::one() - LaurentPoly::y();
        let m = to_i64(&t.m())?;
        return Ok(one_minus_y.pow(u32_of(&t.h())?).shift(m, 0));
    }
    if !t.beta().is_zero() {
        return Err(Error::PreconditionFailed(
            "witness needs alpha = 0 or beta = 0".into(),
        ));
    }
    let s = t.solution();
    let key = (
        t.kind() == Family::Integral,
        s.k().clone(),
        s.m().clone(),
        s.n().clone(),
    );
    if let Some(w) = beta_witnesses().lock().expect("witness cache").get(&key) {
        return Ok(w.clone());
    }
    let w = match t.kind() {
        Family::Integral => xi(&s.tau()?)?.xi_rat.pow(u32_of(s.k())?),
        Family::Rational => xi(s)?.xi_int,
    };
    beta_witnesses()
        .lock()
        .expect("witness cache")
        .insert(key, w.clone());
    Ok(w)
}

type WitnessKey = (bool, BigInt, BigInt, BigInt);

/// The `β = 0` witness depends only on the family member, and the integral
/// one is a large power, so it is kept across calls.
fn beta_witnesses() -> &'static Mutex<HashMap<WitnessKey, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<WitnessKey, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Curve polynomial of the family member (strict transform on the enlargement).
pub fn curve_polynomial(t: &FamilyTriangle) -> Result<LaurentPoly> {
    let p = xi(t.solution())?;
    Ok(match t.kind() {
        Family::Integral => p.xi_int,
        Family::Rational => p.xi_rat,
    })
}

/// `D₀·C = H·H' - m h`, with `H·H'` the pairing of the triangle and its scaled copy.
pub fn d0_intersection(t: &FamilyTriangle) -> Rational {
    let m = Rational::from_integer(t.m());
    let h = Rational::from_integer(t.h());
    let scale = &m / t.base_length();
    twice_area(t.triangle()) * scale - m * h
}

/// `h (b + 1/K) > m^2`.
pub fn nonmds_inequality(t: &FamilyTriangle) -> bool {
    let m = Rational::from_integer(t.m());
    let h = Rational::from_integer(t.h());
    let k = Rational::from_integer(t.k().clone());
    h * (t.b() + k.recip()) > &m * &m
}

/// Checks that a witness lies in the class orthogonal to the negative curve
/// and has no common component with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub in_class_triangle: bool,
    pub order: usize,
    pub required_order: u64,
    pub shares_curve: bool,
}

impl WitnessCheck {
    pub fn passed(&self) -> bool {
        self.in_class_triangle && self.order as u64 >= self.required_order && !self.shares_curve
    }
}

pub fn check_witness(t: &FamilyTriangle, witness: &LaurentPoly) -> Result<WitnessCheck> {
    let class = t.class_triangle();
    let in_class_triangle = witness
        .support()
        .iter()
        .all(|p| class.contains(&p.to_point()));
    let order = vanishing_order(witness)?;
    let curve = curve_polynomial(t)?;
    let shares_curve = witness.exact_div(&curve).is_ok();
    let required_order = u64::try_from(t.h()).map_err(|_| Error::Overflow)?;
    Ok(WitnessCheck {
        in_class_triangle,
        order,
        required_order,
        shares_curve,
    })
}

/// Whether `α + β` stays within the negative-curve budget.
pub fn admissible(t: &FamilyTriangle) -> bool {
    !t.alpha().is_negative()
        && !t.beta().is_negative()
        && t.alpha() + t.beta() <= t.negative_curve_budget()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::families::{make_it, make_rt};
    use crate::pell::PellSolution;

    fn it(k: i64, m: i64, n: i64, a: Rational, b: Rational) -> FamilyTriangle {
        make_it(&PellSolution::new(k, m, n).unwrap(), a, b).unwrap()
    }

    fn rt(k: i64, m: i64, n: i64, a: Rational, b: Rational) -> FamilyTriangle {
        make_rt(&PellSolution::new(k, m, n).unwrap(), a, b).unwrap()
    }

    #[test]
    fn classify_examples() {
        let v = classify(&it(4, 2, 1, rat(0, 1), rat(1, 4))).unwrap();
        assert_eq!(
            (v.status, v.reason),
            (MdsStatus::Mds, Reason::AlphaZeroWitness)
        );
        let v = classify(&rt(4, 2, 1, rat(1, 24), rat(1, 24))).unwrap();
        assert_eq!(v.status, MdsStatus::NonMds);
        assert!(v.witness.is_none());
        let v = classify(&it(4, 2, 1, rat(1, 8), rat(1, 8))).unwrap();
        assert_eq!(
            (v.status, v.reason),
            (MdsStatus::Unknown, Reason::NoCriterion)
        );
        assert!(matches!(
            classify(&it(4, 2, 1, rat(1, 4), rat(1, 8))),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn witness_examples() {
        let w = mds_witness(&it(4, 2, 1, rat(0, 1), rat(0, 1))).unwrap();
        assert_eq!(
            w,
            "x^3 - 4*x^3*y + 6*x^3*y^2 - 4*x^3*y^3 + x^3*y^4"
                .parse()
                .unwrap()
        );
        let w = mds_witness(&it(4, 2, 1, rat(1, 8), rat(0, 1))).unwrap();
        assert_eq!(w, "1 - x*y".parse::<LaurentPoly>().unwrap().pow(4));
        let w = mds_witness(&rt(4, 2, 1, rat(1, 24), rat(0, 1))).unwrap();
        assert_eq!(w, xi(&PellSolution::new(4, 2, 1).unwrap()).unwrap().xi_int);
        assert!(matches!(
            mds_witness(&it(4, 2, 1, rat(1, 8), rat(1, 8))),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn witnesses_pass_checks() {
        for (k, m, n) in [(4, 2, 1), (5, 3, 1), (4, 3, 2), (5, 8, 3), (6, 4, 1)] {
            for kind in [Family::Integral, Family::Rational] {
                let base = FamilyTriangle::new(
                    kind,
                    PellSolution::new(k, m, n).unwrap(),
                    rat(0, 1),
                    rat(0, 1),
                )
                .unwrap();
                let budget = base.negative_curve_budget();
                for (a, b) in [
                    (rat(0, 1), budget.clone()),
                    (budget.clone(), rat(0, 1)),
                    (rat(0, 1), rat(0, 1)),
                ] {
                    let t = base.with_extension(a, b).unwrap();
                    let v = classify(&t).unwrap();
                    let c = check_witness(&t, v.witness.as_ref().unwrap()).unwrap();
                    assert!(c.passed(), "{} {:?} {:?}", t.label(), c, v.reason);
                }
            }
        }
    }

    #[test]
    fn d0_and_inequality_examples() {
        assert_eq!(
            d0_intersection(&it(4, 2, 1, rat(0, 1), rat(0, 1))),
            rat(0, 1)
        );
        assert_eq!(
            d0_intersection(&rt(4, 4, 3, rat(0, 1), rat(0, 1))),
            rat(0, 1)
        );
        assert_eq!(
            d0_intersection(&rt(4, 4, 3, rat(1, 100), rat(1, 90))),
            rat(0, 1)
        );
        assert!(nonmds_inequality(&rt(4, 2, 1, rat(1, 24), rat(1, 24))));
        assert!(!nonmds_inequality(&it(4, 2, 1, rat(1, 8), rat(1, 8))));
        assert!(nonmds_inequality(&it(4, 3, 2, rat(1, 32), rat(1, 32))));
    }
}
