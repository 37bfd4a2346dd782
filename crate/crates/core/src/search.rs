//! Exhaustive search over triangles `(0,0), (b,0), (m,h)` with integer
//! right-edge slope, within explicit bounds on `h` and the slope.

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{expected_point_count, serde_rational, Rational};
use crate::families::{Family, FamilyTriangle};
use crate::geometry::{
    lattice_point_count, lattice_polygon_isomorphism, lattice_polygon_normal_form,
    normal_fan_multiplicities, triangle_isomorphism, AffineLatticeMap, DaggerForm, LatticePoint,
    Triangle,
};
use crate::laurent::{newton_polygon, LaurentPoly};
use crate::pell::PellSolution;
use crate::solver::{solve_curve, solve_family, Irreducibility};

pub fn default_h_max(m: i64) -> i64 {
    4 * m * m
}

pub fn default_k_max(m: i64) -> i64 {
    m * m + 2
}

/// Every `(h, K)` cell passing the filters, in increasing `(h, K)` order.
pub fn enumerate_dagger_raw(m: i64, h_max: i64, k_max: i64) -> Vec<DaggerForm> {
    if m < 1 {
        return Vec::new();
    }
    let m2 = Rational::from_integer(BigInt::from(m * m));
    let need = expected_point_count(m as u64);
    (1..=h_max)
        .into_par_iter()
        .filter(|h| m.gcd(h) == 1)
        .map(|h| {
            // b > 0 needs K > h/m
            let k_min = h / m + 1;
            (k_min..=k_max)
                .filter_map(|k| {
                    let d = DaggerForm::new(m, h, k).ok()?;
                    let area2 = &d.b * Rational::from_integer(BigInt::from(h));
                    if area2 > m2 || d.b >= Rational::from_integer(BigInt::from(m)) {
                        return None;
                    }
                    (lattice_point_count(&d.triangle()) >= need).then_some(d)
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Representatives of [`enumerate_dagger_raw`] up to affine lattice isomorphism.
pub fn enumerate_dagger(m: i64, h_max: i64, k_max: i64) -> Vec<Triangle> {
    let raw: Vec<Triangle> = enumerate_dagger_raw(m, h_max, k_max)
        .iter()
        .map(DaggerForm::triangle)
        .collect();
    let (classes, _) = triangle_classes(&raw);
    classes.into_iter().map(|i| raw[i].clone()).collect()
}

/// Indices of class representatives and, per input, its class number.
fn triangle_classes(ts: &[Triangle]) -> (Vec<usize>, Vec<usize>) {
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(ts.len());
    let fans: Vec<[BigInt; 3]> = ts.iter().map(normal_fan_multiplicities).collect();
    for (i, t) in ts.iter().enumerate() {
        let found = reps
            .iter()
            .position(|&r| fans[r] == fans[i] && triangle_isomorphism(&ts[r], t).is_some());
        match found {
            Some(c) => class_of.push(c),
            None => {
                class_of.push(reps.len());
                reps.push(i);
            }
        }
    }
    (reps, class_of)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleEntry {
    pub h: i64,
    pub k: i64,
    #[serde(with = "serde_rational")]
    pub b: Rational,
    pub triangle: Triangle,
    pub lattice_count: u64,
    pub multiplicities: [String; 3],
    pub triangle_class: usize,
    /// Index into `curve_classes`, or `None` when the solver failed.
    pub curve_class: Option<usize>,
    pub solver_error: Option<String>,
    pub irreducibility: Option<Irreducibility>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMatch {
    pub family: Family,
    pub k: i64,
    #[serde(rename = "M")]
    pub big_m: i64,
    #[serde(rename = "N")]
    pub big_n: i64,
    /// Carries the class polynomial's Newton polygon onto the instance's.
    pub map: AffineLatticeMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClass {
    /// Index of the first triangle carrying this curve.
    pub representative: usize,
    pub polynomial: LaurentPoly,
    pub newton_polygon: Vec<LatticePoint>,
    pub normal_form: Vec<LatticePoint>,
    pub matches: Vec<FamilyMatch>,
    /// No family instance of the same order matched: a counterexample candidate.
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub m: i64,
    pub h_max: i64,
    pub k_max: i64,
    /// Scope statement: completeness is only claimed within the bounds.
    pub scope: String,
    pub triangles: Vec<TriangleEntry>,
    pub triangle_classes: usize,
    pub curve_classes: Vec<CurveClass>,
    pub counterexample_candidates: Vec<usize>,
}

impl SearchReport {
    pub fn curve_class_count(&self) -> usize {
        self.curve_classes.len()
    }

    /// Every triangle solved and every curve class matched.
    pub fn clean(&self) -> bool {
        self.counterexample_candidates.is_empty()
            && self.triangles.iter().all(|t| t.solver_error.is_none())
    }
}

/// Family members `IT(M,N)` with `M + N = m` and `RT(m,N)`, any `K ≥ 3`.
pub fn family_instances(m: i64) -> Vec<FamilyTriangle> {
    let zero = Rational::from_integer(BigInt::from(0));
    let mut out = Vec::new();
    let mut push = |kind: Family, k: i64, bm: i64, bn: i64| {
        if let Ok(s) = PellSolution::new(k, bm, bn) {
            if let Ok(t) = FamilyTriangle::new(kind, s, zero.clone(), zero.clone()) {
                out.push(t);
            }
        }
    };
    for bm in 1..m {
        let bn = m - bm;
        let num = m * m - 1;
        if num % (bm * bn) == 0 && num / (bm * bn) >= 3 {
            push(Family::Integral, num / (bm * bn), bm, bn);
        }
    }
    if m == 1 {
        push(Family::Rational, 3, 1, 0);
    }
    for bn in 1..m * m {
        let num = (m + bn) * (m + bn) - 1;
        if num % (m * bn) == 0 && num / (m * bn) >= 3 {
            push(Family::Rational, num / (m * bn), m, bn);
        }
    }
    out
}

pub fn verify_classification(m: i64, h_max: i64, k_max: i64) -> SearchReport {
    let forms = enumerate_dagger_raw(m, h_max, k_max);
    let tris: Vec<Triangle> = forms.iter().map(DaggerForm::triangle).collect();
    let (_, class_of) = triangle_classes(&tris);
    let solved: Vec<_> = tris.par_iter().map(|t| solve_curve(t, m as u32)).collect();

    let instances: Vec<(FamilyTriangle, Vec<LatticePoint>)> = family_instances(m)
        .into_iter()
        .filter_map(|ft| {
            let nc = solve_family(&ft).ok()?;
            let np = newton_polygon(&nc.poly).ok()?;
            Some((ft, np.vertices().to_vec()))
        })
        .collect();

    let mut curve_classes: Vec<CurveClass> = Vec::new();
    let mut triangles = Vec::with_capacity(tris.len());
    for (i, (d, t)) in forms.iter().zip(&tris).enumerate() {
        let mults = normal_fan_multiplicities(t).map(|v| v.to_string());
        let mut entry = TriangleEntry {
            h: d.h,
            k: d.k,
            b: d.b.clone(),
            triangle: t.clone(),
            lattice_count: lattice_point_count(t),
            multiplicities: mults,
            triangle_class: class_of[i],
            curve_class: None,
            solver_error: None,
            irreducibility: None,
        };
        match &solved[i] {
            Err(e) => entry.solver_error = Some(e.to_string()),
            Ok(nc) => {
                entry.irreducibility = Some(nc.irreducibility);
                let np = newton_polygon(&nc.poly)
                    .expect("nonzero curve")
                    .vertices()
                    .to_vec();
                let (nf, _) = lattice_polygon_normal_form(&np);
                let idx = match curve_classes.iter().position(|c| c.normal_form == nf) {
                    Some(c) => c,
                    None => {
                        let matches: Vec<FamilyMatch> = instances
                            .iter()
                            .filter_map(|(ft, inp)| {
                                let map = lattice_polygon_isomorphism(&np, inp)?;
                                Some(FamilyMatch {
                                    family: ft.kind(),
                                    k: ft.solution().k_i64(),
                                    big_m: i64::try_from(ft.solution().m()).ok()?,
                                    big_n: i64::try_from(ft.solution().n()).ok()?,
                                    map,
                                })
                            })
                            .collect();
                        curve_classes.push(CurveClass {
                            representative: i,
                            polynomial: nc.poly.clone(),
                            newton_polygon: np.clone(),
                            normal_form: nf,
                            flagged: matches.is_empty(),
                            matches,
                        });
                        curve_classes.len() - 1
                    }
                };
                entry.curve_class = Some(idx);
            }
        }
        triangles.push(entry);
    }
    let counterexample_candidates = curve_classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.flagged)
        .map(|(i, _)| i)
        .collect();
    let triangle_classes = class_of.iter().max().map_or(0, |c| c + 1);
    SearchReport {
        m,
        h_max,
        k_max,
        scope: format!(
            "all triangles (0,0),(b,0),({m},h) with gcd({m},h)=1, 1<=h<={h_max}, integer slope K<={k_max}, \
             twice area <= {}, and at least {} lattice points; curves whose triangles have two \
             non-integral or misplaced vertices are not searched",
            m * m,
            expected_point_count(m as u64)
        ),
        triangles,
        triangle_classes,
        curve_classes,
        counterexample_candidates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census() {
        for (m, classes) in [(1, 1), (2, 1), (3, 2), (4, 2)] {
            let r = verify_classification(m, default_h_max(m), default_k_max(m));
            assert_eq!(r.curve_class_count(), classes, "m={m}");
            assert!(r.clean(), "m={m}");
        }
    }

    #[test]
    fn m4_classes_match_expected_instances() {
        let r = verify_classification(4, 64, 18);
        let hit = |fam: Family, k: i64, bm: i64, bn: i64| {
            r.curve_classes.iter().any(|c| {
                c.matches
                    .iter()
                    .any(|x| x.family == fam && x.k == k && x.big_m == bm && x.big_n == bn)
            })
        };
        assert!(hit(Family::Integral, 5, 3, 1));
        assert!(hit(Family::Rational, 4, 4, 3));
        let it = r
            .curve_classes
            .iter()
            .find(|c| c.matches.iter().any(|x| x.family == Family::Integral))
            .unwrap();
        let rt = r
            .curve_classes
            .iter()
            .find(|c| {
                c.matches
                    .iter()
                    .any(|x| x.k == 4 && x.family == Family::Rational)
            })
            .unwrap();
        assert_ne!(it.normal_form, rt.normal_form);
    }

    #[test]
    fn m5_contains_it_3_2() {
        let r = verify_classification(5, default_h_max(5), default_k_max(5));
        assert!(r.clean());
        assert!(r
            .curve_classes
            .iter()
            .any(|c| c.matches.iter().any(|x| x.family == Family::Integral
                && x.k == 4
                && x.big_m == 3
                && x.big_n == 2)));
        // (0,0),(5,8),(3,0) carries that class; (0,0),(5,8),(0,3) has the wrong area
        let t = Triangle::from_ints((0, 0), (5, 8), (3, 0)).unwrap();
        let nc = solve_curve(&t, 5).unwrap();
        let np = newton_polygon(&nc.poly).unwrap();
        let (nf, _) = lattice_polygon_normal_form(np.vertices());
        assert!(r.curve_classes.iter().any(|c| c.normal_form == nf));
        let odd = Triangle::from_ints((0, 0), (5, 8), (0, 3)).unwrap();
        assert_eq!(
            crate::geometry::twice_area(&odd),
            Rational::from_integer(15.into())
        );
        assert_eq!(
            crate::geometry::twice_area(&t),
            Rational::from_integer(24.into())
        );
    }

    #[test]
    fn dedup_merges_mirrors() {
        let reps = enumerate_dagger(4, 64, 18);
        let raw = enumerate_dagger_raw(4, 64, 18);
        assert!(reps.len() < raw.len());
    }
}
