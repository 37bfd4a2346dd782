//! Negative curves from triangles: the exact solution of the linear system
//! "vanish to order `m` at `(1,1)`" over the lattice points of a triangle.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{expected_point_count, Rational};
use crate::error::{Error, Result};
use crate::families::FamilyTriangle;
use crate::geometry::{
    lattice_point_count, lattice_points, segment_lattice_length, twice_area, LatticePoint, Triangle,
};
use crate::laurent::LaurentPoly;
use crate::linalg::{nullspace, rank, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Irreducibility {
    /// Some edge of the triangle meets `Z^2` only at its two endpoints, and
    /// both endpoints carry nonzero coefficients.
    ProvedByEdgeCriterion,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeCurve {
    pub triangle: Triangle,
    pub family: Option<FamilyTriangle>,
    pub m: u32,
    pub poly: LaurentPoly,
    pub self_intersection: Rational,
    pub irreducibility: Irreducibility,
}

/// Rows `(s, t)` with `s + t < m`, in degree then `s`-descending order.
fn moment_rows(m: u32) -> Vec<(u32, u32)> {
    (0..m)
        .flat_map(|d| (0..=d).rev().map(move |s| (s, d - s)))
        .collect()
}

/// The matrix with entry `a^s b^t` in row `(s, t)` and column `(a, b)`.
pub fn moment_matrix(points: &[LatticePoint], m: u32) -> IntMatrix {
    let rows = moment_rows(m);
    let mut mat = IntMatrix::zeros(rows.len(), points.len());
    for (j, p) in points.iter().enumerate() {
        let (a, b) = (BigInt::from(p.x), BigInt::from(p.y));
        for (i, &(s, t)) in rows.iter().enumerate() {
            mat.set(i, j, Pow::pow(&a, s) * Pow::pow(&b, t));
        }
    }
    mat
}

/// The unique (up to scale) polynomial supported on `t` vanishing to order `m` at `(1,1)`.
pub fn solve_curve(t: &Triangle, m: u32) -> Result<NegativeCurve> {
    let m2 = Rational::from_integer(BigInt::from(m) * BigInt::from(m));
    if twice_area(t) > m2 {
        return Err(Error::PreconditionFailed(format!(
            "twice the area exceeds m^2 = {m2}"
        )));
    }
    if lattice_point_count(t) < expected_point_count(m as u64) {
        return Err(Error::PreconditionFailed(format!(
            "fewer than {} lattice points",
            expected_point_count(m as u64)
        )));
    }
    let points = lattice_points(t);
    let poly = solve_on_points(&points, m)?;
    let mut nc = NegativeCurve {
        triangle: t.clone(),
        family: None,
        m,
        self_intersection: self_intersection(t, m),
        poly,
        irreducibility: Irreducibility::Inconclusive,
    };
    if let Ok(vs) = t.lattice_vertices() {
        let edges = [(vs[0], vs[1]), (vs[1], vs[2]), (vs[2], vs[0])];
        if edges.iter().any(|&e| irreducible_by_edge(&nc, e)) {
            nc.irreducibility = Irreducibility::ProvedByEdgeCriterion;
        }
    }
    Ok(nc)
}

/// [`solve_curve`] on a family triangle with its own order `m`.
pub fn solve_family(ft: &FamilyTriangle) -> Result<NegativeCurve> {
    let m = u32::try_from(ft.m()).map_err(|_| Error::Overflow)?;
    let mut nc = solve_curve(ft.triangle(), m)?;
    nc.family = Some(ft.clone());
    Ok(nc)
}

/// Nullspace of the moment system on an explicit column set, normalized.
pub fn solve_on_points(points: &[LatticePoint], m: u32) -> Result<LaurentPoly> {
    let mat = moment_matrix(points, m);
    let mut basis = nullspace(&mat);
    match basis.len() {
        0 => return Err(Error::NoCurve),
        1 => {}
        d => return Err(Error::NonUnique(d)),
    }
    let v = basis.pop().expect("one basis vector");
    let poly = LaurentPoly::from_terms(points.iter().zip(v).map(|(p, c)| ((p.x, p.y), c)));
    Ok(normalize(&poly))
}

/// Constant term 1 when present, else the lexicographically least term 1.
pub fn normalize(p: &LaurentPoly) -> LaurentPoly {
    let c0 = p.constant_term();
    let pivot = if !c0.is_zero() {
        c0
    } else {
        match p.terms().next() {
            Some((_, c)) => c.clone(),
            None => return p.clone(),
        }
    };
    p.scale(&(Rational::one() / pivot))
}

/// Edge criterion for irreducibility on an edge `(u, v)` of the curve's triangle.
pub fn irreducible_by_edge(nc: &NegativeCurve, edge: (LatticePoint, LatticePoint)) -> bool {
    let (u, v) = edge;
    let Ok(vs) = nc.triangle.lattice_vertices() else {
        return false;
    };
    if u == v || !vs.contains(&u) || !vs.contains(&v) {
        return false;
    }
    segment_lattice_length(u, v) == 1
        && !nc.poly.coeff(u.x, u.y).is_zero()
        && !nc.poly.coeff(v.x, v.y).is_zero()
}

/// `(vanishing polynomial on S exists, degree m-1 interpolant through S exists)`.
///
/// The first flag comes from the moment matrix with columns `S`, the second
/// from the evaluation matrix of the monomials of degree `< m` on `S`.
pub fn interpolation_dual(s: &[LatticePoint], m: u32) -> Result<(bool, bool)> {
    let set: BTreeSet<LatticePoint> = s.iter().copied().collect();
    let expected = (m as usize) * (m as usize + 1) / 2;
    if set.len() != expected {
        return Err(Error::WrongCardinality {
            expected,
            got: set.len(),
        });
    }
    let points: Vec<LatticePoint> = set.into_iter().collect();
    let moments = moment_matrix(&points, m);
    let rows = moment_rows(m);
    let mut eval = IntMatrix::zeros(points.len(), rows.len());
    for (i, p) in points.iter().enumerate() {
        let (a, b) = (BigInt::from(p.x), BigInt::from(p.y));
        for (j, &(s, t)) in rows.iter().enumerate() {
            eval.set(i, j, Pow::pow(&a, s) * Pow::pow(&b, t));
        }
    }
    Ok((rank(&moments) < points.len(), rank(&eval) < rows.len()))
}

/// `C·C = 2 Area - m^2`.
pub fn self_intersection(t: &Triangle, m: u32) -> Rational {
    twice_area(t) - Rational::from_integer(BigInt::from(m).pow(2u32))
}
