//! The integral triangles `IT(M,N)`, the rational triangles `RT(M,N)`, their
//! enlargements `Δ_{α,β}` and the scaled class triangles `Δ'_{α,β}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{to_i64, Rational};
use crate::error::{Error, Result};
use crate::geometry::{
    normal_fan_multiplicities, triangle_isomorphism, AffineLatticeMap, LatticePoint, Point,
    Triangle,
};
use crate::pell::{chain_solution, PellSolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `IT(M,N)`: `(0,0), (M+N, KN), (M, 0)`.
    #[serde(rename = "it")]
    Integral,
    /// `RT(M,N)`: `(0,0), (M, M+N), (M - (M+N)/K, 0)`.
    #[serde(rename = "rt")]
    Rational,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Integral => "IT",
            Family::Rational => "RT",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "it" | "int" | "integral" => Ok(Family::Integral),
            "rt" | "rat" | "rational" => Ok(Family::Rational),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown family {s:?}"),
            }),
        }
    }
}

/// A member of one of the two triangle families, possibly enlarged by `α, β ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTriangle {
    kind: Family,
    solution: PellSolution,
    alpha: Rational,
    beta: Rational,
    triangle: Triangle,
}

/// Sorted multiplicities of the maximal cones of a triangle's normal fan.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityTriple(pub [BigInt; 3]);

impl MultiplicityTriple {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        let mut v = [a, b, c];
        v.sort();
        Self(v)
    }
}

impl fmt::Display for MultiplicityTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

pub fn make_it(s: &PellSolution, alpha: Rational, beta: Rational) -> Result<FamilyTriangle> {
    FamilyTriangle::new(Family::Integral, s.clone(), alpha, beta)
}

pub fn make_rt(s: &PellSolution, alpha: Rational, beta: Rational) -> Result<FamilyTriangle> {
    FamilyTriangle::new(Family::Rational, s.clone(), alpha, beta)
}

impl FamilyTriangle {
    pub fn new(
        kind: Family,
        solution: PellSolution,
        alpha: Rational,
        beta: Rational,
    ) -> Result<Self> {
        if alpha.is_negative() || beta.is_negative() {
            return Err(Error::PreconditionFailed(
                "alpha and beta must be non-negative".into(),
            ));
        }
        let (k, m, n) = (
            Rational::from_integer(solution.k().clone()),
            Rational::from_integer(solution.m().clone()),
            Rational::from_integer(solution.n().clone()),
        );
        let zero = Rational::zero();
        let (apex, right) = match kind {
            Family::Integral => {
                if solution.m().is_zero() || solution.n().is_zero() {
                    return Err(Error::DegenerateTriangle);
                }
                (Point::new(&m + &n, &k * &n), &m + &beta)
            }
            Family::Rational => {
                if solution.m().is_zero() {
                    return Err(Error::DegenerateTriangle);
                }
                (Point::new(m.clone(), &m + &n), &m - (&m + &n) / &k + &beta)
            }
        };
        let triangle = Triangle::new(
            Point::new(-alpha.clone(), zero.clone()),
            apex,
            Point::new(right, zero),
        )?;
        Ok(Self {
            kind,
            solution,
            alpha,
            beta,
            triangle,
        })
    }

    /// `(M_n, N_n) = τ⁻ⁿ(1,0)` on the `M ≥ N` branch, with `α = β = 0`.
    pub fn from_chain(kind: Family, k: i64, n: usize) -> Result<Self> {
        Self::new(
            kind,
            chain_solution(k, n)?,
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn with_extension(&self, alpha: Rational, beta: Rational) -> Result<Self> {
        Self::new(self.kind, self.solution.clone(), alpha, beta)
    }

    /// The same family member with `α = β = 0`.
    pub fn base(&self) -> Self {
        self.with_extension(Rational::zero(), Rational::zero())
            .expect("base of a valid family triangle is valid")
    }

    pub fn kind(&self) -> Family {
        self.kind
    }

    pub fn solution(&self) -> &PellSolution {
        &self.solution
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    pub fn k(&self) -> &BigInt {
        self.solution.k()
    }

    /// Vanishing order: `M+N` (integral) or `M` (rational).
    pub fn m(&self) -> BigInt {
        match self.kind {
            Family::Integral => self.solution.m() + self.solution.n(),
            Family::Rational => self.solution.m().clone(),
        }
    }

    /// Height of the apex: `KN` (integral) or `M+N` (rational).
    pub fn h(&self) -> BigInt {
        match self.kind {
            Family::Integral => self.solution.k() * self.solution.n(),
            Family::Rational => self.solution.m() + self.solution.n(),
        }
    }

    /// Right base vertex of the unextended triangle.
    pub fn b(&self) -> Rational {
        let s = &self.solution;
        match self.kind {
            Family::Integral => Rational::from_integer(s.m().clone()),
            Family::Rational => {
                Rational::from_integer(s.m().clone()) - Rational::new(s.m() + s.n(), s.k().clone())
            }
        }
    }

    pub fn m_i64(&self) -> Result<i64> {
        to_i64(&self.m())
    }

    pub fn h_i64(&self) -> Result<i64> {
        to_i64(&self.h())
    }

    pub fn apex(&self) -> LatticePoint {
        LatticePoint::new(
            self.m_i64().expect("apex fits in i64"),
            self.h_i64().expect("apex fits in i64"),
        )
    }

    /// Length of the base `b + α + β`.
    pub fn base_length(&self) -> Rational {
        self.b() + &self.alpha + &self.beta
    }

    /// Whether this member is one of the pairwise non-isomorphic curves of the
    /// classification (`IT` with `M ≥ N > 0`, `RT` with `M > N > 1`).
    pub fn classification_representative(&self) -> bool {
        let (m, n) = (self.solution.m(), self.solution.n());
        match self.kind {
            Family::Integral => m >= n && n.is_positive(),
            Family::Rational => m > n && n > &BigInt::one(),
        }
    }

    /// Lowest lattice point with `y > 0` on the right edge of the unextended
    /// rational triangle; its height is 1 or `K-1`.
    pub fn rt_right_edge_lowest_lattice_point(&self) -> Option<LatticePoint> {
        if self.kind != Family::Rational {
            return None;
        }
        let k = self.solution.k();
        let b = self.b();
        let h = self.h();
        let mut y = BigInt::one();
        while y <= h {
            let x = &b + Rational::new(y.clone(), k.clone());
            if x.is_integer() {
                return Some(LatticePoint::new(to_i64(x.numer()).ok()?, to_i64(&y).ok()?));
            }
            y += 1;
        }
        None
    }

    /// Bound on `α + β` keeping `2·Area ≤ m²`: `1/(NK)` or `1/(K(M+N))`.
    pub fn negative_curve_budget(&self) -> Rational {
        let s = &self.solution;
        match self.kind {
            Family::Integral => Rational::new(BigInt::one(), s.n() * s.k()),
            Family::Rational => Rational::new(BigInt::one(), s.k() * (s.m() + s.n())),
        }
    }

    /// The same budget through the area condition `m²/h - b`.
    pub fn area_budget(&self) -> Rational {
        let m = Rational::from_integer(self.m());
        Rational::new((&m * &m).to_integer(), self.h()) - self.b()
    }

    /// `Δ'_{α,β}`: `(0,0), (m,0), m/(b+α+β) · (m+α, h)`.
    pub fn class_triangle(&self) -> Triangle {
        let m = Rational::from_integer(self.m());
        let h = Rational::from_integer(self.h());
        let scale = &m / self.base_length();
        Triangle::new(
            Point::new(Rational::zero(), Rational::zero()),
            Point::new(m.clone(), Rational::zero()),
            Point::new(&scale * (&m + &self.alpha), &scale * h),
        )
        .expect("class triangle is proper")
    }

    /// `{NK, K, MK}` (integral) or `{M+N, K, MK - M - N}` (rational).
    pub fn multiplicities(&self) -> MultiplicityTriple {
        let s = &self.solution;
        let k = s.k().clone();
        match self.kind {
            Family::Integral => MultiplicityTriple::new(s.n() * &k, k.clone(), s.m() * &k),
            Family::Rational => {
                MultiplicityTriple::new(s.m() + s.n(), k.clone(), s.m() * &k - s.m() - s.n())
            }
        }
    }

    pub fn fan_multiplicities(&self) -> MultiplicityTriple {
        let [a, b, c] = normal_fan_multiplicities(&self.triangle);
        MultiplicityTriple::new(a, b, c)
    }

    /// `(x,y) -> (M+N-x, K(M-x)+y)` onto `IT(N,M)`, or
    /// `(x,y) -> (M-x, K(M-x)+y-(M+N))` onto `RT(ι₁(M,N))`.
    pub fn mirror_map(&self) -> Result<AffineLatticeMap> {
        mirror_map(self.kind, &self.solution)
    }

    /// The family member carried onto by [`Self::mirror_map`].
    pub fn mirror(&self) -> Result<FamilyTriangle> {
        let s = match self.kind {
            Family::Integral => self.solution.iota0()?,
            Family::Rational => self.solution.iota1()?,
        };
        FamilyTriangle::new(self.kind, s, Rational::zero(), Rational::zero())
    }

    pub fn label(&self) -> String {
        format!(
            "{}({},{}) K={}",
            self.kind,
            self.solution.m(),
            self.solution.n(),
            self.solution.k()
        )
    }
}

impl fmt::Display for FamilyTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.label(), self.triangle)
    }
}

/// The exponent map carrying the `(M,N)` member of a family to its mirror
/// (`(N,M)` for integral, `ι₁(M,N)` for rational triangles).
pub fn mirror_map(kind: Family, s: &PellSolution) -> Result<AffineLatticeMap> {
    let k = to_i64(s.k())?;
    let m = to_i64(s.m())?;
    let n = to_i64(s.n())?;
    let t = match kind {
        Family::Integral => [m + n, k * m],
        Family::Rational => [m, k * m - (m + n)],
    };
    AffineLatticeMap::new([[-1, 0], [-k, 1]], t)
}

/// Affine lattice isomorphism between two family triangles, if one exists.
///
/// Triples of normal-fan multiplicities are compared first; a candidate map
/// (the mirror map, the identity, then an exhaustive vertex-correspondence
/// search) is only returned after it is confirmed to carry vertices to vertices.
pub fn is_isomorphic(t1: &FamilyTriangle, t2: &FamilyTriangle) -> Option<AffineLatticeMap> {
    if t1.fan_multiplicities() != t2.fan_multiplicities() {
        return None;
    }
    let target = t2.triangle().vertex_set();
    let carries = |f: &AffineLatticeMap| f.apply_triangle(t1.triangle()).vertex_set() == target;
    let mut candidates = vec![AffineLatticeMap::identity()];
    if let Ok(f) = t1.mirror_map() {
        candidates.push(f);
    }
    candidates
        .into_iter()
        .find(|f| carries(f))
        .or_else(|| triangle_isomorphism(t1.triangle(), t2.triangle()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::geometry::{lattice_point_count, lattice_points, twice_area};

    fn sol(k: i64, m: i64, n: i64) -> PellSolution {
        PellSolution::new(k, m, n).unwrap()
    }

    fn it(k: i64, m: i64, n: i64) -> FamilyTriangle {
        make_it(&sol(k, m, n), rat(0, 1), rat(0, 1)).unwrap()
    }

    fn rt(k: i64, m: i64, n: i64) -> FamilyTriangle {
        make_rt(&sol(k, m, n), rat(0, 1), rat(0, 1)).unwrap()
    }

    fn vs(v: &[(Rational, Rational)]) -> Vec<Point> {
        let mut out: Vec<Point> = v
            .iter()
            .map(|(x, y)| Point::new(x.clone(), y.clone()))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn construction_examples() {
        let t = rt(4, 4, 3);
        assert_eq!(
            t.triangle().vertex_set(),
            vs(&[
                (rat(0, 1), rat(0, 1)),
                (rat(4, 1), rat(7, 1)),
                (rat(9, 4), rat(0, 1))
            ])
        );
        let t = it(3, 1, 1);
        assert_eq!(
            t.triangle().vertex_set(),
            vs(&[
                (rat(0, 1), rat(0, 1)),
                (rat(2, 1), rat(3, 1)),
                (rat(1, 1), rat(0, 1))
            ])
        );
        assert_eq!(lattice_points(it(5, 3, 1).triangle()).len(), 11);
        assert_eq!(
            make_it(&sol(5, 1, 0), rat(0, 1), rat(0, 1)),
            Err(Error::DegenerateTriangle)
        );
        assert_eq!(
            make_rt(&sol(5, 0, 1), rat(0, 1), rat(0, 1)),
            Err(Error::DegenerateTriangle)
        );
        assert!(make_rt(&sol(5, 1, 0), rat(0, 1), rat(0, 1)).is_ok());
        let ext = make_it(&sol(4, 2, 1), rat(1, 8), rat(1, 16)).unwrap();
        assert_eq!(ext.base_length(), rat(2, 1) + rat(3, 16));
    }

    #[test]
    fn accessors() {
        let t = rt(4, 4, 3);
        assert_eq!((t.m(), t.h()), (4.into(), 7.into()));
        assert_eq!(t.b(), rat(9, 4));
        let t = it(5, 3, 1);
        assert_eq!((t.m(), t.h(), t.b()), (4.into(), 5.into(), rat(3, 1)));
    }

    #[test]
    fn budget_examples() {
        assert_eq!(it(4, 2, 1).negative_curve_budget(), rat(1, 4));
        assert_eq!(rt(4, 2, 1).negative_curve_budget(), rat(1, 12));
        for t in [it(4, 2, 1), rt(4, 2, 1), it(5, 3, 8), rt(7, 24, 5)] {
            assert_eq!(t.negative_curve_budget(), t.area_budget(), "{}", t.label());
            let full = t
                .with_extension(t.negative_curve_budget(), rat(0, 1))
                .unwrap();
            let m = Rational::from_integer(t.m());
            assert_eq!(twice_area(full.triangle()), &m * &m);
        }
    }

    #[test]
    fn class_triangle_examples() {
        let ct = it(4, 2, 1).class_triangle();
        assert_eq!(
            ct.vertex_set(),
            vs(&[
                (rat(0, 1), rat(0, 1)),
                (rat(3, 1), rat(0, 1)),
                (rat(9, 2), rat(6, 1))
            ])
        );
        let t = rt(4, 4, 3);
        let ct = t.class_triangle();
        let m = Rational::from_integer(t.m());
        let h = Rational::from_integer(t.h());
        let b = t.b();
        let apex = Point::new(&m / &b * &m, &m / &b * &h);
        assert!(ct.vertex_set().contains(&apex));
        // H·H' = b' h with b' = m
        assert_eq!(twice_area(t.triangle()) * (&m / &b), &m * &h);
    }

    #[test]
    fn multiplicity_examples() {
        let t = it(5, 3, 1);
        assert_eq!(
            t.multiplicities(),
            MultiplicityTriple::new(5.into(), 5.into(), 15.into())
        );
        for t in [
            it(5, 3, 1),
            it(4, 3, 2),
            rt(4, 4, 3),
            rt(5, 8, 3),
            rt(6, 4, 1),
            it(3, 1, 1),
        ] {
            assert_eq!(t.multiplicities(), t.fan_multiplicities(), "{}", t.label());
        }
    }

    #[test]
    fn isomorphism_examples() {
        let a = it(5, 3, 1);
        let b = it(5, 1, 3);
        let f = is_isomorphic(&a, &b).unwrap();
        assert_eq!(f, a.mirror_map().unwrap());
        assert_eq!(
            f.apply_triangle(a.triangle()).vertex_set(),
            b.triangle().vertex_set()
        );
        let g = is_isomorphic(&b, &a).unwrap();
        assert_eq!(
            g.apply_triangle(b.triangle()).vertex_set(),
            a.triangle().vertex_set()
        );
        assert!(is_isomorphic(&it(4, 2, 1), &rt(4, 2, 1)).is_none());
        let r = rt(4, 4, 3);
        let r2 = r.mirror().unwrap();
        assert_eq!(r2.solution(), &sol(4, 4, 5));
        let f = is_isomorphic(&r, &r2).unwrap();
        assert_eq!(
            f.apply_triangle(r.triangle()).vertex_set(),
            r2.triangle().vertex_set()
        );
        assert!(is_isomorphic(&it(4, 3, 2), &it(5, 3, 1)).is_none());
    }

    #[test]
    fn rt_lowest_right_edge_point() {
        for k in 4..=9 {
            for n in 0..=4 {
                let t = FamilyTriangle::from_chain(Family::Rational, k, n).unwrap();
                let p = t.rt_right_edge_lowest_lattice_point().unwrap();
                assert!(p.y == 1 || p.y == k - 1, "{} -> {p}", t.label());
            }
        }
    }

    #[test]
    fn rt_k_minus_one_one_is_constructible_but_not_representative() {
        // RT(K-1, 1) for parameter K+1 shares its lattice hull with IT(K-2, 1)
        let r = rt(6, 4, 1);
        assert!(!r.classification_representative());
        let i = it(5, 3, 1);
        assert!(i.classification_representative());
        assert_eq!(lattice_points(r.triangle()), lattice_points(i.triangle()));
        assert_eq!(lattice_point_count(r.triangle()), 11);
    }
}
