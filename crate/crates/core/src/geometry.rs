//! Exact plane geometry over the rationals: triangles, lattice points,
//! column counts, shears and unimodular affine maps of `Z^2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{ceil_i64, floor_i64, gcd_i64, rat_int, rat_to_i64, Rational};
use crate::error::{Error, Result};

/// A point of `Z^2`. Ordered lexicographically (x first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn to_point(self) -> Point {
        Point::new(rat_int(self.x), rat_int(self.y))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

/// A point with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(rat_int(x), rat_int(y))
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn to_lattice(&self) -> Result<LatticePoint> {
        Ok(LatticePoint::new(
            rat_to_i64(&self.x)?,
            rat_to_i64(&self.y)?,
        ))
    }

    fn sub(&self, o: &Point) -> (Rational, Rational) {
        (&self.x - &o.x, &self.y - &o.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use crate::arith::format_rational;
        [format_rational(&self.x), format_rational(&self.y)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let x = crate::arith::parse_rational(&x).map_err(D::Error::custom)?;
        let y = crate::arith::parse_rational(&y).map_err(D::Error::custom)?;
        Ok(Point::new(x, y))
    }
}

fn cross(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Twice the signed area of `(p, q, r)`; positive when counterclockwise.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Rational {
    cross(&q.sub(p), &r.sub(p))
}

/// A non-degenerate triangle with vertices stored counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangle {
    v: [Point; 3],
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        let o = orient(&a, &b, &c);
        if o.is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        let v = if o.is_positive() {
            [a, b, c]
        } else {
            [a, c, b]
        };
        Ok(Self { v })
    }

    pub fn from_ints(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Result<Self> {
        Self::new(
            Point::from_ints(a.0, a.1),
            Point::from_ints(b.0, b.1),
            Point::from_ints(c.0, c.1),
        )
    }

    pub fn vertices(&self) -> &[Point; 3] {
        &self.v
    }

    /// Edges as `(start, end)` in counterclockwise order.
    pub fn edges(&self) -> [(&Point, &Point); 3] {
        [
            (&self.v[0], &self.v[1]),
            (&self.v[1], &self.v[2]),
            (&self.v[2], &self.v[0]),
        ]
    }

    pub fn is_integral(&self) -> bool {
        self.v.iter().all(Point::is_integral)
    }

    pub fn lattice_vertices(&self) -> Result<[LatticePoint; 3]> {
        Ok([
            self.v[0].to_lattice()?,
            self.v[1].to_lattice()?,
            self.v[2].to_lattice()?,
        ])
    }

    /// Closed containment test.
    pub fn contains(&self, p: &Point) -> bool {
        self.edges()
            .iter()
            .all(|(a, b)| !orient(a, b, p).is_negative())
    }

    pub fn contains_lattice(&self, p: LatticePoint) -> bool {
        self.contains(&p.to_point())
    }

    /// Vertex set, sorted, for order-independent comparison.
    pub fn vertex_set(&self) -> Vec<Point> {
        let mut v = self.v.to_vec();
        v.sort();
        v
    }

    pub fn x_range(&self) -> (Rational, Rational) {
        let xs = self.v.iter().map(|p| &p.x);
        let lo = xs.clone().min().unwrap().clone();
        let hi = xs.max().unwrap().clone();
        (lo, hi)
    }

    pub fn y_range(&self) -> (Rational, Rational) {
        let ys = self.v.iter().map(|p| &p.y);
        let lo = ys.clone().min().unwrap().clone();
        let hi = ys.max().unwrap().clone();
        (lo, hi)
    }

    /// Exact y-interval cut out by the vertical line at `x`, if the line meets the triangle.
    pub fn column_interval(&self, x: &Rational) -> Option<(Rational, Rational)> {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        let mut push = |y: Rational| {
            if lo.as_ref().is_none_or(|l| &y < l) {
                lo = Some(y.clone());
            }
            if hi.as_ref().is_none_or(|h| &y > h) {
                hi = Some(y);
            }
        };
        for (a, b) in self.edges() {
            let (x0, x1) = if a.x <= b.x {
                (&a.x, &b.x)
            } else {
                (&b.x, &a.x)
            };
            if x < x0 || x > x1 {
                continue;
            }
            if a.x == b.x {
                push(a.y.clone());
                push(b.y.clone());
            } else {
                let t = (x - &a.x) / (&b.x - &a.x);
                push(&a.y + t * (&b.y - &a.y));
            }
        }
        Some((lo?, hi?))
    }

    /// Apply the shear `(x, y) -> (x, y - k (x - b))` to every vertex.
    pub fn shear(&self, k: &BigInt, b: &Rational) -> Result<Triangle> {
        let k = Rational::from_integer(k.clone());
        let f = |p: &Point| Point::new(p.x.clone(), &p.y - &k * (&p.x - b));
        Triangle::new(f(&self.v[0]), f(&self.v[1]), f(&self.v[2]))
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.v[0], self.v[1], self.v[2])
    }
}

impl Serialize for Triangle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Triangle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let [a, b, c] = <[Point; 3]>::deserialize(d)?;
        Triangle::new(a, b, c).map_err(D::Error::custom)
    }
}

pub fn twice_area(t: &Triangle) -> Rational {
    let v = t.vertices();
    orient(&v[0], &v[1], &v[2]).abs()
}

/// All lattice points of the closed triangle, sorted lexicographically.
pub fn lattice_points(t: &Triangle) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for_each_column(t, |x, lo, hi| {
        out.extend((lo..=hi).map(|y| LatticePoint::new(x, y)));
    });
    out
}

pub fn lattice_point_count(t: &Triangle) -> u64 {
    let mut n = 0u64;
    for_each_column(t, |_, lo, hi| {
        if hi >= lo {
            n += (hi - lo + 1) as u64;
        }
    });
    n
}

/// Lattice-point counts of every integer column meeting the triangle, by increasing x.
pub fn column_profile(t: &Triangle) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_column(t, |_, lo, hi| {
        out.push(if hi >= lo { (hi - lo + 1) as u64 } else { 0 });
    });
    out
}

pub fn column_counts(t: &Triangle) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for_each_column(t, |x, lo, hi| {
        out.insert(x, if hi >= lo { (hi - lo + 1) as u64 } else { 0 });
    });
    out
}

// Calls `f(x, ceil(lo), floor(hi))` for every integer column x meeting `t`;
// `hi < lo` signals a column without lattice points.
fn for_each_column(t: &Triangle, mut f: impl FnMut(i64, i64, i64)) {
    let (xlo, xhi) = t.x_range();
    let (Ok(x0), Ok(x1)) = (ceil_i64(&xlo), floor_i64(&xhi)) else {
        return;
    };
    for x in x0..=x1 {
        let Some((lo, hi)) = t.column_interval(&rat_int(x)) else {
            continue;
        };
        let (Ok(lo), Ok(hi)) = (ceil_i64(&lo), floor_i64(&hi)) else {
            continue;
        };
        f(x, lo, hi);
    }
}

/// Doubled area, boundary and interior lattice counts of an integral triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PickCount {
    pub twice_area: Rational,
    pub boundary: u64,
    pub interior: u64,
}

impl PickCount {
    pub fn total(&self) -> u64 {
        self.boundary + self.interior
    }
}

pub fn picks_count(t: &Triangle) -> Result<PickCount> {
    let v = t.lattice_vertices()?;
    let boundary: i64 = (0..3)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % 3]);
            gcd_i64(b.x - a.x, b.y - a.y)
        })
        .sum();
    let area2 = twice_area(t);
    // 2I = 2A - B + 2
    let two_interior = area2.to_integer() - BigInt::from(boundary) + 2;
    let interior: BigInt = two_interior / 2;
    Ok(PickCount {
        twice_area: area2,
        boundary: boundary as u64,
        interior: interior.try_into().map_err(|_| Error::Overflow)?,
    })
}

/// A triangle of the form `(0,0), (b,0), (m,h)` whose right edge has integer slope `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaggerForm {
    pub m: i64,
    pub h: i64,
    pub k: i64,
    pub b: Rational,
}

impl DaggerForm {
    /// `b = m - h/k`. Requires `0 < b < m`.
    pub fn new(m: i64, h: i64, k: i64) -> Result<Self> {
        if m < 1 || h < 1 || k < 1 {
            return Err(Error::PreconditionFailed("m, h, k must be positive".into()));
        }
        let b = rat_int(m) - Rational::new(h.into(), k.into());
        if !b.is_positive() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Self { m, h, k, b })
    }

    pub fn triangle(&self) -> Triangle {
        Triangle::new(
            Point::from_ints(0, 0),
            Point::new(self.b.clone(), Rational::zero()),
            Point::from_ints(self.m, self.h),
        )
        .expect("0 < b and h > 0 give a proper triangle")
    }

    /// The common vertex `(b, b h / m)` created by cutting along `x = b`.
    pub fn split_apex(&self) -> Point {
        let y = &self.b * Rational::new(self.h.into(), self.m.into());
        Point::new(self.b.clone(), y)
    }

    pub fn left_part(&self) -> Triangle {
        Triangle::new(
            Point::from_ints(0, 0),
            Point::new(self.b.clone(), Rational::zero()),
            self.split_apex(),
        )
        .expect("left part is proper")
    }

    pub fn right_part(&self) -> Triangle {
        Triangle::new(
            Point::new(self.b.clone(), Rational::zero()),
            Point::from_ints(self.m, self.h),
            self.split_apex(),
        )
        .expect("right part is proper")
    }

    /// Left part glued to the sheared right part: `(0,0), (m,0), (b, b h/m)`.
    pub fn sheared(&self) -> Result<Triangle> {
        let right = self.right_part().shear(&BigInt::from(self.k), &self.b)?;
        let left = self.left_part();
        let mut pts: Vec<Point> = left.vertices().to_vec();
        pts.extend(right.vertices().iter().cloned());
        pts.sort();
        pts.dedup();
        // the union is a triangle: the split apex is shared, (b,0) becomes interior to the base
        let apex = self.split_apex();
        let base_end = Point::from_ints(self.m, 0);
        if !pts.contains(&base_end) || !pts.contains(&apex) {
            return Err(Error::PreconditionFailed(
                "shear did not flatten the right edge".into(),
            ));
        }
        Triangle::new(Point::from_ints(0, 0), base_end, apex)
    }
}

/// An affine automorphism `p -> A p + t` of `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineLatticeMap {
    a: [[i64; 2]; 2],
    t: [i64; 2],
}

impl AffineLatticeMap {
    pub fn new(a: [[i64; 2]; 2], t: [i64; 2]) -> Result<Self> {
        let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(Self { a, t })
    }

    pub fn identity() -> Self {
        Self {
            a: [[1, 0], [0, 1]],
            t: [0, 0],
        }
    }

    pub fn translation(dx: i64, dy: i64) -> Self {
        Self {
            a: [[1, 0], [0, 1]],
            t: [dx, dy],
        }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.a
    }

    pub fn offset(&self) -> [i64; 2] {
        self.t
    }

    pub fn det(&self) -> i64 {
        self.a[0][0] * self.a[1][1] - self.a[0][1] * self.a[1][0]
    }

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        LatticePoint::new(
            self.a[0][0] * p.x + self.a[0][1] * p.y + self.t[0],
            self.a[1][0] * p.x + self.a[1][1] * p.y + self.t[1],
        )
    }

    pub fn apply_point(&self, p: &Point) -> Point {
        let r = |v: i64| rat_int(v);
        Point::new(
            r(self.a[0][0]) * &p.x + r(self.a[0][1]) * &p.y + r(self.t[0]),
            r(self.a[1][0]) * &p.x + r(self.a[1][1]) * &p.y + r(self.t[1]),
        )
    }

    pub fn apply_triangle(&self, t: &Triangle) -> Triangle {
        let [a, b, c] = t.vertices();
        Triangle::new(
            self.apply_point(a),
            self.apply_point(b),
            self.apply_point(c),
        )
        .expect("unimodular maps preserve non-degeneracy")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineLatticeMap) -> AffineLatticeMap {
        let a = &self.a;
        let b = &other.a;
        let m = [
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ];
        let t = self.apply(LatticePoint::new(other.t[0], other.t[1]));
        AffineLatticeMap {
            a: m,
            t: [t.x, t.y],
        }
    }

    pub fn inverse(&self) -> AffineLatticeMap {
        let d = self.det();
        let a = &self.a;
        let inv = [[a[1][1] * d, -a[0][1] * d], [-a[1][0] * d, a[0][0] * d]];
        let lin = AffineLatticeMap { a: inv, t: [0, 0] };
        let t = lin.apply(LatticePoint::new(-self.t[0], -self.t[1]));
        AffineLatticeMap {
            a: inv,
            t: [t.x, t.y],
        }
    }
}

impl fmt::Display for AffineLatticeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.a;
        write!(
            f,
            "(x, y) -> ({}x + {}y + {}, {}x + {}y + {})",
            a[0][0], a[0][1], self.t[0], a[1][0], a[1][1], self.t[1]
        )
    }
}

/// Searches all vertex correspondences for a unimodular affine map carrying `s` onto `t`.
pub fn triangle_isomorphism(s: &Triangle, t: &Triangle) -> Option<AffineLatticeMap> {
    let sv = s.vertices();
    let tv = t.vertices();
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let (u1, u2) = (sv[1].sub(&sv[0]), sv[2].sub(&sv[0]));
    let det = cross(&u1, &u2);
    for p in PERMS {
        let (w0, w1, w2) = (&tv[p[0]], &tv[p[1]], &tv[p[2]]);
        let (z1, z2) = (w1.sub(w0), w2.sub(w0));
        // A [u1 u2] = [z1 z2]  =>  A = [z1 z2] [u1 u2]^{-1}
        let inv = [
            [&u2.1 / &det, -(&u2.0 / &det)],
            [-(&u1.1 / &det), &u1.0 / &det],
        ];
        let a = [
            [
                &z1.0 * &inv[0][0] + &z2.0 * &inv[1][0],
                &z1.0 * &inv[0][1] + &z2.0 * &inv[1][1],
            ],
            [
                &z1.1 * &inv[0][0] + &z2.1 * &inv[1][0],
                &z1.1 * &inv[0][1] + &z2.1 * &inv[1][1],
            ],
        ];
        if !a.iter().flatten().all(|e| e.is_integer()) {
            continue;
        }
        let tx = &w0.x - (&a[0][0] * &sv[0].x + &a[0][1] * &sv[0].y);
        let ty = &w0.y - (&a[1][0] * &sv[0].x + &a[1][1] * &sv[0].y);
        if !tx.is_integer() || !ty.is_integer() {
            continue;
        }
        let ints = || -> Result<AffineLatticeMap> {
            AffineLatticeMap::new(
                [
                    [rat_to_i64(&a[0][0])?, rat_to_i64(&a[0][1])?],
                    [rat_to_i64(&a[1][0])?, rat_to_i64(&a[1][1])?],
                ],
                [rat_to_i64(&tx)?, rat_to_i64(&ty)?],
            )
        };
        if let Ok(map) = ints() {
            return Some(map);
        }
    }
    None
}

/// Primitive integer vector parallel to a nonzero rational vector.
fn primitive_direction(v: &(Rational, Rational)) -> (BigInt, BigInt) {
    let l = v.0.denom().lcm(v.1.denom());
    let x = (&v.0 * Rational::from_integer(l.clone())).to_integer();
    let y = (&v.1 * Rational::from_integer(l)).to_integer();
    let g = x.gcd(&y);
    (x / &g, y / g)
}

/// Multiplicities of the three maximal cones of the normal fan, sorted ascending.
pub fn normal_fan_multiplicities(t: &Triangle) -> [BigInt; 3] {
    let v = t.vertices();
    let normals: Vec<(BigInt, BigInt)> = (0..3)
        .map(|i| {
            let d = primitive_direction(&v[(i + 1) % 3].sub(&v[i]));
            (d.1.clone(), -d.0)
        })
        .collect();
    // the cone at vertex i is spanned by the normals of the edges meeting there
    let mut mult: Vec<BigInt> = (0..3)
        .map(|i| {
            let (a, b) = (&normals[(i + 2) % 3], &normals[i]);
            (&a.0 * &b.1 - &a.1 * &b.0).abs()
        })
        .collect();
    mult.sort();
    [mult[0].clone(), mult[1].clone(), mult[2].clone()]
}

/// Counterclockwise convex hull with collinear points removed, starting at the
/// lexicographically smallest vertex.
pub fn convex_hull(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut pts: Vec<LatticePoint> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let turn = |o: LatticePoint, a: LatticePoint, b: LatticePoint| -> i128 {
        (a.x - o.x) as i128 * (b.y - o.y) as i128 - (a.y - o.y) as i128 * (b.x - o.x) as i128
    };
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Canonical representative of a convex lattice polygon under affine
/// automorphisms of `Z^2`, and a map sending the input onto it.
///
/// Vertices must be in convex position (as produced by [`convex_hull`]).
pub fn lattice_polygon_normal_form(
    vertices: &[LatticePoint],
) -> (Vec<LatticePoint>, AffineLatticeMap) {
    let n = vertices.len();
    if n == 0 {
        return (Vec::new(), AffineLatticeMap::identity());
    }
    if n == 1 {
        let p = vertices[0];
        return (
            vec![LatticePoint::ORIGIN],
            AffineLatticeMap::translation(-p.x, -p.y),
        );
    }
    let mut best: Option<(Vec<LatticePoint>, AffineLatticeMap)> = None;
    for start in 0..n {
        for dir in [1usize, n - 1] {
            let order: Vec<LatticePoint> =
                (0..n).map(|i| vertices[(start + i * dir) % n]).collect();
            let map = normalizing_map(&order);
            let image: Vec<LatticePoint> = order.iter().map(|&p| map.apply(p)).collect();
            if best.as_ref().is_none_or(|(b, _)| image < *b) {
                best = Some((image, map));
            }
        }
    }
    best.expect("at least one candidate")
}

// Sends order[0] to the origin, the first edge onto the positive x-axis, the
// polygon into the upper half plane and the last vertex into the strip 0 <= x < y.
fn normalizing_map(order: &[LatticePoint]) -> AffineLatticeMap {
    let o = order[0];
    let (dx, dy) = (order[1].x - o.x, order[1].y - o.y);
    let g = gcd_i64(dx, dy);
    let (p, q) = (dx / g, dy / g);
    // find (r, s) with p s - q r = 1
    let (bg, bx, by) = ext_gcd(p, q);
    debug_assert_eq!(bg.abs(), 1);
    let (s, r) = (bx * bg, -by * bg);
    // inverse of [[p, r], [q, s]] is [[s, -r], [-q, p]]
    let lin = AffineLatticeMap {
        a: [[s, -r], [-q, p]],
        t: [0, 0],
    };
    let to_origin = AffineLatticeMap::translation(-o.x, -o.y);
    let mut map = lin.compose(&to_origin);
    if order.len() >= 3 {
        let prev = map.apply(order[order.len() - 1]);
        let flip = if prev.y < 0 {
            AffineLatticeMap {
                a: [[1, 0], [0, -1]],
                t: [0, 0],
            }
        } else {
            AffineLatticeMap::identity()
        };
        map = flip.compose(&map);
        let prev = map.apply(order[order.len() - 1]);
        if prev.y > 0 {
            let k = -Integer::div_floor(&prev.x, &prev.y);
            let shear = AffineLatticeMap {
                a: [[1, k], [0, 1]],
                t: [0, 0],
            };
            map = shear.compose(&map);
        }
    }
    map
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// A unimodular affine map carrying polygon `a` onto polygon `b`, if one exists.
pub fn lattice_polygon_isomorphism(
    a: &[LatticePoint],
    b: &[LatticePoint],
) -> Option<AffineLatticeMap> {
    if a.len() != b.len() {
        return None;
    }
    let (na, ma) = lattice_polygon_normal_form(a);
    let (nb, mb) = lattice_polygon_normal_form(b);
    (na == nb).then(|| mb.inverse().compose(&ma))
}

pub fn segment_lattice_length(a: LatticePoint, b: LatticePoint) -> i64 {
    gcd_i64(b.x - a.x, b.y - a.y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn tri(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Triangle {
        Triangle::from_ints(a, b, c).unwrap()
    }

    fn rt43() -> Triangle {
        Triangle::new(
            Point::from_ints(0, 0),
            Point::from_ints(4, 7),
            Point::new(rat(9, 4), rat(0, 1)),
        )
        .unwrap()
    }

    fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
        v.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn twice_area_examples() {
        assert_eq!(twice_area(&tri((0, 0), (4, 5), (3, 0))), rat(15, 1));
        assert_eq!(twice_area(&tri((0, 0), (1, 0), (0, 1))), rat(1, 1));
        assert_eq!(twice_area(&rt43()), rat(63, 4));
    }

    #[test]
    fn degenerate_rejected_and_orientation_normalized() {
        assert_eq!(
            Triangle::from_ints((0, 0), (1, 1), (2, 2)),
            Err(Error::DegenerateTriangle)
        );
        let t = tri((0, 0), (0, 1), (1, 0));
        let v = t.vertices();
        assert!(orient(&v[0], &v[1], &v[2]).is_positive());
    }

    #[test]
    fn lattice_point_examples() {
        let t = tri((0, 0), (2, 3), (1, 0));
        assert_eq!(lattice_points(&t), pts(&[(0, 0), (1, 0), (1, 1), (2, 3)]));
        assert_eq!(lattice_points(&tri((0, 0), (1, 0), (0, 1))).len(), 3);
        assert_eq!(lattice_points(&rt43()).len(), 11);
        assert_eq!(
            lattice_points(&rt43()),
            pts(&[
                (0, 0),
                (1, 0),
                (1, 1),
                (2, 0),
                (2, 1),
                (2, 2),
                (2, 3),
                (3, 3),
                (3, 4),
                (3, 5),
                (4, 7)
            ])
        );
    }

    #[test]
    fn column_profile_examples() {
        assert_eq!(
            column_profile(&tri((0, 0), (3, 4), (2, 0))),
            vec![1, 2, 3, 1]
        );
        assert_eq!(column_profile(&tri((0, 0), (1, 0), (0, 1))), vec![2, 1]);
        assert_eq!(
            column_profile(&tri((0, 0), (4, 5), (3, 0))),
            vec![1, 2, 3, 4, 1]
        );
    }

    #[test]
    fn shear_examples() {
        let t = tri((0, 0), (3, 4), (2, 0));
        let id = t.shear(&BigInt::zero(), &rat(2, 1)).unwrap();
        assert_eq!(id, t);
        let d = DaggerForm::new(3, 4, 4).unwrap();
        assert_eq!(d.b, rat(2, 1));
        let right = d.right_part().shear(&4.into(), &d.b).unwrap();
        assert!(right.vertex_set().contains(&Point::from_ints(3, 0)));
        // RT(8,3) with K = 5: vertices (0,0), (8,11), (29/5, 0)
        let rt = DaggerForm::new(8, 11, 5).unwrap();
        assert_eq!(rt.b, rat(29, 5));
        let sh = rt.sheared().unwrap();
        let mut expect = vec![
            Point::from_ints(0, 0),
            Point::from_ints(8, 0),
            Point::new(rat(29, 5), rat(29 * 11, 5 * 8)),
        ];
        expect.sort();
        assert_eq!(sh.vertex_set(), expect);
    }

    #[test]
    fn shear_preserves_column_counts() {
        for (m, h, k) in [
            (8, 11, 5),
            (4, 5, 5),
            (4, 7, 4),
            (3, 4, 4),
            (5, 8, 4),
            (7, 9, 3),
        ] {
            let Ok(d) = DaggerForm::new(m, h, k) else {
                continue;
            };
            assert_eq!(
                column_counts(&d.triangle()),
                column_counts(&d.sheared().unwrap()),
                "m={m} h={h} k={k}"
            );
        }
    }

    #[test]
    fn pick_examples() {
        let p = picks_count(&tri((0, 0), (4, 5), (3, 0))).unwrap();
        assert_eq!(
            (p.twice_area.clone(), p.boundary, p.interior),
            (rat(15, 1), 5, 6)
        );
        assert_eq!(p.total(), 11);
        let p = picks_count(&tri((0, 0), (1, 0), (0, 1))).unwrap();
        assert_eq!((p.twice_area, p.boundary, p.interior), (rat(1, 1), 3, 0));
        let p = picks_count(&tri((0, 0), (3, 4), (2, 0))).unwrap();
        assert_eq!(p.total(), 7);
        assert_eq!(picks_count(&rt43()), Err(Error::NonIntegralVertices));
    }

    #[test]
    fn map_examples() {
        let id = AffineLatticeMap::identity();
        assert_eq!(id.apply((3, -2).into()), (3, -2).into());
        // (x, y) -> (M+N-x, K(M-x)+y) for IT(3,1), K = 5
        let f = AffineLatticeMap::new([[-1, 0], [-5, 1]], [4, 15]).unwrap();
        assert_eq!(f.apply((0, 0).into()), (4, 15).into());
        assert_eq!(f.apply((4, 5).into()), (0, 0).into());
        assert_eq!(f.apply((3, 0).into()), (1, 0).into());
        assert!(AffineLatticeMap::new([[2, 0], [0, 1]], [0, 0]).is_err());
        let g = AffineLatticeMap::new([[1, 3], [0, 1]], [2, -1]).unwrap();
        let p = LatticePoint::new(5, 7);
        assert_eq!(g.inverse().apply(g.apply(p)), p);
        assert_eq!(g.compose(&f).apply(p), g.apply(f.apply(p)));
        let t = tri((0, 0), (2, 3), (1, 0));
        let shifted = AffineLatticeMap::translation(5, -3).apply_triangle(&t);
        assert_eq!(column_profile(&shifted), column_profile(&t));
    }

    #[test]
    fn triangle_isomorphisms() {
        let a = tri((0, 0), (4, 5), (3, 0));
        let b = tri((0, 0), (4, 15), (1, 0));
        let f = triangle_isomorphism(&a, &b).unwrap();
        assert_eq!(f.apply_triangle(&a).vertex_set(), b.vertex_set());
        assert!(triangle_isomorphism(&a, &tri((0, 0), (4, 5), (2, 0))).is_none());
        assert!(triangle_isomorphism(&a, &rt43()).is_none());
    }

    #[test]
    fn multiplicities_of_it31() {
        let m = normal_fan_multiplicities(&tri((0, 0), (4, 5), (3, 0)));
        assert_eq!(m, [5.into(), 5.into(), 15.into()]);
    }

    #[test]
    fn hull_and_normal_form() {
        let h = convex_hull(&pts(&[(0, 0), (1, 0), (2, 0), (1, 1), (3, 4), (2, 2)]));
        assert_eq!(h, pts(&[(0, 0), (2, 0), (3, 4)]));
        let a = h.clone();
        let f = AffineLatticeMap::new([[2, 1], [1, 1]], [7, -3]).unwrap();
        let b = convex_hull(&a.iter().map(|&p| f.apply(p)).collect::<Vec<_>>());
        let g = lattice_polygon_isomorphism(&a, &b).unwrap();
        let mut img: Vec<_> = a.iter().map(|&p| g.apply(p)).collect();
        img.sort();
        let mut bs = b.clone();
        bs.sort();
        assert_eq!(img, bs);
        assert!(lattice_polygon_isomorphism(&a, &pts(&[(0, 0), (3, 0), (3, 4)])).is_none());
    }
}
