//! Sparse Laurent polynomials in `x, y` with exact rational coefficients.
//!
//! The text form is a `+`/`-` separated list of terms `c*x^a*y^b`, sorted
//! lexicographically by exponent. Unit coefficients and exponents equal to one
//! are omitted, as are zero exponents, so `1 + x - 3*x*y + x^2*y^3` is canonical.
//! The parser also accepts the fully explicit form `1*x^0*y^0+-3*x^1*y^1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, Rational};
use crate::error::{Error, Result};
use crate::geometry::{convex_hull, segment_lattice_length, AffineLatticeMap, LatticePoint};

#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<LatticePoint, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Rational::one())
    }

    pub fn monomial(a: i64, b: i64, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(LatticePoint::new(a, b), c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<Rational>,
    {
        let mut p = Self::zero();
        for ((a, b), c) in terms {
            p.add_term(LatticePoint::new(a, b), c.into());
        }
        p
    }

    pub fn add_term(&mut self, e: LatticePoint, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: i64, b: i64) -> Rational {
        self.terms
            .get(&LatticePoint::new(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().copied().collect()
    }

    pub fn leading_lex(&self) -> Option<(&LatticePoint, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn shift(&self, dx: i64, dy: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (LatticePoint::new(e.x + dx, e.y + dy), v.clone()))
                .collect(),
        }
    }

    /// Substitutes exponents through a unimodular map (a torus automorphism).
    pub fn map_exponents(&self, f: &AffineLatticeMap) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (f.apply(*e), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponents; `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<LatticePoint> {
        let x = self.terms.keys().map(|e| e.x).min()?;
        let y = self.terms.keys().map(|e| e.y).min()?;
        Some(LatticePoint::new(x, y))
    }

    fn bounding_box(&self) -> Option<(LatticePoint, LatticePoint)> {
        let lo = self.min_exponents()?;
        let hx = self.terms.keys().map(|e| e.x).max()?;
        let hy = self.terms.keys().map(|e| e.y).max()?;
        Some((lo, LatticePoint::new(hx, hy)))
    }

    /// Evaluates at a rational point; every exponent must be non-negative unless
    /// the coordinates are nonzero.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let pw = |b: &Rational, e: i64| -> Rational {
            if e >= 0 {
                num_traits::pow(b.clone(), e as usize)
            } else {
                num_traits::pow(b.recip(), (-e) as usize)
            }
        };
        self.terms
            .iter()
            .map(|(e, c)| c * pw(x, e.x) * pw(y, e.y))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `Σ c_{ab} a^s b^t`, the value of `(x∂x)^s (y∂y)^t p` at `(1,1)`.
    pub fn moment(&self, s: u32, t: u32) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| {
                c * Rational::from_integer(
                    num_traits::pow(BigInt::from(e.x), s as usize)
                        * num_traits::pow(BigInt::from(e.y), t as usize),
                )
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Divides by a polynomial that is known to divide `self`.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        exact_div(self, den)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // integer fast path: all coefficients integral, accumulated densely over the product's box
        if self
            .terms
            .values()
            .chain(rhs.terms.values())
            .all(|c| c.is_integer())
        {
            let (lo1, hi1) = self.bounding_box().expect("nonzero");
            let (lo2, hi2) = rhs.bounding_box().expect("nonzero");
            let (x0, y0) = (lo1.x + lo2.x, lo1.y + lo2.y);
            let w = (hi1.x + hi2.x - x0 + 1) as usize;
            let h = (hi1.y + hi2.y - y0 + 1) as usize;
            let a: Vec<(usize, usize, &BigInt)> = self
                .terms
                .iter()
                .map(|(e, c)| ((e.x - lo1.x) as usize, (e.y - lo1.y) as usize, c.numer()))
                .collect();
            let b: Vec<(usize, usize, &BigInt)> = rhs
                .terms
                .iter()
                .map(|(e, c)| ((e.x - lo2.x) as usize, (e.y - lo2.y) as usize, c.numer()))
                .collect();
            let pairs = a.len().saturating_mul(b.len());
            if w.saturating_mul(h) > pairs.saturating_mul(8).max(1 << 16) {
                let mut acc: HashMap<LatticePoint, BigInt> =
                    HashMap::with_capacity(pairs.min(1 << 20));
                for &(ax, ay, ac) in &a {
                    for &(bx, by, bc) in &b {
                        let e = LatticePoint::new(x0 + (ax + bx) as i64, y0 + (ay + by) as i64);
                        *acc.entry(e).or_default() += ac * bc;
                    }
                }
                return LaurentPoly {
                    terms: acc
                        .into_iter()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(e, v)| (e, Rational::from_integer(v)))
                        .collect(),
                };
            }
            let mut acc = vec![BigInt::zero(); w * h];
            for &(ax, ay, ac) in &a {
                for &(bx, by, bc) in &b {
                    acc[(ax + bx) * h + ay + by] += ac * bc;
                }
            }
            let mut terms = BTreeMap::new();
            for (i, v) in acc.into_iter().enumerate() {
                if !v.is_zero() {
                    let e = LatticePoint::new(x0 + (i / h) as i64, y0 + (i % h) as i64);
                    terms.insert(e, Rational::from_integer(v));
                }
            }
            return LaurentPoly { terms };
        }
        let mut acc: HashMap<LatticePoint, Rational> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = LatticePoint::new(e1.x + e2.x, e1.y + e2.y);
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Quotient `q` with `q * den = num`, or [`Error::NonExactDivision`].
///
/// Both operands are shifted into the positive quadrant and divided with the
/// lexicographic order (x before y); a single divisor forms a Gröbner basis of
/// its ideal, so a leading term the divisor cannot absorb proves non-divisibility.
pub fn exact_div(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let ns = num.min_exponents().expect("nonzero");
    let ds = den.min_exponents().expect("nonzero");
    let mut rem = num.shift(-ns.x, -ns.y);
    let d = den.shift(-ds.x, -ds.y);
    let (lead_e, lead_c) = {
        let (e, c) = d.leading_lex().expect("nonzero");
        (*e, c.clone())
    };
    // a monic integral divisor keeps an integral quotient integral
    let integral = |p: &LaurentPoly| p.terms.values().all(|c| c.is_integer());
    if lead_c.is_integer() && lead_c.numer().magnitude().is_one() && integral(&d) && integral(&rem)
    {
        let q = exact_div_unit(&rem, &d, lead_e, lead_c.numer().is_positive())?;
        return Ok(q.shift(ns.x - ds.x, ns.y - ds.y));
    }
    let lead_inv = lead_c.recip();
    let mut quot = LaurentPoly::zero();
    while let Some((e, c)) = rem.leading_lex() {
        let (e, c) = (*e, c.clone());
        if e.x < lead_e.x || e.y < lead_e.y {
            return Err(Error::NonExactDivision);
        }
        let qe = LatticePoint::new(e.x - lead_e.x, e.y - lead_e.y);
        let qc = &c * &lead_inv;
        for (de, dc) in &d.terms {
            rem.add_term(LatticePoint::new(de.x + qe.x, de.y + qe.y), -(dc * &qc));
        }
        quot.add_term(qe, qc);
    }
    Ok(quot.shift(ns.x - ds.x, ns.y - ds.y))
}

// Integer-only long division by a divisor with leading coefficient ±1.
fn exact_div_unit(
    num: &LaurentPoly,
    den: &LaurentPoly,
    lead_e: LatticePoint,
    lead_positive: bool,
) -> Result<LaurentPoly> {
    let mut rem: BTreeMap<LatticePoint, BigInt> = num
        .terms
        .iter()
        .map(|(e, c)| (*e, c.numer().clone()))
        .collect();
    let d: Vec<(LatticePoint, BigInt)> = den
        .terms
        .iter()
        .filter(|(e, _)| **e != lead_e)
        .map(|(e, c)| (*e, c.numer().clone()))
        .collect();
    let mut quot = BTreeMap::new();
    while let Some((e, c)) = rem.pop_last() {
        if c.is_zero() {
            continue;
        }
        if e.x < lead_e.x || e.y < lead_e.y {
            return Err(Error::NonExactDivision);
        }
        let qe = LatticePoint::new(e.x - lead_e.x, e.y - lead_e.y);
        let qc = if lead_positive { c } else { -c };
        for (de, dc) in &d {
            let v = rem
                .entry(LatticePoint::new(de.x + qe.x, de.y + qe.y))
                .or_default();
            *v -= dc * &qc;
        }
        quot.insert(qe, Rational::from_integer(qc));
    }
    Ok(LaurentPoly { terms: quot })
}

/// Multiplicity of the curve `p = 0` at `e = (1, 1)`.
///
/// Searches degrees `d = 0, 1, ...` for a nonzero moment `Σ c a^s b^t`, `s + t = d`.
/// The search is capped at width + height + 1 of the support's bounding box.
pub fn vanishing_order(p: &LaurentPoly) -> Result<usize> {
    let (lo, hi) = p.bounding_box().ok_or(Error::ZeroPolynomial)?;
    let bound = ((hi.x - lo.x) + (hi.y - lo.y) + 1) as usize;
    // shift to the origin (multiplying by a monomial does not change the order) and
    // clear denominators so every moment is an exact integer
    let lcm = p.terms.values().fold(BigInt::one(), |l, c| {
        num_integer::Integer::lcm(&l, c.denom())
    });
    let mut columns: BTreeMap<i64, Vec<(i64, BigInt)>> = BTreeMap::new();
    for (e, c) in &p.terms {
        let ci = (c * Rational::from_integer(lcm.clone())).to_integer();
        columns
            .entry(e.x - lo.x)
            .or_default()
            .push((e.y - lo.y, ci));
    }
    let cols: Vec<(BigInt, Vec<(BigInt, BigInt)>)> = columns
        .into_iter()
        .map(|(a, v)| {
            (
                BigInt::from(a),
                v.into_iter().map(|(b, c)| (BigInt::from(b), c)).collect(),
            )
        })
        .collect();
    // g[t][j] = Σ_b c_{a_j b} b^t for column j; built one t at a time
    let mut col_pow_b: Vec<Vec<BigInt>> = cols
        .iter()
        .map(|(_, v)| v.iter().map(|(_, c)| c.clone()).collect())
        .collect();
    let mut g: Vec<Vec<BigInt>> = Vec::new();
    for d in 0..=bound {
        // extend g with t = d
        let gt: Vec<BigInt> = col_pow_b
            .iter()
            .map(|v| v.iter().fold(BigInt::zero(), |a, x| a + x))
            .collect();
        g.push(gt);
        for (j, (_, v)) in cols.iter().enumerate() {
            for (i, (b, _)) in v.iter().enumerate() {
                col_pow_b[j][i] *= b;
            }
        }
        for (t, row) in g.iter().enumerate().take(d + 1) {
            let s = d - t;
            let m = cols
                .iter()
                .enumerate()
                .fold(BigInt::zero(), |acc, (j, (a, _))| {
                    acc + num_traits::pow(a.clone(), s) * &row[j]
                });
            if !m.is_zero() {
                return Ok(d);
            }
        }
    }
    Err(Error::OrderBoundExceeded(bound))
}

/// Convex hull of a polynomial's support, counterclockwise from the lexicographic minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NewtonPolygon {
    vertices: Vec<LatticePoint>,
}

impl NewtonPolygon {
    pub fn from_points(points: &[LatticePoint]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self {
            vertices: convex_hull(points),
        })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Edges `(start, end)` in counterclockwise order.
    pub fn edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        if n == 2 {
            return vec![
                (self.vertices[0], self.vertices[1]),
                (self.vertices[1], self.vertices[0]),
            ];
        }
        (0..n)
            .map(|i| (self.vertices[i], self.vertices[(i + 1) % n]))
            .collect()
    }

    /// The edge whose outward normal points along `normal`.
    pub fn edge_with_outward_normal(
        &self,
        normal: (i64, i64),
    ) -> Result<(LatticePoint, LatticePoint)> {
        for (a, b) in self.edges() {
            let (dx, dy) = (b.x - a.x, b.y - a.y);
            let out = (dy, -dx);
            let cross = out.0 as i128 * normal.1 as i128 - out.1 as i128 * normal.0 as i128;
            let dot = out.0 as i128 * normal.0 as i128 + out.1 as i128 * normal.1 as i128;
            if cross == 0 && dot > 0 {
                return Ok((a, b));
            }
        }
        Err(Error::NoSuchEdge)
    }

    pub fn edge_lattice_length(&self, normal: (i64, i64)) -> Result<i64> {
        let (a, b) = self.edge_with_outward_normal(normal)?;
        Ok(segment_lattice_length(a, b))
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        let n = self.vertices.len();
        match n {
            0 => false,
            1 => self.vertices[0] == p,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                let cr = (b.x - a.x) as i128 * (p.y - a.y) as i128
                    - (b.y - a.y) as i128 * (p.x - a.x) as i128;
                cr == 0 && p >= a.min(b) && p <= a.max(b)
            }
            _ => self.edges().iter().all(|(a, b)| {
                (b.x - a.x) as i128 * (p.y - a.y) as i128
                    - (b.y - a.y) as i128 * (p.x - a.x) as i128
                    >= 0
            }),
        }
    }
}

pub fn newton_polygon(p: &LaurentPoly) -> Result<NewtonPolygon> {
    NewtonPolygon::from_points(&p.support())
}

pub fn support(p: &LaurentPoly) -> Vec<LatticePoint> {
    p.support()
}

/// Minkowski sum of two convex lattice polygons.
pub fn minkowski_sum(a: &NewtonPolygon, b: &NewtonPolygon) -> NewtonPolygon {
    let mut pts = Vec::with_capacity(a.vertices.len() * b.vertices.len());
    for p in &a.vertices {
        for q in &b.vertices {
            pts.push(LatticePoint::new(p.x + q.x, p.y + q.y));
        }
    }
    NewtonPolygon {
        vertices: convex_hull(&pts),
    }
}

fn fmt_factor(out: &mut String, var: char, e: i64) {
    if e == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push(var);
    if e != 1 {
        out.push('^');
        out.push_str(&e.to_string());
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut body = String::new();
            let is_const = e.x == 0 && e.y == 0;
            if !mag.is_one() || is_const {
                body.push_str(&format_rational(&mag));
            }
            fmt_factor(&mut body, 'x', e.x);
            fmt_factor(&mut body, 'y', e.y);
            f.write_str(&body)?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits parse"))
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let d = self.digits()?;
        let v = i64::try_from(&d).map_err(|_| Error::Parse {
            pos: self.pos,
            msg: "exponent out of range".into(),
        })?;
        // keep products and sums of parsed exponents inside i64
        if v > (1 << 40) {
            return self.err("exponent out of range");
        }
        Ok(if neg { -v } else { v })
    }

    fn factor(
        &mut self,
        coeff: &mut Rational,
        ex: &mut LatticePoint,
        seen_coeff: &mut bool,
    ) -> Result<()> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                ex.x += self.exponent()?;
            }
            Some(b'y') => {
                self.pos += 1;
                ex.y += self.exponent()?;
            }
            Some(c) if c.is_ascii_digit() => {
                if *seen_coeff {
                    return self.err("repeated coefficient");
                }
                *seen_coeff = true;
                let n = self.digits()?;
                let d = if self.eat(b'/') {
                    self.digits()?
                } else {
                    BigInt::one()
                };
                if d.is_zero() {
                    return self.err("zero denominator");
                }
                *coeff *= Rational::new(n, d);
            }
            _ => return self.err("expected coefficient, x or y"),
        }
        if ex.x.abs() > (1 << 40) || ex.y.abs() > (1 << 40) {
            return self.err("exponent out of range");
        }
        Ok(())
    }

    fn parse(&mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        let mut first = true;
        loop {
            let mut neg = false;
            if first {
                if self.peek().is_none() {
                    return self.err("empty input");
                }
            } else {
                match self.peek() {
                    None => break,
                    Some(b'+') => self.pos += 1,
                    Some(b'-') => {
                        self.pos += 1;
                        neg = true
                    }
                    _ => return self.err("expected '+' or '-'"),
                }
            }
            // one optional sign directly on the term, e.g. "+-3*x"
            if self.eat(b'-') {
                neg = !neg;
            } else {
                self.eat(b'+');
            }
            let mut coeff = Rational::one();
            let mut ex = LatticePoint::ORIGIN;
            let mut seen = false;
            self.factor(&mut coeff, &mut ex, &mut seen)?;
            while self.eat(b'*') {
                self.factor(&mut coeff, &mut ex, &mut seen)?;
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(ex, coeff);
            first = false;
        }
        Ok(out)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        if s.trim() == "0" {
            return Ok(LaurentPoly::zero());
        }
        p.parse()
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn unit_lead_with_fractional_divisor() {
        let q: LaurentPoly = "-1/2 - y".parse().unwrap();
        let p = LaurentPoly::constant(Rational::from_integer(2.into()));
        assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("1 - x") * &p("1 + x"), p("1 - x^2"));
        assert_eq!(
            p("1 - x*y").pow(4),
            p("1 - 4*x*y + 6*x^2*y^2 - 4*x^3*y^3 + x^4*y^4")
        );
        let q = p("3/2*x^-1 + y^2");
        assert_eq!(&q * &LaurentPoly::one(), q);
        assert_eq!(p("x + y").pow(0), LaurentPoly::one());
    }

    #[test]
    fn division_examples() {
        assert_eq!(exact_div(&p("1 - x^2"), &p("1 - x")).unwrap(), p("1 + x"));
        assert_eq!(
            exact_div(&p("1 - x^2"), &p("1 - y")),
            Err(Error::NonExactDivision)
        );
        // ((1-xy)^4 - x^3 (y-1)^4) / (1 - x)
        let num = &p("1 - x*y").pow(4) - &(&p("x^3") * &p("y - 1").pow(4));
        assert_eq!(
            exact_div(&num, &p("1 - x")).unwrap(),
            p("1 + x - 4*x*y + x^2 - 4*x^2*y + 6*x^2*y^2 - x^3*y^4")
        );
        assert_eq!(
            exact_div(&p("x^-2 - y^3*x^-2"), &p("x^5 - x^5*y")).unwrap(),
            p("x^-7 + x^-7*y + x^-7*y^2")
        );
        assert_eq!(
            exact_div(&p("1"), &LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn vanishing_order_examples() {
        assert_eq!(vanishing_order(&p("1 - y")).unwrap(), 1);
        assert_eq!(vanishing_order(&p("1 + x - 3*x*y + x^2*y^3")).unwrap(), 2);
        let xi = p("1 + x - 4*x*y + x^2 - 4*x^2*y + 6*x^2*y^2 - x^3*y^4");
        assert_eq!(vanishing_order(&xi).unwrap(), 3);
        assert_eq!(xi.moment(3, 0), rat(-6, 1));
        assert_eq!(vanishing_order(&p("5")).unwrap(), 0);
        assert_eq!(
            vanishing_order(&LaurentPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
        for n in 0..=10 {
            assert_eq!(vanishing_order(&p("1 - x").pow(n)).unwrap(), n as usize);
        }
    }

    #[test]
    fn newton_polygon_examples() {
        let np = newton_polygon(&p("1 - x")).unwrap();
        assert_eq!(
            np.vertices(),
            &[LatticePoint::new(0, 0), LatticePoint::new(1, 0)]
        );
        let xi = p("1 + x - 4*x*y + x^2 - 4*x^2*y + 6*x^2*y^2 - x^3*y^4");
        let np = newton_polygon(&xi).unwrap();
        assert_eq!(
            np.vertices(),
            &[
                LatticePoint::new(0, 0),
                LatticePoint::new(2, 0),
                LatticePoint::new(3, 4)
            ]
        );
        assert_eq!(np.edge_lattice_length((0, -1)).unwrap(), 2);
        assert_eq!(np.edge_lattice_length((-4, 3)).unwrap(), 1);
        assert_eq!(np.edge_lattice_length((4, -1)).unwrap(), 1);
        assert_eq!(np.edge_lattice_length((1, 1)), Err(Error::NoSuchEdge));
        assert!(newton_polygon(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn text_format() {
        let q = p("1 + x - 3*x*y + x^2*y^3");
        assert_eq!(q.to_string(), "1 + x - 3*x*y + x^2*y^3");
        assert_eq!(p("1*x^0*y^0+-3*x^1*y^1").to_string(), "1 - 3*x*y");
        assert_eq!(p("-x^-1*y^-2 + 2/3").to_string(), "-x^-1*y^-2 + 2/3");
        assert_eq!(p("x*x*y"), p("x^2*y"));
        assert_eq!(p("x - x"), LaurentPoly::zero());
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        for bad in [
            "",
            "+",
            "1 +",
            "x^",
            "2*3",
            "1/0*x",
            "x y",
            "--x",
            "x^99999999999999999999",
        ] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "{bad:?}");
        }
    }
}
