//! SVG and TikZ drawings of a triangle, its lattice points and an optional
//! Newton polygon.
//!
//! The SVG layout is fixed: 40 user units per lattice step and a 20 unit margin,
//! with coordinates printed as exact decimals so the output is byte-stable.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{format_decimal, Rational};
use crate::geometry::{lattice_points, LatticePoint, Point, Triangle};

pub const UNIT: i64 = 40;
pub const MARGIN: i64 = 20;
const PLACES: u32 = 3;

#[derive(Debug, Clone)]
struct Frame {
    x0: Rational,
    y1: Rational,
    width: Rational,
    height: Rational,
}

impl Frame {
    fn new(t: &Triangle, extra: &[LatticePoint]) -> Self {
        let (mut x0, mut x1) = t.x_range();
        let (mut y0, mut y1) = t.y_range();
        for p in extra {
            let (x, y) = (int(p.x), int(p.y));
            x0 = x0.min(x.clone());
            x1 = x1.max(x);
            y0 = y0.min(y.clone());
            y1 = y1.max(y);
        }
        let u = int(UNIT);
        let pad = int(2 * MARGIN);
        Self {
            width: (&x1 - &x0) * &u + &pad,
            height: (&y1 - &y0) * &u + &pad,
            x0,
            y1,
        }
    }

    fn map(&self, x: &Rational, y: &Rational) -> (String, String) {
        let u = int(UNIT);
        let m = int(MARGIN);
        (
            format_decimal(&((x - &self.x0) * &u + &m), PLACES),
            format_decimal(&((&self.y1 - y) * &u + &m), PLACES),
        )
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn points_attr(frame: &Frame, pts: impl Iterator<Item = (Rational, Rational)>) -> String {
    pts.map(|(x, y)| {
        let (sx, sy) = frame.map(&x, &y);
        format!("{sx},{sy}")
    })
    .collect::<Vec<_>>()
    .join(" ")
}

/// SVG 1.1 drawing of `t` with its lattice points; `newton` is drawn dashed on top.
pub fn svg(t: &Triangle, newton: Option<&[LatticePoint]>) -> String {
    let frame = Frame::new(t, newton.unwrap_or(&[]));
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let (w, h) = (
        format_decimal(&frame.width, PLACES),
        format_decimal(&frame.height, PLACES),
    );
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>"
    );
    let verts = points_attr(
        &frame,
        t.vertices()
            .iter()
            .map(|p: &Point| (p.x.clone(), p.y.clone())),
    );
    let _ = writeln!(
        out,
        "<polygon points=\"{verts}\" fill=\"#e8eef8\" stroke=\"black\" stroke-width=\"1.5\"/>"
    );
    if let Some(np) = newton {
        if np.len() >= 2 {
            let pts = points_attr(&frame, np.iter().map(|p| (int(p.x), int(p.y))));
            let _ = writeln!(
                out,
                "<polygon points=\"{pts}\" fill=\"none\" stroke=\"#c03020\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>"
            );
        }
    }
    for p in lattice_points(t) {
        let (cx, cy) = frame.map(&int(p.x), &int(p.y));
        let _ = writeln!(
            out,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"3\" fill=\"black\"/>"
        );
    }
    out.push_str("</svg>\n");
    out
}

/// TikZ picture with the same content as [`svg`], one unit per lattice step.
pub fn tikz(t: &Triangle, newton: Option<&[LatticePoint]>) -> String {
    let coord = |x: &Rational, y: &Rational| {
        format!(
            "({},{})",
            format_decimal(x, PLACES),
            format_decimal(y, PLACES)
        )
    };
    let mut out = String::from("\\begin{tikzpicture}[scale=0.5]\n");
    let path: Vec<String> = t.vertices().iter().map(|p| coord(&p.x, &p.y)).collect();
    let _ = writeln!(
        out,
        "  \\draw[thick, fill=blue!8] {} -- cycle;",
        path.join(" -- ")
    );
    if let Some(np) = newton {
        if np.len() >= 2 {
            let path: Vec<String> = np.iter().map(|p| coord(&int(p.x), &int(p.y))).collect();
            let _ = writeln!(
                out,
                "  \\draw[red, dashed, thick] {} -- cycle;",
                path.join(" -- ")
            );
        }
    }
    for p in lattice_points(t) {
        let _ = writeln!(
            out,
            "  \\fill {} circle (2pt);",
            coord(&int(p.x), &int(p.y))
        );
    }
    let (lo, hi) = t.x_range();
    let _ = writeln!(
        out,
        "  \\draw[gray, ->] {} -- {};",
        coord(&lo.min(Rational::zero()), &Rational::zero()),
        coord(&(hi + Rational::from_integer(1.into())), &Rational::zero())
    );
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn svg_layout() {
        let t = Triangle::from_ints((0, 0), (2, 3), (1, 0)).unwrap();
        let s = svg(&t, None);
        assert!(s.contains("width=\"120\" height=\"160\""));
        // (0,0) sits at the margin, three steps below the top row
        assert!(s.contains("<circle cx=\"20\" cy=\"140\""));
        assert!(s.contains("<circle cx=\"100\" cy=\"20\""));
        assert_eq!(s.matches("<circle").count(), 4);
        assert_eq!(s, svg(&t, None));
    }

    #[test]
    fn svg_rational_vertices() {
        let t = Triangle::new(
            Point::from_ints(0, 0),
            Point::from_ints(4, 7),
            Point::new(rat(9, 4), rat(0, 1)),
        )
        .unwrap();
        let s = svg(
            &t,
            Some(&[
                LatticePoint::new(0, 0),
                LatticePoint::new(4, 7),
                LatticePoint::new(2, 0),
            ]),
        );
        assert!(s.contains("110,300"));
        assert!(s.contains("stroke-dasharray"));
    }

    #[test]
    fn tikz_shape() {
        let t = Triangle::from_ints((0, 0), (2, 3), (1, 0)).unwrap();
        let s = tikz(&t, None);
        assert!(s.starts_with("\\begin{tikzpicture}"));
        assert!(
            s.contains("(0,0) -- (2,3) -- (1,0) -- cycle")
                || s.contains("(0,0) -- (1,0) -- (2,3) -- cycle")
        );
        assert_eq!(s.matches("circle (2pt)").count(), 4);
    }
}
