//! Fraction-free row reduction over the integers and exact nullspaces.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;

/// Integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Multiplies by a rational vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Rational::zero(), |acc, j| {
                    acc + Rational::from_integer(self.get(i, j).clone()) * &v[j]
                })
            })
            .collect()
    }
}

/// Row echelon form computed in place by Bareiss' fraction-free elimination.
///
/// The pivot in each column is the first row (at or below the current one)
/// holding a nonzero entry. Returns the pivot columns in order.
pub fn fraction_free_echelon(m: &mut IntMatrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let piv = m.get(r, c).clone();
        for i in r + 1..m.rows {
            let lead = m.get(i, c).clone();
            for j in c + 1..m.cols {
                let v = (&piv * m.get(i, j) - &lead * m.get(r, j)) / &prev;
                m.set(i, j, v);
            }
            m.set(i, c, BigInt::zero());
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &IntMatrix) -> usize {
    let mut w = m.clone();
    fraction_free_echelon(&mut w).len()
}

/// A basis of `{ v : m v = 0 }`, one vector per free column, each with a 1 in
/// its free column and 0 in the other free columns.
pub fn nullspace(m: &IntMatrix) -> Vec<Vec<Rational>> {
    let mut e = m.clone();
    let pivots = fraction_free_echelon(&mut e);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); m.cols];
        v[f] = Rational::one();
        for (k, &pc) in pivots.iter().enumerate().rev() {
            let mut s = Rational::zero();
            for (j, vj) in v.iter().enumerate().skip(pc + 1) {
                if !vj.is_zero() && !e.get(k, j).is_zero() {
                    s += Rational::from_integer(e.get(k, j).clone()) * vj;
                }
            }
            v[pc] = -s / Rational::from_integer(e.get(k, pc).clone());
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(Zero::is_zero));
        assert_eq!(ns[0], vec![rat(-1, 1), rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn skipped_columns_stay_exact() {
        let m = mat(&[&[0, 2, 4, 1], &[0, 3, 6, 5], &[0, 1, 2, 7], &[0, 5, 1, 2]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(Zero::is_zero));
        assert_eq!(rank(&m.transpose()), 3);
    }

    #[test]
    fn full_rank_square() {
        let m = mat(&[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]]);
        assert!(nullspace(&m).is_empty());
        assert_eq!(rank(&m), 3);
    }
}
