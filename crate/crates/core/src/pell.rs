//! Integer solutions of `(M+N)^2 = K M N + 1` and the sequence `F_n`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, serde_bigint, Rational};
use crate::error::{Error, Result};

/// A non-negative solution `(M, N)` of `(M+N)^2 = K M N + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PellSolution {
    #[serde(with = "serde_bigint")]
    k: BigInt,
    #[serde(with = "serde_bigint")]
    m: BigInt,
    #[serde(with = "serde_bigint")]
    n: BigInt,
}

impl PellSolution {
    pub fn new(k: impl Into<BigInt>, m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self> {
        let (k, m, n) = (k.into(), m.into(), n.into());
        if k < BigInt::from(3) {
            return Err(Error::KOutOfRange {
                k: i64::try_from(&k).unwrap_or(i64::MIN),
                min: 3,
            });
        }
        if m.is_negative() || n.is_negative() {
            return Err(Error::NegativeResult);
        }
        let s = &m + &n;
        if &s * &s != &k * &m * &n + 1 {
            return Err(Error::NotASolution {
                k: k.to_string(),
                m: m.to_string(),
                n: n.to_string(),
            });
        }
        Ok(Self { k, m, n })
    }

    // callers guarantee the equation holds; images of involutions only
    fn from_parts(k: BigInt, m: BigInt, n: BigInt) -> Result<Self> {
        if m.is_negative() || n.is_negative() {
            return Err(Error::NegativeResult);
        }
        debug_assert_eq!((&m + &n) * (&m + &n), &k * &m * &n + 1);
        Ok(Self { k, m, n })
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn k_i64(&self) -> i64 {
        i64::try_from(&self.k).expect("K fits in i64")
    }

    /// `(0,1)` and `(1,0)` give degenerate integral triangles.
    pub fn degenerate_triangle(&self) -> bool {
        self.m.is_zero() || self.n.is_zero()
    }

    pub fn satisfies_equation(&self) -> bool {
        let s = &self.m + &self.n;
        &s * &s == &self.k * &self.m * &self.n + 1
    }

    pub fn iota0(&self) -> Result<Self> {
        Self::from_parts(self.k.clone(), self.n.clone(), self.m.clone())
    }

    pub fn iota1(&self) -> Result<Self> {
        let n = (&self.k - 2) * &self.m - &self.n;
        Self::from_parts(self.k.clone(), self.m.clone(), n)
    }

    pub fn iota2(&self) -> Result<Self> {
        let m = (&self.k - 2) * &self.n - &self.m;
        Self::from_parts(self.k.clone(), m, self.n.clone())
    }

    /// `τ = ι₁ ι₀`: `(M, N) -> (N, (K-1) N - (M+N))`, one step down the `M > N` branch.
    pub fn tau(&self) -> Result<Self> {
        let n = (&self.k - 1) * &self.n - (&self.m + &self.n);
        Self::from_parts(self.k.clone(), self.n.clone(), n)
    }

    /// `τ⁻¹ = ι₀ ι₁`: `(M, N) -> ((K-2) M - N, M)`.
    pub fn tau_inv(&self) -> Result<Self> {
        let m = (&self.k - 2) * &self.m - &self.n;
        Self::from_parts(self.k.clone(), m, self.m.clone())
    }

    /// Index `n` with `τ⁻ⁿ(1,0) = self`, when `self` lies on the `M ≥ N` branch.
    pub fn chain_index(&self) -> Option<usize> {
        let base = (BigInt::one(), BigInt::zero());
        let mut cur = self.clone();
        let mut steps = 0usize;
        loop {
            if (&cur.m, &cur.n) == (&base.0, &base.1) {
                return Some(steps);
            }
            if cur.m < cur.n {
                return None;
            }
            let next = cur.tau().ok()?;
            // K = 3: τ(1,1) = (1,0); otherwise M+N strictly decreases
            if &next.m + &next.n >= &cur.m + &cur.n {
                return None;
            }
            cur = next;
            steps += 1;
        }
    }
}

impl fmt::Display for PellSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// `(M_n, N_n) = τ⁻ⁿ(1, 0)` for a given `K ≥ 3`.
pub fn chain_solution(k: i64, n: usize) -> Result<PellSolution> {
    if k < 3 {
        return Err(Error::KOutOfRange { k, min: 3 });
    }
    let mut s = PellSolution::new(k, 1, 0)?;
    for _ in 0..n {
        s = s.tau_inv()?;
        if s.m < s.n {
            // only K = 3 leaves the branch, after (1,1)
            return Err(Error::NegativeResult);
        }
    }
    Ok(s)
}

/// The solutions reached from `(0,1)` by applying `ι₀`, `ι₁` alternately.
///
/// Returns at most `count` entries; stops early if the chain cycles (only for `K = 3`).
pub fn enumerate_chain(k: i64, count: usize) -> Result<Vec<PellSolution>> {
    if k < 3 {
        return Err(Error::KOutOfRange { k, min: 3 });
    }
    let mut out = Vec::with_capacity(count);
    let mut seen = HashSet::new();
    let mut cur = PellSolution::new(k, 0, 1)?;
    let mut use_iota0 = true;
    while out.len() < count {
        if !seen.insert((cur.m.clone(), cur.n.clone())) {
            break;
        }
        out.push(cur.clone());
        let next = if use_iota0 { cur.iota0() } else { cur.iota1() };
        use_iota0 = !use_iota0;
        match next {
            Ok(s) => cur = s,
            Err(_) => break,
        }
    }
    Ok(out)
}

/// `F_0 = 0, F_1 = 1, F_{n+2} = (K-2) F_{n+1} - F_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSequence {
    pub k: i64,
    pub values: Vec<BigInt>,
}

impl FSequence {
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }
}

pub fn f_sequence(k: i64, n_max: usize) -> Result<FSequence> {
    if k < 4 {
        return Err(Error::KOutOfRange { k, min: 4 });
    }
    let c = BigInt::from(k - 2);
    let mut values = vec![BigInt::zero(), BigInt::one()];
    while values.len() <= n_max {
        let l = values.len();
        let v = &c * &values[l - 1] - &values[l - 2];
        values.push(v);
    }
    values.truncate(n_max + 1);
    Ok(FSequence { k, values })
}

/// `F_n = Σ_{i<n} (-1)^i C(2n-1-i, i) K^{n-1-i}`.
pub fn f_closed_form(k: i64, n: u64) -> Result<BigInt> {
    if k < 4 {
        return Err(Error::KOutOfRange { k, min: 4 });
    }
    if n == 0 {
        return Ok(BigInt::zero());
    }
    let kb = BigInt::from(k);
    let mut acc = BigInt::zero();
    for i in 0..n {
        let term = binomial(2 * n - 1 - i, i) * num_traits::pow(kb.clone(), (n - 1 - i) as usize);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The `n`-th truncation `(K-2) - 1/((K-2) - 1/(... (K-2)))` (n levels) as a reduced
/// fraction `(p, q)`; equals `(M_n, N_n)`.
pub fn continued_fraction_convergent(k: i64, n: usize) -> Result<(BigInt, BigInt)> {
    if k < 4 {
        return Err(Error::KOutOfRange { k, min: 4 });
    }
    if n == 0 {
        return Err(Error::PreconditionFailed(
            "convergent index starts at 1".into(),
        ));
    }
    let c = Rational::from_integer(BigInt::from(k - 2));
    let mut v = c.clone();
    for _ in 1..n {
        // K >= 4 keeps every tail >= 1
        v = &c - v.recip();
    }
    let (p, q) = (v.numer().clone(), v.denom().clone());
    debug_assert!(p.gcd(&q).is_one());
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(k: i64, m: i64, n: i64) -> PellSolution {
        PellSolution::new(k, m, n).unwrap()
    }

    fn pairs(v: &[PellSolution]) -> Vec<(i64, i64)> {
        v.iter()
            .map(|s| (i64::try_from(s.m()).unwrap(), i64::try_from(s.n()).unwrap()))
            .collect()
    }

    #[test]
    fn rejects_non_solutions() {
        assert!(matches!(
            PellSolution::new(5, 2, 2),
            Err(Error::NotASolution { .. })
        ));
        assert!(PellSolution::new(2, 1, 0).is_err());
    }

    #[test]
    fn involution_examples() {
        assert_eq!(sol(5, 1, 0).iota1().unwrap(), sol(5, 1, 3));
        assert_eq!(sol(5, 1, 3).iota2().unwrap(), sol(5, 8, 3));
        let s = sol(5, 3, 8);
        assert_eq!(s.iota0().unwrap().iota0().unwrap(), s);
        assert_eq!(sol(5, 1, 3).iota1().unwrap(), sol(5, 1, 0));
        assert_eq!(sol(5, 1, 0).iota2().unwrap_err(), Error::NegativeResult);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(sol(4, 2, 1).tau().unwrap(), sol(4, 1, 0));
        let s = sol(7, 24, 5);
        assert_eq!(s.tau_inv().unwrap().tau().unwrap(), s);
        assert_eq!(s.chain_index(), Some(2));
        assert_eq!(sol(7, 5, 24).chain_index(), None);
        assert_eq!(sol(3, 1, 1).chain_index(), Some(1));
    }

    #[test]
    fn chain_examples() {
        assert_eq!(
            pairs(&enumerate_chain(5, 6).unwrap()),
            vec![(0, 1), (1, 0), (1, 3), (3, 1), (3, 8), (8, 3)]
        );
        assert_eq!(
            pairs(&enumerate_chain(3, 10).unwrap()),
            vec![(0, 1), (1, 0), (1, 1)]
        );
        assert!(enumerate_chain(6, 12)
            .unwrap()
            .iter()
            .all(|s| s.satisfies_equation()));
        assert!(sol(5, 0, 1).degenerate_triangle());
        assert!(!sol(5, 3, 1).degenerate_triangle());
    }

    #[test]
    fn chain_solutions_are_f_pairs() {
        for k in 4..=9 {
            let f = f_sequence(k, 12).unwrap();
            for n in 0..=10 {
                let s = chain_solution(k, n).unwrap();
                assert_eq!((s.m(), s.n()), (f.get(n + 1), f.get(n)), "K={k} n={n}");
            }
        }
        assert_eq!(chain_solution(3, 1).unwrap(), sol(3, 1, 1));
        assert!(chain_solution(3, 2).is_err());
    }

    #[test]
    fn f_sequence_examples() {
        let f = f_sequence(5, 4).unwrap();
        let expect: Vec<BigInt> = [0, 1, 3, 8, 21].iter().map(|&v| v.into()).collect();
        assert_eq!(f.values, expect);
        assert_eq!(f_closed_form(5, 4).unwrap(), BigInt::from(21));
        for k in 4..=12 {
            assert_eq!(f_sequence(k, 1).unwrap().values[1], BigInt::one());
        }
        assert!(f_sequence(3, 4).is_err());
    }

    #[test]
    fn convergents() {
        assert_eq!(
            continued_fraction_convergent(6, 2).unwrap(),
            (15.into(), 4.into())
        );
        assert_eq!(
            continued_fraction_convergent(9, 1).unwrap(),
            (7.into(), 1.into())
        );
        // K = 4 gives (n+1)/n
        assert_eq!(
            continued_fraction_convergent(4, 5).unwrap(),
            (6.into(), 5.into())
        );
        for k in 4..=10 {
            for n in 1..=10 {
                let (p, q) = continued_fraction_convergent(k, n).unwrap();
                assert!(p.gcd(&q).is_one());
            }
        }
    }
}
