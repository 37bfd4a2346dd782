//! The curve polynomials `ξ^int`, `ξ^rat` along the chain `τ⁻ⁿ(1,0)`, computed
//! by exact division instead of linear algebra.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, to_i64, Rational};
use crate::error::{Error, Result};
use crate::families::{mirror_map, Family};
use crate::laurent::LaurentPoly;
use crate::pell::{f_sequence, PellSolution};

pub const DEFAULT_CHAIN_CAP: usize = 12;

/// Both curve polynomials of one solution, normalized to constant term 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiPair {
    pub solution: PellSolution,
    /// Chain index `n` of the `M ≥ N` representative.
    pub index: usize,
    pub xi_int: LaurentPoly,
    pub xi_rat: LaurentPoly,
    pub eps_int: i32,
    pub eps_rat: i32,
}

/// Sign of the top coefficient of `ξ^int` or `ξ^rat` at `(M_n, N_n)`.
pub fn epsilon(k: i64, n: usize, family: Family) -> i32 {
    let plus = if k % 2 == 0 {
        match family {
            Family::Integral => false,
            Family::Rational => n % 2 == 1,
        }
    } else {
        match family {
            Family::Integral => n % 3 == 1,
            Family::Rational => n % 3 == 2,
        }
    };
    if plus {
        1
    } else {
        -1
    }
}

/// `c · x^a (y-1)^e`.
fn x_pow_y_minus_one(c: i32, a: i64, e: u64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for j in 0..=e {
        let mut v = binomial(e, j) * c;
        if (e - j) % 2 == 1 {
            v = -v;
        }
        p.add_term((a, j as i64).into(), Rational::from_integer(v));
    }
    p
}

fn u64_of(v: &BigInt) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow)
}

/// One step up the chain from `prev = ξ_{τ(M,N)}` to `ξ_{M,N}`.
fn ascend(prev: &XiPair, index: usize) -> Result<XiPair> {
    let s = prev.solution.tau_inv()?;
    let k = to_i64(s.k())?;
    let (m, n) = (u64_of(s.m())?, u64_of(s.n())?);
    let eps_int = epsilon(k, index, Family::Integral);
    let eps_rat = epsilon(k, index, Family::Rational);
    let k_exp = u32::try_from(k).map_err(|_| Error::Overflow)?;
    let num = prev.xi_rat.pow(k_exp) + x_pow_y_minus_one(eps_int, (m + n) as i64, k as u64 * n);
    let xi_int = num.exact_div(&prev.xi_int)?;
    let num = &xi_int + &x_pow_y_minus_one(eps_rat, m as i64, m + n);
    let xi_rat = num.exact_div(&prev.xi_rat)?;
    Ok(XiPair {
        solution: s,
        index,
        xi_int,
        xi_rat,
        eps_int,
        eps_rat,
    })
}

fn base_pair(k: i64) -> Result<XiPair> {
    Ok(XiPair {
        solution: PellSolution::new(k, 1, 0)?,
        index: 0,
        xi_int: LaurentPoly::from_terms(
            [((0, 0), 1), ((1, 0), -1)].map(|(e, c)| (e, Rational::from_integer(c.into()))),
        ),
        xi_rat: LaurentPoly::from_terms(
            [((0, 0), 1), ((1, 1), -1)].map(|(e, c)| (e, Rational::from_integer(c.into()))),
        ),
        eps_int: -1,
        eps_rat: -1,
    })
}

type ChainSlot = Arc<Mutex<Vec<Arc<XiPair>>>>;

/// Memo of chains keyed by `K`, each grown on demand up to `cap`.
#[derive(Debug)]
pub struct XiMemo {
    cap: usize,
    chains: RwLock<HashMap<i64, ChainSlot>>,
}

impl Default for XiMemo {
    fn default() -> Self {
        Self::with_cap(DEFAULT_CHAIN_CAP)
    }
}

impl XiMemo {
    pub fn with_cap(cap: usize) -> Self {
        Self {
            cap,
            chains: RwLock::new(HashMap::new()),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `ξ` at `(M_n, N_n)`.
    pub fn pair(&self, k: i64, n: usize) -> Result<Arc<XiPair>> {
        if n > self.cap {
            return Err(Error::ChainTooDeep {
                index: n,
                cap: self.cap,
            });
        }
        if k < 3 {
            return Err(Error::KOutOfRange { k, min: 3 });
        }
        let slot = {
            let chains = self.chains.read().expect("memo lock");
            chains.get(&k).cloned()
        };
        // one lock per K so different chains extend in parallel
        let slot = match slot {
            Some(s) => s,
            None => self
                .chains
                .write()
                .expect("memo lock")
                .entry(k)
                .or_default()
                .clone(),
        };
        let mut chain = slot.lock().expect("chain lock");
        if chain.is_empty() {
            chain.push(Arc::new(base_pair(k)?));
        }
        while chain.len() <= n {
            let prev = chain.last().expect("nonempty chain");
            let next = ascend(prev, chain.len())?;
            if next.solution.m() < next.solution.n() {
                // K = 3 leaves the M ≥ N branch after (1,1)
                return Err(Error::NegativeResult);
            }
            chain.push(Arc::new(next));
        }
        Ok(chain[n].clone())
    }

    /// `ξ` for any solution whose family member is on, or mirrors onto, the chain.
    pub fn xi(&self, s: &PellSolution) -> Result<XiPair> {
        let k = to_i64(s.k())?;
        if let Some(n) = s.chain_index() {
            return Ok((*self.pair(k, n)?).clone());
        }
        // M < N: pull both polynomials back from their mirrors
        let int_src = s.iota0()?;
        let rat_src = s.iota1()?;
        let ni = int_src.chain_index().ok_or(Error::NegativeResult)?;
        let nr = rat_src.chain_index().ok_or(Error::NegativeResult)?;
        let pi = self.pair(k, ni)?;
        let pr = self.pair(k, nr)?;
        let xi_int = renormalize(
            &pi.xi_int
                .map_exponents(&mirror_map(Family::Integral, &int_src)?),
        )?;
        let xi_rat = renormalize(
            &pr.xi_rat
                .map_exponents(&mirror_map(Family::Rational, &rat_src)?),
        )?;
        let m = s.m().clone();
        let n = s.n().clone();
        let eps_int = top_sign(&xi_int, &(&m + &n), &(s.k() * &n))?;
        let eps_rat = top_sign(&xi_rat, &m, &(&m + &n))?;
        Ok(XiPair {
            solution: s.clone(),
            index: ni.max(nr),
            xi_int,
            xi_rat,
            eps_int,
            eps_rat,
        })
    }
}

fn renormalize(p: &LaurentPoly) -> Result<LaurentPoly> {
    let c = p.constant_term();
    if c.is_zero() {
        return Err(Error::PreconditionFailed(
            "mirrored polynomial has no constant term".into(),
        ));
    }
    Ok(p.scale(&(Rational::one() / c)))
}

fn top_sign(p: &LaurentPoly, x: &BigInt, y: &BigInt) -> Result<i32> {
    let c = p.coeff(to_i64(x)?, to_i64(y)?);
    if c == Rational::one() {
        Ok(1)
    } else if c == -Rational::one() {
        Ok(-1)
    } else {
        Err(Error::PreconditionFailed(format!(
            "top coefficient {c} is not a sign"
        )))
    }
}

fn global() -> &'static XiMemo {
    static MEMO: OnceLock<XiMemo> = OnceLock::new();
    MEMO.get_or_init(XiMemo::default)
}

/// `ξ` through the process-wide memo (chain depth capped at [`DEFAULT_CHAIN_CAP`]).
pub fn xi(s: &PellSolution) -> Result<XiPair> {
    global().xi(s)
}

/// `ξ` at chain position `n` through the process-wide memo.
pub fn xi_at(k: i64, n: usize) -> Result<Arc<XiPair>> {
    global().pair(k, n)
}

/// Checks both defining relations between `pair` and `prev = ξ_{τ(M,N)}`:
/// `ξ^int ξ^int_τ = (ξ^rat_τ)^K + ε^int x^{M+N}(y-1)^{KN}` and
/// `ξ^int = ξ^rat ξ^rat_τ - ε^rat x^M (y-1)^{M+N}`.
pub fn identities_hold(pair: &XiPair, prev: &XiPair) -> Result<bool> {
    let s = &pair.solution;
    let k = to_i64(s.k())?;
    let (m, n) = (u64_of(s.m())?, u64_of(s.n())?);
    let k_exp = u32::try_from(k).map_err(|_| Error::Overflow)?;
    let lhs = &pair.xi_int * &prev.xi_int;
    let rhs =
        prev.xi_rat.pow(k_exp) + x_pow_y_minus_one(pair.eps_int, (m + n) as i64, k as u64 * n);
    if lhs != rhs {
        return Ok(false);
    }
    let rhs = &(&pair.xi_rat * &prev.xi_rat) - &x_pow_y_minus_one(pair.eps_rat, m as i64, m + n);
    Ok(pair.xi_int == rhs)
}

/// `(a, b)` edge coefficients of `ξ^int` or `ξ^rat`: `a` is the coefficient of
/// `x`, `b` the coefficient next to the top vertex along the slope-`K` edge
/// after scaling the top coefficient to 1.
pub fn edge_coefficients(pair: &XiPair, family: Family) -> Result<(BigInt, BigInt)> {
    let s = &pair.solution;
    let k = s.k();
    let (m, n) = (s.m(), s.n());
    let (poly, top, next) = match family {
        Family::Integral => {
            let top = (m + n, k * n);
            let next = (&top.0 - 1, &top.1 - k);
            (&pair.xi_int, top, next)
        }
        Family::Rational => {
            let top = (m.clone(), m + n);
            let next = (m - 1, m + n - k);
            (&pair.xi_rat, top, next)
        }
    };
    let a = poly.coeff(1, 0);
    let top_c = poly.coeff(to_i64(&top.0)?, to_i64(&top.1)?);
    if top_c.is_zero() {
        return Err(Error::PreconditionFailed("top coefficient vanishes".into()));
    }
    let b = poly.coeff(to_i64(&next.0)?, to_i64(&next.1)?) / top_c;
    if !a.is_integer() || !b.is_integer() {
        return Err(Error::PreconditionFailed(
            "non-integral edge coefficient".into(),
        ));
    }
    Ok((a.to_integer(), b.to_integer()))
}

/// The values `edge_coefficients` must take at `(M_n, N_n)`, `n ≥ 1`, `K ≥ 4`.
pub fn expected_edge_coefficients(k: i64, n: usize, family: Family) -> Result<(BigInt, BigInt)> {
    if n == 0 {
        return Err(Error::PreconditionFailed(
            "edge coefficients start at n = 1".into(),
        ));
    }
    let f = f_sequence(k, n)?;
    let sgn = if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let fm1 = f.get(n - 1).clone();
    let fm2 = if n >= 2 {
        f.get(n - 2).clone()
    } else {
        BigInt::zero()
    };
    Ok(match family {
        Family::Rational => {
            let b = if n == 1 { BigInt::zero() } else { &sgn * &fm1 };
            (f.get(n).clone(), b)
        }
        Family::Integral => {
            let b = if n == 1 { -sgn } else { &sgn * (&fm1 + &fm2) };
            (f.get(n) + &fm1, b)
        }
    })
}
