//! The invariant suite behind `negcurves verify` and the acceptance tests.
//!
//! Each check returns a [`CheckResult`]; bounds come from [`VerifyConfig`].

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{expected_point_count, to_i64, Rational};
use crate::families::{Family, FamilyTriangle};
use crate::geometry::{
    column_profile, lattice_point_count, picks_count, twice_area, AffineLatticeMap, LatticePoint,
    Point, Triangle,
};
use crate::laurent::{newton_polygon, vanishing_order, LaurentPoly, NewtonPolygon};
use crate::mds::{classify, d0_intersection, nonmds_inequality, MdsStatus};
use crate::pell::{chain_solution, enumerate_chain, PellSolution};
use crate::recurrence::{
    edge_coefficients, epsilon, expected_edge_coefficients, identities_hold, xi_at,
};
use crate::report::{CheckResult, VerifyReport};
use crate::search::{default_h_max, default_k_max, verify_classification};
use crate::solver::{interpolation_dual, self_intersection, solve_family};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Largest `K` for the Pell chain check.
    pub pell_k: i64,
    /// Order bound for lattice counts.
    pub count_m: u32,
    /// Order and `K` bounds for the two-method comparison and Newton polygons.
    pub dual_m: u32,
    pub dual_k: i64,
    /// Order bound for self-intersections.
    pub self_m: u32,
    /// Largest `ξ^int` order for edge coefficients and computed signs.
    pub coeff_order: u64,
    /// Chain depth for the sign tables.
    pub eps_n: usize,
    /// `K` and chain bounds for the MDS grid.
    pub mds_k: i64,
    pub mds_n: usize,
    /// Orders searched for the census.
    pub census_m: u32,
    /// Random cases per property suite, and the seed.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            pell_k: 10,
            count_m: 60,
            dual_m: 12,
            dual_k: 8,
            self_m: 40,
            coeff_order: 80,
            eps_n: 8,
            mds_k: 6,
            mds_n: 4,
            census_m: 4,
            samples: 500,
            seed: 0x5eed,
        }
    }
}

impl VerifyConfig {
    /// Caps every order bound at `max_m` and every `K` bound at `max_k`.
    pub fn capped(max_m: Option<u32>, max_k: Option<i64>) -> Self {
        let mut c = Self::default();
        if let Some(m) = max_m {
            c.count_m = c.count_m.min(m);
            c.dual_m = c.dual_m.min(m);
            c.self_m = c.self_m.min(m);
            c.coeff_order = c.coeff_order.min(m as u64);
            c.census_m = c.census_m.min(m);
        }
        if let Some(k) = max_k {
            c.pell_k = c.pell_k.min(k);
            c.dual_k = c.dual_k.min(k);
            c.mds_k = c.mds_k.min(k);
        }
        c
    }
}

fn timed(id: u32, name: &str, f: impl FnOnce() -> (bool, String)) -> CheckResult {
    let start = Instant::now();
    let (passed, detail) = f();
    CheckResult {
        id,
        name: name.to_string(),
        passed,
        detail,
        millis: u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX),
    }
}

fn fail(msg: impl Into<String>) -> (bool, String) {
    (false, msg.into())
}

fn satisfies(s: &PellSolution) -> bool {
    let (k, m, n) = (s.k(), s.m(), s.n());
    (m + n) * (m + n) == k * m * n + BigInt::one()
}

fn zero() -> Rational {
    Rational::zero()
}

/// Family members of the chain from `(0,1)` with order at most `max_m`, both branches.
fn chain_members(k: i64, max_m: u32) -> Vec<FamilyTriangle> {
    let bound = BigInt::from(max_m);
    let mut out = Vec::new();
    let mut count = 4;
    loop {
        let chain = enumerate_chain(k, count).expect("K >= 3");
        let done = chain.len() < count
            || chain
                .last()
                .is_some_and(|s| s.m() > &bound && s.n() > &bound);
        if done {
            for s in chain {
                for kind in [Family::Integral, Family::Rational] {
                    if let Ok(t) = FamilyTriangle::new(kind, s.clone(), zero(), zero()) {
                        if t.m() <= bound {
                            out.push(t);
                        }
                    }
                }
            }
            return out;
        }
        count *= 2;
    }
}

pub fn check_pell_chains(cfg: &VerifyConfig) -> CheckResult {
    timed(1, "Pell chains", || {
        let start = Instant::now();
        for k in 3..=cfg.pell_k {
            let chain = match enumerate_chain(k, 8) {
                Ok(c) => c,
                Err(e) => return fail(format!("K={k}: {e}")),
            };
            if let Some(s) = chain.iter().find(|s| !satisfies(s)) {
                return fail(format!("K={k}: {s} is not a solution"));
            }
            if k == 3 {
                let distinct: BTreeSet<_> = chain
                    .iter()
                    .map(|s| (s.m().clone(), s.n().clone()))
                    .collect();
                if distinct.len() != 3 || chain.len() != 3 {
                    return fail(format!("K=3 gives {} solutions", distinct.len()));
                }
            } else if chain.len() != 8 {
                return fail(format!("K={k} gives {} entries", chain.len()));
            }
            if k == 5 {
                let want = [(0, 1), (1, 0), (1, 3), (3, 1), (3, 8), (8, 3)];
                let got: Vec<(BigInt, BigInt)> = chain
                    .iter()
                    .take(6)
                    .map(|s| (s.m().clone(), s.n().clone()))
                    .collect();
                let want: Vec<(BigInt, BigInt)> =
                    want.iter().map(|&(a, b)| (a.into(), b.into())).collect();
                if got != want {
                    return fail(format!("K=5 prefix {got:?}"));
                }
            }
        }
        let el = start.elapsed();
        (
            el.as_secs_f64() < 1.0,
            format!("K=3..={}, 8 entries each, {el:?}", cfg.pell_k),
        )
    })
}

pub fn check_lattice_counts(cfg: &VerifyConfig) -> CheckResult {
    timed(2, "Lattice counts and column profiles", || {
        let start = Instant::now();
        // for K > m+2 every member of order <= m has order 1
        let k_max = cfg.count_m as i64 + 2;
        let mut checked = 0usize;
        for k in 3..=k_max {
            for t in chain_members(k, cfg.count_m) {
                let m = u64::try_from(t.m()).expect("small order");
                let count = lattice_point_count(t.triangle());
                if count != expected_point_count(m) {
                    return fail(format!("{}: {count} lattice points", t.label()));
                }
                let mut prof = column_profile(t.triangle());
                prof.sort_unstable();
                let want: Vec<u64> = std::iter::once(1).chain(1..=m).collect();
                if prof != want {
                    return fail(format!("{}: column profile {prof:?}", t.label()));
                }
                checked += 1;
            }
        }
        let el = start.elapsed();
        (
            el.as_secs_f64() < 60.0,
            format!(
                "{checked} triangles, K=3..={k_max}, m<={}, {el:?}",
                cfg.count_m
            ),
        )
    })
}

/// `(K, n)` on the `M ≥ N` chain with `ξ^rat` order `M_n ≤ max_m`.
fn chain_cells(k_max: i64, max_m: u32) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    for k in 3..=k_max {
        for n in 0.. {
            let Ok(s) = chain_solution(k, n) else { break };
            if s.m() > &BigInt::from(max_m) {
                break;
            }
            out.push((k, n));
        }
    }
    out
}

pub fn check_dual_method(cfg: &VerifyConfig) -> CheckResult {
    timed(3, "Recurrence and solver agree", || {
        let cells = chain_cells(cfg.dual_k, cfg.dual_m);
        let results: Vec<std::result::Result<usize, String>> = cells
            .par_iter()
            .map(|&(k, n)| {
                let pair = xi_at(k, n).map_err(|e| format!("K={k} n={n}: {e}"))?;
                let mut done = 0;
                for kind in [Family::Integral, Family::Rational] {
                    let Ok(t) = FamilyTriangle::new(kind, pair.solution.clone(), zero(), zero())
                    else {
                        continue;
                    };
                    if t.m() > BigInt::from(cfg.dual_m) {
                        continue;
                    }
                    let poly = match kind {
                        Family::Integral => &pair.xi_int,
                        Family::Rational => &pair.xi_rat,
                    };
                    let nc = solve_family(&t).map_err(|e| format!("{}: {e}", t.label()))?;
                    if &nc.poly != poly {
                        return Err(format!("{}: methods differ", t.label()));
                    }
                    let ord = vanishing_order(poly).map_err(|e| e.to_string())?;
                    if BigInt::from(ord) != t.m() {
                        return Err(format!("{}: order {ord}", t.label()));
                    }
                    done += 1;
                }
                if n > 0 {
                    let prev = xi_at(k, n - 1).map_err(|e| e.to_string())?;
                    if !identities_hold(&pair, &prev).map_err(|e| e.to_string())? {
                        return Err(format!("K={k} n={n}: identities fail"));
                    }
                }
                Ok(done)
            })
            .collect();
        let mut total = 0;
        for r in results {
            match r {
                Ok(d) => total += d,
                Err(e) => return fail(e),
            }
        }
        (
            true,
            format!("{total} curves, K<={}, m<={}", cfg.dual_k, cfg.dual_m),
        )
    })
}

pub fn check_self_intersections(cfg: &VerifyConfig) -> CheckResult {
    timed(4, "Self-intersections", || {
        let k_max = cfg.self_m as i64 + 2;
        let mut checked = 0usize;
        for k in 3..=k_max {
            let kr = Rational::from_integer(k.into());
            for t in chain_members(k, cfg.self_m) {
                let s = t.solution();
                if s.k() * s.m() * s.n() - (s.m() + s.n()) * (s.m() + s.n()) != -BigInt::one() {
                    return fail(format!("{}: KMN-(M+N)^2 != -1", t.label()));
                }
                let m = u32::try_from(t.m()).expect("small order");
                let got = self_intersection(t.triangle(), m);
                let want = match t.kind() {
                    Family::Integral => -Rational::one(),
                    Family::Rational => -kr.recip(),
                };
                if got != want {
                    return fail(format!("{}: C.C = {got}", t.label()));
                }
                checked += 1;
            }
        }
        let it = FamilyTriangle::new(
            Family::Integral,
            PellSolution::new(5, 3, 1).expect("solution"),
            zero(),
            zero(),
        )
        .expect("triangle");
        let rt = FamilyTriangle::new(
            Family::Rational,
            PellSolution::new(4, 4, 3).expect("solution"),
            zero(),
            zero(),
        )
        .expect("triangle");
        let fig = (
            self_intersection(it.triangle(), 4),
            self_intersection(rt.triangle(), 4),
        );
        if fig != (-Rational::one(), Rational::new((-1).into(), 4.into())) {
            return fail(format!("m=4 values {fig:?}"));
        }
        (true, format!("{checked} triangles, m<={}", cfg.self_m))
    })
}

pub fn check_newton_polygons(cfg: &VerifyConfig) -> CheckResult {
    timed(5, "Newton polygons and edge coefficients", || {
        let mut hull_checked = 0;
        for (k, n) in chain_cells(cfg.dual_k, cfg.dual_m) {
            if n == 0 {
                continue;
            }
            let pair = match xi_at(k, n) {
                Ok(p) => p,
                Err(e) => return fail(e.to_string()),
            };
            let Ok(t) =
                FamilyTriangle::new(Family::Integral, pair.solution.clone(), zero(), zero())
            else {
                continue;
            };
            if t.m() > BigInt::from(cfg.dual_m) {
                continue;
            }
            let verts = t.triangle().lattice_vertices().expect("integral triangle");
            let want = NewtonPolygon::from_points(&verts).expect("nonempty");
            if newton_polygon(&pair.xi_int).ok() != Some(want) {
                return fail(format!(
                    "{}: Newton polygon differs from the triangle",
                    t.label()
                ));
            }
            hull_checked += 1;
        }
        let mut slope = Vec::new();
        for k in 4..=cfg.dual_k.max(4) {
            let pair = match xi_at(k, 2) {
                Ok(p) => p,
                Err(e) => return fail(e.to_string()),
            };
            let np = newton_polygon(&pair.xi_rat).expect("nonzero");
            match np.edge_lattice_length((k, -1)) {
                Ok(len) if len == k - 3 => slope.push(k),
                Ok(len) => return fail(format!("K={k}: slope-K edge length {len}")),
                Err(e) => return fail(format!("K={k}: {e}")),
            }
        }
        let mut coeff = Vec::new();
        for k in 4..=cfg.dual_k.max(4) {
            for n in 1..=6usize {
                let s = chain_solution(k, n).expect("K >= 4");
                if u64::try_from(s.m() + s.n()).unwrap_or(u64::MAX) > cfg.coeff_order {
                    break;
                }
                let pair = match xi_at(k, n) {
                    Ok(p) => p,
                    Err(e) => return fail(e.to_string()),
                };
                for fam in [Family::Integral, Family::Rational] {
                    let got = edge_coefficients(&pair, fam);
                    let want = expected_edge_coefficients(k, n, fam);
                    match (got, want) {
                        (Ok(g), Ok(w)) if g == w => {}
                        (g, w) => return fail(format!("K={k} n={n} {fam}: {g:?} vs {w:?}")),
                    }
                }
                coeff.push(format!("{k}:{n}"));
            }
        }
        let k4_full = (2..=6).all(|n| coeff.contains(&format!("4:{n}")));
        (
            k4_full || cfg.coeff_order < 13,
            format!(
                "{hull_checked} integral hulls; slope-K edges for K in {slope:?}; edge coefficients at K:n {}",
                coeff.join(",")
            ),
        )
    })
}

fn top_sign(p: &LaurentPoly, x: &BigInt, y: &BigInt) -> Option<i32> {
    let c = p.coeff(to_i64(x).ok()?, to_i64(y).ok()?);
    if c == Rational::one() {
        Some(1)
    } else if c == -Rational::one() {
        Some(-1)
    } else {
        None
    }
}

pub fn check_epsilon(cfg: &VerifyConfig) -> CheckResult {
    timed(6, "Sign tables", || {
        let mut computed = 0;
        for k in 3..=12i64 {
            let mut prev: Option<(i32, i32)> = None;
            for n in 0..=cfg.eps_n {
                let table = (
                    epsilon(k, n, Family::Integral),
                    epsilon(k, n, Family::Rational),
                );
                // signs read off the polynomials where they are small enough to compute
                let sol = chain_solution(k, n);
                let small = sol.as_ref().is_ok_and(|s| {
                    u64::try_from(s.m() + s.n()).unwrap_or(u64::MAX) <= cfg.coeff_order
                });
                let signs = if small {
                    let pair = match xi_at(k, n) {
                        Ok(p) => p,
                        Err(e) => return fail(e.to_string()),
                    };
                    let s = &pair.solution;
                    let mn = s.m() + s.n();
                    let si = top_sign(&pair.xi_int, &mn, &(s.k() * s.n()));
                    let sr = top_sign(&pair.xi_rat, s.m(), &mn);
                    match (si, sr) {
                        (Some(a), Some(b)) => {
                            computed += 1;
                            (a, b)
                        }
                        _ => return fail(format!("K={k} n={n}: top coefficient is not a sign")),
                    }
                } else {
                    table
                };
                if signs != table {
                    return fail(format!("K={k} n={n}: computed {signs:?}, table {table:?}"));
                }
                if let Some((pi, pr)) = prev {
                    let (ei, er) = signs;
                    if ei != er * pr || pr.pow(k as u32) != ei * pi {
                        return fail(format!("K={k} n={n}: consistency fails"));
                    }
                }
                prev = Some(signs);
            }
        }
        (
            true,
            format!(
                "K=3..=12, n<={}; {computed} sign pairs read from polynomials",
                cfg.eps_n
            ),
        )
    })
}

pub fn check_mds(cfg: &VerifyConfig) -> CheckResult {
    timed(7, "MDS truth table", || {
        let mut cells = Vec::new();
        for kind in [Family::Integral, Family::Rational] {
            for k in 3..=cfg.mds_k {
                for n in 0..=cfg.mds_n {
                    let Ok(s) = chain_solution(k, n) else { break };
                    let Ok(base) = FamilyTriangle::new(kind, s, zero(), zero()) else {
                        continue;
                    };
                    let b = base.negative_curve_budget();
                    let steps = [
                        zero(),
                        &b / Rational::from_integer(3.into()),
                        &b / Rational::from_integer(2.into()),
                    ];
                    for a in &steps {
                        for c in &steps {
                            cells.push(
                                base.with_extension(a.clone(), c.clone())
                                    .expect("non-negative"),
                            );
                        }
                    }
                }
            }
        }
        let results: Vec<std::result::Result<MdsStatus, String>> = cells
            .par_iter()
            .map(|t| {
                let s = t.solution();
                let want = if t.alpha().is_zero() || t.beta().is_zero() {
                    MdsStatus::Mds
                } else if match t.kind() {
                    Family::Integral => s.n() > &BigInt::one(),
                    Family::Rational => s.m() + s.n() > BigInt::one(),
                } {
                    MdsStatus::NonMds
                } else {
                    MdsStatus::Unknown
                };
                let v = classify(t).map_err(|e| format!("{}: {e}", t.label()))?;
                if v.status != want {
                    return Err(format!(
                        "{} a={} b={}: {} expected {}",
                        t.label(),
                        t.alpha(),
                        t.beta(),
                        v.status,
                        want
                    ));
                }
                if (v.status == MdsStatus::Mds) != v.witness.is_some() {
                    return Err(format!("{}: witness presence", t.label()));
                }
                if !d0_intersection(t).is_zero() {
                    return Err(format!("{}: D0.C != 0", t.label()));
                }
                if !t.alpha().is_zero()
                    && !t.beta().is_zero()
                    && (v.status == MdsStatus::NonMds) != nonmds_inequality(t)
                {
                    return Err(format!("{}: inequality disagrees", t.label()));
                }
                Ok(v.status)
            })
            .collect();
        let mut tally = [0usize; 3];
        for r in results {
            match r {
                Ok(MdsStatus::Mds) => tally[0] += 1,
                Ok(MdsStatus::NonMds) => tally[1] += 1,
                Ok(MdsStatus::Unknown) => tally[2] += 1,
                Err(e) => return fail(e),
            }
        }
        (
            true,
            format!(
                "{} cells (K<={}, n<={}): {} MDS, {} NonMDS, {} Unknown",
                cells.len(),
                cfg.mds_k,
                cfg.mds_n,
                tally[0],
                tally[1],
                tally[2]
            ),
        )
    })
}

pub fn check_census(cfg: &VerifyConfig) -> CheckResult {
    timed(8, "Census of small orders", || {
        let start = Instant::now();
        let expected = [(1, 1), (2, 1), (3, 2), (4, 2)];
        let mut found = Vec::new();
        for &(m, want) in expected.iter().filter(|(m, _)| *m <= cfg.census_m as i64) {
            let r = verify_classification(m, default_h_max(m), default_k_max(m));
            if !r.clean() {
                return fail(format!("m={m}: unmatched classes or solver failures"));
            }
            if r.curve_class_count() != want {
                return fail(format!("m={m}: {} classes", r.curve_class_count()));
            }
            if m == 4 {
                let owner = |fam: Family, k: i64, bm: i64, bn: i64| {
                    r.curve_classes.iter().position(|c| {
                        c.matches
                            .iter()
                            .any(|x| x.family == fam && x.k == k && x.big_m == bm && x.big_n == bn)
                    })
                };
                match (
                    owner(Family::Integral, 5, 3, 1),
                    owner(Family::Rational, 4, 4, 3),
                ) {
                    (Some(a), Some(b)) if a != b => {}
                    other => return fail(format!("m=4 matches {other:?}")),
                }
            }
            found.push(format!("m={m}: {want}"));
        }
        let el = start.elapsed();
        (
            el.as_secs_f64() < 120.0,
            format!("{} ({el:?})", found.join(", ")),
        )
    })
}

fn random_triangle(rng: &mut ChaCha8Rng, span: i64) -> Triangle {
    loop {
        let mut p = || LatticePoint::new(rng.gen_range(-span..=span), rng.gen_range(-span..=span));
        let (a, b, c) = (p(), p(), p());
        if let Ok(t) = Triangle::new(a.to_point(), b.to_point(), c.to_point()) {
            return t;
        }
    }
}

fn random_unimodular(rng: &mut ChaCha8Rng) -> AffineLatticeMap {
    let mut f = AffineLatticeMap::identity();
    for _ in 0..rng.gen_range(1..6) {
        let k = rng.gen_range(-3..=3);
        let g = match rng.gen_range(0..3) {
            0 => AffineLatticeMap::new([[1, k], [0, 1]], [0, 0]),
            1 => AffineLatticeMap::new([[1, 0], [k, 1]], [0, 0]),
            _ => AffineLatticeMap::new([[0, 1], [1, 0]], [0, 0]),
        }
        .expect("unimodular");
        f = g.compose(&f);
    }
    let t = AffineLatticeMap::translation(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
    t.compose(&f)
}

fn random_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for _ in 0..rng.gen_range(1..5) {
        let c = rng.gen_range(-4i64..=4);
        p.add_term(
            LatticePoint::new(rng.gen_range(-2..=3), rng.gen_range(-2..=3)),
            Rational::from_integer(c.into()),
        );
    }
    if p.is_zero() {
        p = LaurentPoly::one();
    }
    let xm1 = LaurentPoly::x() - LaurentPoly::one();
    let ym1 = LaurentPoly::y() - LaurentPoly::one();
    let xmy = LaurentPoly::x() - LaurentPoly::y();
    p * xm1.pow(rng.gen_range(0..3)) * ym1.pow(rng.gen_range(0..3)) * xmy.pow(rng.gen_range(0..2))
}

pub fn check_properties(cfg: &VerifyConfig) -> CheckResult {
    timed(9, "Property suites", || {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut singular = 0;
        for i in 0..cfg.samples {
            let m: u32 = rng.gen_range(1..=5);
            let need = (m * (m + 1) / 2) as usize;
            // small boxes make degenerate configurations common
            let span = if i % 2 == 0 {
                m as i64
            } else {
                2 * m as i64 + 2
            };
            let mut s = BTreeSet::new();
            while s.len() < need {
                s.insert(LatticePoint::new(
                    rng.gen_range(0..=span),
                    rng.gen_range(0..=span),
                ));
            }
            let pts: Vec<LatticePoint> = s.into_iter().collect();
            match interpolation_dual(&pts, m) {
                Ok((a, b)) if a == b => singular += a as usize,
                Ok(flags) => return fail(format!("duality flags {flags:?} on {pts:?}")),
                Err(e) => return fail(e.to_string()),
            }
        }
        let pairs = cfg.samples * 2 / 5;
        for _ in 0..pairs {
            let (p, q) = (random_poly(&mut rng), random_poly(&mut rng));
            let (op, oq, opq) = (
                vanishing_order(&p),
                vanishing_order(&q),
                vanishing_order(&(&p * &q)),
            );
            match (op, oq, opq) {
                (Ok(a), Ok(b), Ok(c)) if a + b == c => {}
                other => return fail(format!("order not additive: {other:?} for {p} and {q}")),
            }
        }
        for _ in 0..pairs {
            let t = random_triangle(&mut rng, 12);
            let pc = match picks_count(&t) {
                Ok(pc) => pc,
                Err(e) => return fail(e.to_string()),
            };
            let lhs = Rational::from_integer(BigInt::from(2 * pc.interior + pc.boundary) - 2);
            if pc.total() != lattice_point_count(&t) || lhs != twice_area(&t) {
                return fail(format!("Pick fails on {t}"));
            }
        }
        for i in 0..pairs {
            let t = if i % 2 == 0 {
                random_triangle(&mut rng, 8)
            } else {
                let d = rng.gen_range(1..=5i64);
                let q =
                    |r: &mut ChaCha8Rng| Rational::new(r.gen_range(-20i64..=20).into(), d.into());
                let pts = [
                    (q(&mut rng), q(&mut rng)),
                    (q(&mut rng), q(&mut rng)),
                    (q(&mut rng), q(&mut rng)),
                ];
                match Triangle::new(
                    Point::new(pts[0].0.clone(), pts[0].1.clone()),
                    Point::new(pts[1].0.clone(), pts[1].1.clone()),
                    Point::new(pts[2].0.clone(), pts[2].1.clone()),
                ) {
                    Ok(t) => t,
                    Err(_) => continue,
                }
            };
            let f = random_unimodular(&mut rng);
            let img = f.apply_triangle(&t);
            if lattice_point_count(&img) != lattice_point_count(&t)
                || twice_area(&img) != twice_area(&t)
            {
                return fail(format!("{f} changes counts or area of {t}"));
            }
        }
        (
            true,
            format!(
                "{} point sets ({singular} singular), {pairs} polynomial pairs, {pairs} Pick triangles, {pairs} unimodular maps",
                cfg.samples
            ),
        )
    })
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckResult> {
    vec![
        check_pell_chains(cfg),
        check_lattice_counts(cfg),
        check_dual_method(cfg),
        check_self_intersections(cfg),
        check_newton_polygons(cfg),
        check_epsilon(cfg),
        check_mds(cfg),
        check_census(cfg),
        check_properties(cfg),
    ]
}

pub fn verify_report(max_m: Option<u32>, max_k: Option<i64>) -> VerifyReport {
    let cfg = VerifyConfig::capped(max_m, max_k);
    VerifyReport {
        max_m: max_m.unwrap_or(cfg.count_m),
        max_k: max_k.unwrap_or(cfg.pell_k),
        checks: run_all(&cfg),
    }
}
