//! Acceptance suite: one test, and one PASS/FAIL line, per criterion, plus
//! oracles that do not share code paths with the library.
//!
//! Run with `cargo test -p negcurves --test acceptance -- --nocapture`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use negcurves::families::{Family, FamilyTriangle};
use negcurves::geometry::{DaggerForm, Triangle};
use negcurves::pell::{chain_solution, enumerate_chain};
use negcurves::report::CheckResult;
use negcurves::search::{default_h_max, default_k_max, enumerate_dagger_raw};
use negcurves::verify::{
    check_census, check_dual_method, check_epsilon, check_lattice_counts, check_mds,
    check_newton_polygons, check_pell_chains, check_properties, check_self_intersections,
    VerifyConfig,
};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Bounding-box scan with a sign test on each edge.
fn brute_count(t: &Triangle) -> u64 {
    let v: Vec<(BigRational, BigRational)> = t
        .vertices()
        .iter()
        .map(|p| (p.x.clone(), p.y.clone()))
        .collect();
    let lo = |f: fn(&(BigRational, BigRational)) -> &BigRational| {
        v.iter().map(f).min().unwrap().floor().to_integer()
    };
    let hi = |f: fn(&(BigRational, BigRational)) -> &BigRational| {
        v.iter().map(f).max().unwrap().ceil().to_integer()
    };
    let cross =
        |a: &(BigRational, BigRational),
         b: &(BigRational, BigRational),
         x: &BigRational,
         y: &BigRational| { (&b.0 - &a.0) * (y - &a.1) - (&b.1 - &a.1) * (x - &a.0) };
    let orient = cross(&v[0], &v[1], &v[2].0, &v[2].1);
    let (x0, x1) = (lo(|p| &p.0), hi(|p| &p.0));
    let (y0, y1) = (lo(|p| &p.1), hi(|p| &p.1));
    let mut count = 0;
    let mut x = x0;
    while x <= x1 {
        let mut y = y0.clone();
        while y <= y1 {
            let (px, py) = (
                BigRational::from_integer(x.clone()),
                BigRational::from_integer(y.clone()),
            );
            let inside = (0..3).all(|i| {
                let c = cross(&v[i], &v[(i + 1) % 3], &px, &py);
                c.is_zero() || c.is_positive() == orient.is_positive()
            });
            count += inside as u64;
            y += 1;
        }
        x += 1;
    }
    count
}

fn oracle_counts() -> Result<String, String> {
    let mut n = 0;
    for k in 3..=9 {
        for s in enumerate_chain(k, 6).unwrap() {
            for kind in [Family::Integral, Family::Rational] {
                let Ok(t) = FamilyTriangle::new(kind, s.clone(), q(0), q(0)) else {
                    continue;
                };
                let m = t.m();
                if m > BigInt::from(40) {
                    continue;
                }
                let m: u64 = m.try_into().unwrap();
                let got = brute_count(t.triangle());
                if got != m * (m + 1) / 2 + 1 {
                    return Err(format!("{}: brute force finds {got}", t.label()));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} triangles by bounding-box scan"))
}

/// Chain by direct iteration of `(M,N) -> ((K-2)M - N, M)` from `(1,0)`.
fn oracle_chain() -> Result<String, String> {
    for k in 3..=20i64 {
        let (mut m, mut n) = (BigInt::from(1), BigInt::from(0));
        for i in 0..7 {
            let s = chain_solution(k, i).map_err(|e| e.to_string())?;
            if (s.m(), s.n()) != (&m, &n) {
                return Err(format!("K={k} index {i}: {s}"));
            }
            if (&m + &n).pow(2) != BigInt::from(k) * &m * &n + 1 {
                return Err(format!("K={k}: ({m},{n}) off the curve"));
            }
            let next = BigInt::from(k - 2) * &m - &n;
            n = m;
            m = next;
            if k == 3 && i >= 1 {
                break;
            }
        }
    }
    Ok("K=3..=20 by direct iteration".into())
}

/// Exhaustive `(h, K)` scan with its own area and count tests.
fn oracle_search() -> Result<String, String> {
    let mut total = 0;
    for m in 1..=4i64 {
        let (h_max, k_max) = (default_h_max(m), default_k_max(m));
        let lib: BTreeSet<(i64, i64)> = enumerate_dagger_raw(m, h_max, k_max)
            .iter()
            .map(|d| (d.h, d.k))
            .collect();
        let mut naive = BTreeSet::new();
        for h in 1..=h_max {
            if h.gcd(&m) != 1 {
                continue;
            }
            for k in 1..=k_max {
                let b = q(m) - BigRational::new(h.into(), k.into());
                if !b.is_positive() || &b * q(h) > q(m * m) {
                    continue;
                }
                let t = DaggerForm::new(m, h, k).unwrap().triangle();
                if brute_count(&t) as i64 > m * (m + 1) / 2 {
                    naive.insert((h, k));
                }
            }
        }
        if lib != naive {
            let diff: Vec<_> = lib.symmetric_difference(&naive).collect();
            return Err(format!("m={m}: enumerations differ at {diff:?}"));
        }
        total += naive.len();
    }
    Ok(format!("{total} triangles match a naive scan for m=1..=4"))
}

fn report(r: CheckResult) {
    let tag = if r.passed { "PASS" } else { "FAIL" };
    println!(
        "[{tag}] {}. {}: {} ({} ms)",
        r.id, r.name, r.detail, r.millis
    );
    assert!(r.passed, "criterion {} failed: {}", r.id, r.detail);
}

fn oracle(name: &str, run: fn() -> Result<String, String>) {
    match run() {
        Ok(d) => println!("[PASS] oracle: {name}: {d}"),
        Err(e) => {
            println!("[FAIL] oracle: {name}: {e}");
            panic!("oracle {name} failed: {e}");
        }
    }
}

#[test]
fn criterion_1_pell_chains() {
    report(check_pell_chains(&VerifyConfig::default()));
}

#[test]
fn criterion_2_lattice_counts() {
    report(check_lattice_counts(&VerifyConfig::default()));
}

#[test]
fn criterion_3_dual_method() {
    report(check_dual_method(&VerifyConfig::default()));
}

#[test]
fn criterion_4_self_intersections() {
    report(check_self_intersections(&VerifyConfig::default()));
}

#[test]
fn criterion_5_newton_polygons() {
    report(check_newton_polygons(&VerifyConfig::default()));
}

#[test]
fn criterion_6_sign_tables() {
    report(check_epsilon(&VerifyConfig::default()));
}

#[test]
fn criterion_7_mds_truth_table() {
    report(check_mds(&VerifyConfig::default()));
}

#[test]
fn criterion_8_census() {
    report(check_census(&VerifyConfig::default()));
}

#[test]
fn criterion_9_property_suites() {
    report(check_properties(&VerifyConfig::default()));
}

#[test]
fn oracle_chain_iteration() {
    oracle("chain iteration", oracle_chain);
}

#[test]
fn oracle_lattice_counts() {
    oracle("lattice counts", oracle_counts);
}

#[test]
fn oracle_search_exhaustive() {
    oracle("search exhaustiveness", oracle_search);
}
