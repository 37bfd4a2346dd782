use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use negcurves::arith::{format_rational, parse_integer, parse_pair, parse_rational};
use negcurves::families::{Family, FamilyTriangle};
use negcurves::laurent::{newton_polygon, LaurentPoly};
use negcurves::mds::classify;
use negcurves::pell::{chain_solution, enumerate_chain, PellSolution};
use negcurves::recurrence::xi;
use negcurves::render;
use negcurves::report::{CurveReport, Document, MdsReport, Method, PellReport, TriangleReport};
use negcurves::search::{default_h_max, default_k_max, verify_classification};
use negcurves::solver::solve_family;
use negcurves::verify::verify_report;
use negcurves::{Error, Rational};

/// Witnesses longer than this are summarized in text output.
const MAX_PRINTED_TERMS: usize = 24;

#[derive(Parser)]
#[command(
    name = "negcurves",
    version,
    about = "Negative curves on blowups of weighted projective planes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the solution chain of (M+N)^2 = K M N + 1 starting at (0,1).
    Pell {
        /// K, at least 3.
        #[arg(long, value_parser = integer)]
        k: BigInt,
        #[arg(long, default_value = "8", value_parser = index)]
        count: usize,
        #[arg(long)]
        json: bool,
    },
    /// Describe a family triangle.
    Triangle {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        extension: ExtensionArgs,
        /// Overlay the Newton polygon of the curve polynomial in drawings.
        #[arg(long)]
        newton: bool,
        #[command(flatten)]
        output: DrawArgs,
    },
    /// Compute the curve polynomial of a family member.
    Curve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[command(flatten)]
        output: DrawArgs,
    },
    /// Decide whether the blowup of an enlarged triangle is a Mori Dream Space.
    Mds {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        extension: ExtensionArgs,
        #[arg(long)]
        json: bool,
    },
    /// Classify all triangles of order m in the sheared form.
    Search {
        #[arg(long, value_parser = integer_i64)]
        m: i64,
        #[arg(long, value_parser = integer_i64)]
        hmax: Option<i64>,
        #[arg(long, value_parser = integer_i64)]
        kmax: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Run the invariant suite and print a pass/fail table.
    Verify {
        #[arg(long, value_parser = index)]
        max_m: Option<usize>,
        #[arg(long, value_parser = integer_i64)]
        max_k: Option<i64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// `it` (integral) or `rt` (rational).
    #[arg(long, value_parser = family)]
    family: Family,
    /// K, at least 3.
    #[arg(long, value_parser = integer)]
    k: BigInt,
    /// Chain position: (M_n, N_n) with (M_0, N_0) = (1, 0).
    #[arg(long, value_parser = index, required_unless_present = "mn", conflicts_with = "mn")]
    n: Option<usize>,
    /// An explicit solution, checked against the equation.
    #[arg(long, value_parser = pair)]
    mn: Option<(BigInt, BigInt)>,
}

#[derive(Args)]
struct ExtensionArgs {
    /// Extension on the left, as P/Q.
    #[arg(long, value_parser = rational, default_value = "0")]
    alpha: Rational,
    /// Extension on the right, as P/Q.
    #[arg(long, value_parser = rational, default_value = "0")]
    beta: Rational,
}

#[derive(Args)]
struct DrawArgs {
    #[arg(long)]
    json: bool,
    /// Write an SVG drawing.
    #[arg(long, value_name = "FILE")]
    svg: Option<PathBuf>,
    /// Write a TikZ picture.
    #[arg(long, value_name = "FILE")]
    tikz: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Recurrence,
    Solver,
    Both,
}

fn integer(s: &str) -> Result<BigInt, String> {
    parse_integer(s).map_err(|e| e.to_string())
}

fn integer_i64(s: &str) -> Result<i64, String> {
    i64::try_from(integer(s)?).map_err(|_| format!("{s} is out of range"))
}

fn index(s: &str) -> Result<usize, String> {
    usize::try_from(integer(s)?).map_err(|_| format!("{s} is not a valid index"))
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn pair(s: &str) -> Result<(BigInt, BigInt), String> {
    parse_pair(s).map_err(|e| e.to_string())
}

fn family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Why a command did not finish with status 0.
enum Failure {
    /// A check ran and did not pass.
    Verification(String),
    /// The input does not describe a valid instance.
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotASolution { .. }
            | Error::KOutOfRange { .. }
            | Error::BudgetExceeded { .. }
            | Error::ChainTooDeep { .. }
            | Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Compute(other),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

impl InstanceArgs {
    fn solution(&self) -> Result<PellSolution, Failure> {
        match (&self.n, &self.mn) {
            (Some(n), _) => {
                let k = i64::try_from(&self.k)
                    .map_err(|_| Failure::Usage("K is out of range".into()))?;
                Ok(chain_solution(k, *n)?)
            }
            (None, Some((m, n))) => Ok(PellSolution::new(self.k.clone(), m.clone(), n.clone())?),
            (None, None) => Err(Failure::Usage("one of --n or --mn is required".into())),
        }
    }

    fn triangle(&self, ext: Option<&ExtensionArgs>) -> Result<FamilyTriangle, Failure> {
        let (a, b) = match ext {
            Some(e) => (e.alpha.clone(), e.beta.clone()),
            None => (Rational::default(), Rational::default()),
        };
        if a < Rational::default() || b < Rational::default() {
            return Err(Failure::Usage("alpha and beta must be non-negative".into()));
        }
        Ok(FamilyTriangle::new(self.family, self.solution()?, a, b)?)
    }
}

fn curve_poly(t: &FamilyTriangle) -> Result<LaurentPoly, Failure> {
    let pair = xi(t.solution())?;
    Ok(match t.kind() {
        Family::Integral => pair.xi_int,
        Family::Rational => pair.xi_rat,
    })
}

fn draw(t: &FamilyTriangle, poly: Option<&LaurentPoly>, out: &DrawArgs) -> CmdResult {
    let hull = match poly {
        Some(p) => Some(newton_polygon(p)?.vertices().to_vec()),
        None => None,
    };
    if let Some(path) = &out.svg {
        fs::write(path, render::svg(t.triangle(), hull.as_deref()))?;
    }
    if let Some(path) = &out.tikz {
        fs::write(path, render::tikz(t.triangle(), hull.as_deref()))?;
    }
    Ok(())
}

fn summarize(p: &LaurentPoly) -> String {
    if p.len() <= MAX_PRINTED_TERMS {
        p.to_string()
    } else {
        format!("{} terms (use --json for the full polynomial)", p.len())
    }
}

fn run_pell(k: &BigInt, count: usize, json: bool) -> CmdResult {
    let k64 = i64::try_from(k).map_err(|_| Failure::Usage("K is out of range".into()))?;
    let solutions = enumerate_chain(k64, count)?;
    if json {
        let doc = Document::Pell(PellReport {
            k: k.clone(),
            solutions,
        });
        println!("{}", doc.to_json());
        return Ok(());
    }
    println!("K = {k}");
    for (i, s) in solutions.iter().enumerate() {
        println!("{i:>3}  M = {}  N = {}", s.m(), s.n());
    }
    Ok(())
}

fn run_triangle(
    inst: &InstanceArgs,
    ext: &ExtensionArgs,
    newton: bool,
    out: &DrawArgs,
) -> CmdResult {
    let t = inst.triangle(Some(ext))?;
    let poly = if newton { Some(curve_poly(&t)?) } else { None };
    draw(&t, poly.as_ref(), out)?;
    let r = TriangleReport::new(&t);
    if out.json {
        println!("{}", Document::Triangle(r).to_json());
        return Ok(());
    }
    println!("{}", t.label());
    println!("vertices:        {}", r.vertices);
    println!(
        "alpha, beta:     {}, {}",
        format_rational(t.alpha()),
        format_rational(t.beta())
    );
    println!(
        "m, h, b:         {}, {}, {}",
        r.m,
        r.h,
        format_rational(&r.b)
    );
    println!("lattice points:  {}", r.lattice_count);
    println!("column profile:  {:?}", r.column_profile);
    println!("multiplicities:  ({})", r.multiplicities.join(", "));
    println!("budget:          {}", format_rational(&r.budget));
    Ok(())
}

fn run_curve(inst: &InstanceArgs, method: MethodArg, out: &DrawArgs) -> CmdResult {
    let t = inst.triangle(None)?;
    let (poly, irreducibility, agree, method) = match method {
        MethodArg::Recurrence => (curve_poly(&t)?, None, None, Method::Recurrence),
        MethodArg::Solver => {
            let nc = solve_family(&t)?;
            (nc.poly, Some(nc.irreducibility), None, Method::Solver)
        }
        MethodArg::Both => {
            let rec = curve_poly(&t)?;
            let nc = solve_family(&t)?;
            let agree = rec == nc.poly;
            (rec, Some(nc.irreducibility), Some(agree), Method::Both)
        }
    };
    draw(&t, Some(&poly), out)?;
    let r = CurveReport::new(&t, method, poly, irreducibility, agree)?;
    if out.json {
        println!("{}", Document::Curve(r.clone()).to_json());
    } else {
        println!("{}", t.label());
        println!("curve:              {}", r.polynomial);
        println!("vanishing order:    {}", r.vanishing_order);
        println!(
            "self-intersection:  {}",
            format_rational(&r.self_intersection)
        );
        if let Some(i) = r.irreducibility {
            let tag = serde_json::to_value(i).expect("enum serializes");
            println!("irreducibility:     {}", tag.as_str().unwrap_or_default());
        }
        if let Some(a) = agree {
            println!("methods agree:      {}", if a { "yes" } else { "NO" });
        }
    }
    match agree {
        Some(false) => Err(Failure::Verification(
            "recurrence and solver disagree".into(),
        )),
        _ => Ok(()),
    }
}

fn run_mds(inst: &InstanceArgs, ext: &ExtensionArgs, json: bool) -> CmdResult {
    let t = inst.triangle(Some(ext))?;
    if json {
        println!("{}", Document::Mds(MdsReport::new(&t)?).to_json());
        return Ok(());
    }
    let v = classify(&t)?;
    println!(
        "{} alpha={} beta={}",
        t.label(),
        format_rational(t.alpha()),
        format_rational(t.beta())
    );
    println!("status:   {}", v.status);
    println!("reason:   {}", v.reason);
    if let Some(w) = &v.witness {
        println!("witness:  {}", summarize(w));
    }
    Ok(())
}

fn run_search(m: i64, hmax: Option<i64>, kmax: Option<i64>, json: bool) -> CmdResult {
    if m < 1 {
        return Err(Failure::Usage("m must be positive".into()));
    }
    let r = verify_classification(
        m,
        hmax.unwrap_or(default_h_max(m)),
        kmax.unwrap_or(default_k_max(m)),
    );
    let clean = r.clean();
    if json {
        println!("{}", Document::Search(r).to_json());
    } else {
        println!("m = {}  (h <= {}, K <= {})", r.m, r.h_max, r.k_max);
        println!("{}", r.scope);
        println!(
            "{} triangles, {} triangle classes, {} curve classes",
            r.triangles.len(),
            r.triangle_classes,
            r.curve_class_count()
        );
        for (i, c) in r.curve_classes.iter().enumerate() {
            let rep = &r.triangles[c.representative];
            let matches: Vec<String> = c
                .matches
                .iter()
                .map(|f| format!("{}({},{}) K={}", f.family, f.big_m, f.big_n, f.k))
                .collect();
            let matched = if c.flagged {
                "UNMATCHED".to_string()
            } else {
                matches.join(", ")
            };
            println!(
                "  class {i}: h={} K={} b={}  {}",
                rep.h,
                rep.k,
                format_rational(&rep.b),
                matched
            );
            println!("    curve: {}", summarize(&c.polynomial));
        }
        for e in r.triangles.iter().filter(|e| e.solver_error.is_some()) {
            println!(
                "  solver failed at h={} K={}: {}",
                e.h,
                e.k,
                e.solver_error.as_deref().unwrap_or("")
            );
        }
    }
    if clean {
        Ok(())
    } else {
        Err(Failure::Verification(
            "unmatched curve classes or solver failures".into(),
        ))
    }
}

fn run_verify(max_m: Option<usize>, max_k: Option<i64>, json: bool) -> CmdResult {
    let max_m = max_m.map(|m| u32::try_from(m).unwrap_or(u32::MAX));
    let r = verify_report(max_m, max_k);
    let passed = r.passed();
    if json {
        println!("{}", Document::Verify(r).to_json());
    } else {
        for c in &r.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            println!(
                "{tag}  {}. {:<40} {:>8} ms  {}",
                c.id, c.name, c.millis, c.detail
            );
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification("some checks failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Pell { k, count, json } => run_pell(k, *count, *json),
        Command::Triangle {
            instance,
            extension,
            newton,
            output,
        } => run_triangle(instance, extension, *newton, output),
        Command::Curve {
            instance,
            method,
            output,
        } => run_curve(instance, *method, output),
        Command::Mds {
            instance,
            extension,
            json,
        } => run_mds(instance, extension, *json),
        Command::Search {
            m,
            hmax,
            kmax,
            json,
        } => run_search(*m, *hmax, *kmax, *json),
        Command::Verify { max_m, max_k, json } => run_verify(*max_m, *max_k, *json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
