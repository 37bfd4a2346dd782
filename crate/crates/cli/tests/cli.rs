use std::process::{Command, Output};

use negcurves::report::Document;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negcurves"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Parses the JSON document and checks that re-serializing gives the same text.
fn document(args: &[&str]) -> Document {
    let o = run(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = stdout(&o);
    let doc = Document::from_json(&text).unwrap();
    assert_eq!(doc.to_json(), text.trim_end());
    doc
}

#[test]
fn curve_example() {
    let o = run(&[
        "curve", "--family", "rt", "--k", "4", "--n", "1", "--method", "both",
    ]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("1 + x - 3*x*y + x^2*y^3"), "{s}");
    assert!(s.contains("vanishing order:    2"));
    assert!(s.contains("self-intersection:  -1/4"));
    assert!(s.contains("methods agree:      yes"));
}

#[test]
fn pell_chain() {
    let s = stdout(&run(&["pell", "--k", "5", "--count", "6"]));
    let pairs: Vec<&str> = s.lines().skip(1).collect();
    assert_eq!(pairs.len(), 6);
    assert!(pairs[5].contains("M = 8  N = 3"));
    let Document::Pell(p) = document(&["pell", "--k", "10/2", "--count", "6", "--json"]) else {
        panic!("wrong kind")
    };
    assert_eq!(p.solutions[2].to_string(), "(1, 3)");
}

#[test]
fn mds_examples() {
    let s = stdout(&run(&[
        "mds", "--family", "it", "--k", "4", "--n", "1", "--alpha", "0", "--beta", "1/4",
    ]));
    assert!(s.contains("status:   MDS"));
    let Document::Mds(r) = document(&[
        "mds", "--family", "rt", "--k", "4", "--mn", "4,3", "--alpha", "1/100", "--beta", "1/90",
        "--json",
    ]) else {
        panic!("wrong kind")
    };
    assert_eq!(r.status.to_string(), "NonMDS");
    assert_eq!(r.d0_intersection, Default::default());
}

#[test]
fn json_documents_round_trip() {
    for args in [
        &[
            "triangle", "--family", "it", "--k", "5", "--n", "2", "--json",
        ][..],
        &[
            "curve", "--family", "it", "--k", "5", "--mn", "1,3", "--method", "solver", "--json",
        ],
        &[
            "curve",
            "--family",
            "rt",
            "--k",
            "6",
            "--n",
            "2",
            "--method",
            "recurrence",
            "--json",
        ],
        &[
            "mds", "--family", "rt", "--k", "4", "--n", "1", "--beta", "1/12", "--json",
        ],
        &["search", "--m", "3", "--json"],
        &["verify", "--max-m", "3", "--max-k", "4", "--json"],
    ] {
        document(args);
    }
}

#[test]
fn svg_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2)
        .map(|i| dir.path().join(format!("t{i}.svg")))
        .collect();
    for p in &paths {
        let o = run(&[
            "triangle",
            "--family",
            "rt",
            "--k",
            "4",
            "--mn",
            "4,3",
            "--newton",
            "--svg",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("<?xml"));
    assert!(text.contains("width=\"200\" height=\"320\""));
    assert_eq!(text.matches("<circle").count(), 11);
    assert!(text.contains("stroke-dasharray"));

    let tikz = dir.path().join("t.tex");
    let o = run(&[
        "curve",
        "--family",
        "it",
        "--k",
        "4",
        "--n",
        "1",
        "--tikz",
        tikz.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(tikz)
        .unwrap()
        .contains("\\begin{tikzpicture}"));
}

#[test]
fn exit_codes() {
    // usage errors
    for args in [
        &["curve", "--family", "it", "--k", "4", "--mn", "4,2"][..],
        &[
            "mds", "--family", "it", "--k", "4", "--n", "1", "--alpha", "1/4", "--beta", "1/4",
        ],
        &["pell", "--k", "1/2"],
        &["pell", "--k", "2"],
        &["triangle", "--family", "xt", "--k", "4", "--n", "1"],
        &["triangle", "--family", "it", "--k", "4"],
        &[
            "triangle", "--family", "it", "--k", "4", "--n", "1", "--mn", "2,1",
        ],
        &[
            "mds", "--family", "it", "--k", "4", "--n", "1", "--alpha", "-1/8",
        ],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(
        run(&["verify", "--max-m", "2", "--max-k", "4"])
            .status
            .code(),
        Some(0)
    );
}
