//! Replays the checked-in fuzz seeds through the same round-trip assertions
//! the fuzz targets make, so the corpus stays meaningful without nightly.

use std::fs;
use std::path::PathBuf;

use negcurves::arith::{format_rational, parse_pair, parse_rational};
use negcurves::laurent::LaurentPoly;
use negcurves::report::Document;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn laurent_seeds() {
    let mut parsed = 0;
    for s in seeds("parse_laurent") {
        if let Ok(p) = s.parse::<LaurentPoly>() {
            assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
            parsed += 1;
        }
    }
    assert!(parsed >= 4);
}

#[test]
fn rational_seeds() {
    for s in seeds("parse_rational") {
        if let Ok(v) = parse_rational(&s) {
            assert_eq!(parse_rational(&format_rational(&v)).unwrap(), v);
        }
    }
}

#[test]
fn pair_seeds() {
    let ok: Vec<_> = seeds("parse_pair")
        .iter()
        .filter_map(|s| parse_pair(s).ok())
        .collect();
    assert_eq!(ok.len(), 3);
}

#[test]
fn document_seeds() {
    for s in seeds("parse_document") {
        let doc = Document::from_json(&s).unwrap_or_else(|e| panic!("{e}: {s}"));
        assert_eq!(Document::from_json(&doc.to_json()).unwrap(), doc);
    }
}
