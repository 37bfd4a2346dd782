#![no_main]

use libfuzzer_sys::fuzz_target;
use negcurves::report::Document;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = Document::from_json(s) {
        let again = Document::from_json(&doc.to_json()).expect("emitted JSON parses");
        assert_eq!(again, doc);
    }
});
