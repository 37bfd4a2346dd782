#![no_main]

use libfuzzer_sys::fuzz_target;
use negcurves::arith::{format_rational, parse_integer, parse_rational};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = parse_rational(s) {
        assert_eq!(
            parse_rational(&format_rational(&v)).expect("canonical form parses"),
            v
        );
        assert_eq!(parse_integer(s).is_ok(), v.is_integer());
    }
});
