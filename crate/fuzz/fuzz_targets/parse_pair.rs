#![no_main]

use libfuzzer_sys::fuzz_target;
use negcurves::arith::parse_pair;
use negcurves::pell::PellSolution;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((m, n)) = parse_pair(s) {
        assert_eq!(
            parse_pair(&format!("{m},{n}")).expect("canonical form parses"),
            (m.clone(), n.clone())
        );
        // validation must reject rather than panic
        for k in 3..8 {
            let _ = PellSolution::new(k, m.clone(), n.clone());
        }
    }
});
