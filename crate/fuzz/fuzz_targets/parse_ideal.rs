#![no_main]
use libfuzzer_sys::fuzz_target;
use monores::io::{ideal_to_json, parse_ideal};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(parsed) = parse_ideal(text) {
        let ideal = parsed.value;
        // Generators are an antichain under divisibility.
        for (a, g) in ideal.gens().iter().enumerate() {
            for (b, h) in ideal.gens().iter().enumerate() {
                assert!(a == b || !g.divides(h), "{g} divides {h}");
            }
        }
        // Rendering and re-parsing is lossless and warning-free.
        let again = parse_ideal(&ideal_to_json(&ideal)).expect("rendered documents parse");
        assert_eq!(again.value, ideal);
        assert!(again.warnings.is_empty());
    }
});
