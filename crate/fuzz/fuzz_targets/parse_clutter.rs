#![no_main]
use libfuzzer_sys::fuzz_target;
use monores::io::{clutter_to_json, parse_clutter};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(clutter) = parse_clutter(text) {
        for e in clutter.edges() {
            assert!(!e.is_empty());
            assert!(e.iter().all(|&v| v < clutter.vertex_count()));
        }
        let again = parse_clutter(&clutter_to_json(&clutter)).expect("rendered documents parse");
        assert_eq!(again, clutter);
    }
});
