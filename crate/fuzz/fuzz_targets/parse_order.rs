#![no_main]
use libfuzzer_sys::fuzz_target;
use monores::orders::{orders_for, OrderSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = text.parse::<OrderSpec>() {
        assert_eq!(spec.to_string().parse::<OrderSpec>().unwrap(), spec);
        // Expansion either succeeds or reports an error; it never panics.
        let _ = orders_for(&spec, 3, 8);
    }
});
