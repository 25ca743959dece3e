#![no_main]
use libfuzzer_sys::fuzz_target;
use monores::field::is_prime;
use monores::FieldSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(field) = text.parse::<FieldSpec>() {
        if let FieldSpec::Prime(p) = field {
            assert!(is_prime(p));
        }
        assert_eq!(field.to_string().parse::<FieldSpec>().unwrap(), field);
    }
});
