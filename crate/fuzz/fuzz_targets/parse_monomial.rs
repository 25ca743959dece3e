#![no_main]
use libfuzzer_sys::fuzz_target;
use monores::Monomial;

fuzz_target!(|data: &[u8]| {
    // First byte picks the number of variables, the rest is the text.
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n = usize::from(n);
    if let Ok(m) = Monomial::parse(text, n) {
        assert_eq!(m.nvars(), n);
        let again = Monomial::parse(&m.to_string(), n).expect("rendered monomials parse");
        assert_eq!(again, m);
    }
});
