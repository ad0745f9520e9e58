#![no_main]
use libfuzzer_sys::fuzz_target;

use rbshuffle::scalar::{format_rational, parse_rational};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 200 {
        return;
    }
    if let Ok(r) = parse_rational(s) {
        let text = format_rational(&r);
        let again = parse_rational(&text).expect("own text reparses");
        assert_eq!(r, again, "rational text is canonical");
    }
});
