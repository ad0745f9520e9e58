#![no_main]
use libfuzzer_sys::fuzz_target;

use rbshuffle::{BaseMonomial, Context};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 120 {
        return;
    }
    for ctx in [Context::commutative(&["a", "b"]), Context::noncommutative(&["a", "b"])] {
        if let Ok(m) = BaseMonomial::parse(&ctx, s) {
            let text = m.text(&ctx);
            let again = BaseMonomial::parse(&ctx, &text).expect("own text reparses");
            assert_eq!(m, again, "monomial text is canonical");
        }
    }
});
