#![no_main]
use libfuzzer_sys::fuzz_target;

use rbshuffle::{Context, TensorElement};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 600 {
        return;
    }
    for ctx in [Context::commutative(&["a", "b"]), Context::noncommutative(&["a", "b"])] {
        if let Ok(t) = TensorElement::from_json(&ctx, s) {
            let payload = t.to_json(&ctx).to_string();
            let again = TensorElement::from_json(&ctx, &payload).expect("own json reparses");
            assert_eq!(t, again, "json payload round-trips");
        }
    }
});
