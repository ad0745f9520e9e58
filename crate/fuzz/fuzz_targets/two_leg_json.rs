#![no_main]
use libfuzzer_sys::fuzz_target;

use rbshuffle::{Context, LegPolicy, TwoLegElement};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 600 {
        return;
    }
    let ctx = Context::commutative(&["a", "b"]);
    for policy in [LegPolicy::Square, LegPolicy::Comodule] {
        if let Ok(t) = TwoLegElement::from_json(&ctx, policy, s) {
            let payload = t.to_json(&ctx).to_string();
            let again =
                TwoLegElement::from_json(&ctx, policy, &payload).expect("own json reparses");
            assert_eq!(t, again, "json payload round-trips");
        }
    }
});
