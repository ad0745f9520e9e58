#![no_main]
use libfuzzer_sys::fuzz_target;

// The expression parser must reject garbage with a diagnostic, never panic.
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = rbshuffle_cli::dsl::parse_expr(s);
    }
});
