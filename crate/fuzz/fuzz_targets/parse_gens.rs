#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if s.len() <= 200 {
            let _ = rbshuffle_cli::config::parse_gens(s);
        }
    }
});
