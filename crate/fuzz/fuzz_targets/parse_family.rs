#![no_main]

use coherent_motion::catalog::parse_family;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_family(text) {
        let _ = f.order();
        let _ = f.canonical();
    }
});
