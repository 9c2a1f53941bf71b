#![no_main]

use coherent_motion::drg::parse_array;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(a) = parse_array(text) {
        assert_eq!(parse_array(&a.to_string()).as_ref(), Ok(&a));
        // feasibility checks must not panic on arbitrary parameters
        let _ = a.validate();
        let _ = a.n();
    }
});
