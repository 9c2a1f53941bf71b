#![no_main]

use coherent_motion::parse_configuration_json;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cfg) = parse_configuration_json(text) {
        assert!(cfg.verify().is_empty());
        let back = parse_configuration_json(&cfg.to_json()).expect("printed configuration parses");
        assert_eq!(back, cfg);
    }
});
