#![no_main]

use charvar::ramification::Config;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = Config::from_json(s) {
        assert!(c.k_max >= 1 && c.k_max <= 64);
        assert_eq!(Config::from_json(&serde_json::to_string(&c).unwrap()).unwrap(), c);
    }
});
