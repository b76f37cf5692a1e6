#![no_main]

use charvar::knots::Catalog;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = Catalog::parse(s) {
        assert_eq!(Catalog::parse(&c.to_json()).unwrap(), c);
    }
});
