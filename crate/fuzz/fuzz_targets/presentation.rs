#![no_main]

use charvar::knots::Presentation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(p) = Presentation::parse(s) else { return };
    assert_eq!(Presentation::parse(&p.to_string()).unwrap(), p);
    let _ = p.check_knot_group();
});
