#![no_main]

use charvar::algebra::text::{format_bipoly, format_unipoly, parse_bipoly, parse_unipoly};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    // printing is canonical, so a second parse must give the same polynomial
    if let Ok(f) = parse_bipoly(s, ["t", "x"]) {
        let text = format_bipoly(&f, ["t", "x"]);
        assert_eq!(parse_bipoly(&text, ["t", "x"]).unwrap(), f, "{text}");
    }
    if let Ok(f) = parse_unipoly(s, "x") {
        let text = format_unipoly(&f, "x");
        assert_eq!(parse_unipoly(&text, "x").unwrap(), f, "{text}");
    }
});
