#![no_main]

use charvar::knots::{schubert_signs, TwoBridgeFraction};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(f) = TwoBridgeFraction::parse(s) else { return };
    assert_eq!(TwoBridgeFraction::parse(&f.to_string()).unwrap(), f);
    assert!(f.alpha() % 2 == 1 && f.beta() < f.alpha());
    if f.alpha() < 10_000 {
        assert_eq!(schubert_signs(&f).len() as u64, f.alpha() - 1);
    }
});
