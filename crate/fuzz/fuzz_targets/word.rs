#![no_main]

use charvar::algebra::mat2::{self, Mat2};
use charvar::algebra::PrimeField;
use charvar::trace::{eval_word_numeric, trace_of_word, Word};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(w) = Word::parse(s) else { return };
    assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    assert_eq!(w.trace_class().trace_class(), w.trace_class());
    if w.len() > 14 {
        return;
    }
    // the symbolic trace must agree with matrices
    let f = PrimeField::new(10007).unwrap();
    let a = Mat2::new(3, 5, 7, 12);
    let b = Mat2::new(2, 9, 1, 5);
    let q = trace_of_word(&w);
    let ab = mat2::mul(&f, &a, &b);
    let sym = q.eval(&f, &mat2::trace(&f, &a), &mat2::trace(&f, &b), &mat2::trace(&f, &ab));
    assert_eq!(sym, eval_word_numeric(&f, &w, &a, &b).unwrap(), "{w}");
});
