//! Fricke trace calculus for two-generator subgroups of SL₂.

pub mod engine;
pub mod triple;
pub mod word;

pub use engine::{eval_word_numeric, TraceEngine};
pub use triple::{to_knot_coords, TriplePoly, TripleRing};
pub use word::{Letter, Word};

/// Trace polynomial of a word with a fresh engine.
pub fn trace_of_word(w: &Word) -> TriplePoly {
    TraceEngine::new().trace(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mat2::{self, random_sl2};
    use crate::algebra::ring::Ring;
    use crate::algebra::text::format_bipoly;
    use crate::algebra::PrimeField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tr(s: &str) -> String {
        trace_of_word(&Word::parse(s).unwrap()).to_text()
    }

    #[test]
    fn small_words() {
        assert_eq!(tr(""), "2");
        assert_eq!(tr("a"), "s");
        assert_eq!(tr("aB"), "s*u + (-1)*v");
        assert_eq!(tr("abAB"), "(-1)*s*u*v + s^2 + u^2 + v^2 + (-2)");
    }

    #[test]
    fn commutator_in_knot_coordinates() {
        let q = trace_of_word(&Word::parse("abAB").unwrap());
        let p = to_knot_coords(&TripleRing.sub(&q, &TripleRing.from_int(2)));
        assert_eq!(format_bipoly(&p, ["t", "x"]), "x^2 + (-1)*t^2*x + 2*t^2 + (-4)");
        assert_eq!(format_bipoly(&to_knot_coords(&TripleRing.v()), ["t", "x"]), "(-1)*x + t^2");
    }

    #[test]
    fn agrees_with_matrices() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut engine = TraceEngine::new();
        for _ in 0..40 {
            let len = rng.gen_range(0..=12);
            let w = Word::new((0..len).map(|_| [Letter::A, Letter::AInv, Letter::B, Letter::BInv][rng.gen_range(0..4)]));
            let q = engine.trace(&w);
            assert!(q.total_degree() as usize <= w.len().max(1));
            for _ in 0..5 {
                let a = random_sl2(&f, &mut rng);
                let b = random_sl2(&f, &mut rng);
                let ab = mat2::mul(&f, &a, &b);
                let sym = q.eval(&f, &mat2::trace(&f, &a), &mat2::trace(&f, &b), &mat2::trace(&f, &ab));
                assert_eq!(sym, eval_word_numeric(&f, &w, &a, &b).unwrap(), "{w}");
            }
        }
    }

    #[test]
    fn numeric_rejects_non_unimodular() {
        let f = PrimeField::new(7).unwrap();
        let a = mat2::Mat2::new(2, 0, 0, 2);
        assert!(eval_word_numeric(&f, &Word::parse("a").unwrap(), &a, &a).is_err());
    }

    #[test]
    fn memo_persists_through_cache_dir() {
        let dir = std::env::temp_dir().join(format!("charvar-trace-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let mut e = TraceEngine::with_cache_dir(&dir).unwrap();
        let w = Word::parse("abbAbaB").unwrap();
        let q = e.trace(&w);
        e.save().unwrap();
        let e2 = TraceEngine::with_cache_dir(&dir).unwrap();
        assert_eq!(e2.memo_len(), e.memo_len());
        let mut e2 = e2;
        assert_eq!(e2.trace(&w), q);
        let _ = std::fs::remove_dir_all(&dir);
    }
}
