use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

use crate::algebra::mat2::{self, Mat2};
use crate::algebra::ring::Ring;
use crate::error::{Error, Result};

use super::triple::{TriplePoly, TripleRing};
use super::word::{Letter, Word};

/// Environment variable naming a directory where the trace memo is persisted.
pub const CACHE_DIR_ENV: &str = "CHARVAR_CACHE_DIR";
const CACHE_FILE: &str = "trace-memo.json";

/// Memoized rewriting of traces of words into Fricke coordinates.
///
/// Rules, applied to the cyclic word: an inverse letter is traded via
/// `tr(X⁻¹V) = tr(X) tr(V) − tr(XV)`; a positive word with a repeated letter
/// uses `tr(XXV) = tr(X) tr(XV) − tr(V)`; powers of `a`, `b` and `ab` are
/// Chebyshev polynomials in `s`, `u`, `v`. Each rule lowers (length, number of
/// inverse letters) lexicographically.
#[derive(Debug, Default)]
pub struct TraceEngine {
    memo: HashMap<Word, TriplePoly>,
    cache_dir: Option<PathBuf>,
}

fn chebyshev(n: usize, y: &TriplePoly) -> TriplePoly {
    let r = TripleRing;
    let (mut prev, mut cur) = (r.from_int(2), y.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = r.sub(&r.mul(y, &cur), &prev);
        prev = cur;
        cur = next;
    }
    cur
}

impl TraceEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// An engine whose memo is loaded from and saved to `dir`.
    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        let mut engine = TraceEngine { memo: HashMap::new(), cache_dir: Some(dir.clone()) };
        let path = dir.join(CACHE_FILE);
        if path.exists() {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(e.to_string()))?;
            let map: BTreeMap<String, String> = serde_json::from_str(&text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            for (w, p) in map {
                engine.memo.insert(Word::parse(&w)?.trace_class(), TriplePoly::parse(&p)?);
            }
        }
        Ok(engine)
    }

    /// Honors [`CACHE_DIR_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(d) if !d.is_empty() => Self::with_cache_dir(PathBuf::from(d)),
            _ => Ok(Self::new()),
        }
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Write the memo to the cache directory, if one is configured.
    pub fn save(&self) -> Result<()> {
        let Some(dir) = &self.cache_dir else {
            return Ok(());
        };
        std::fs::create_dir_all(dir).map_err(|e| Error::Io(e.to_string()))?;
        let map: BTreeMap<String, String> = self.memo.iter().map(|(w, p)| (w.to_string(), p.to_text())).collect();
        let text = serde_json::to_string(&map).map_err(|e| Error::Io(e.to_string()))?;
        crate::io::write_atomic(&dir.join(CACHE_FILE), text.as_bytes())
    }

    pub fn trace(&mut self, w: &Word) -> TriplePoly {
        let key = w.trace_class();
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let p = self.compute(&key);
        self.memo.insert(key, p.clone());
        p
    }

    fn letter_trace(l: Letter) -> TriplePoly {
        match l.generator() {
            Letter::A => TripleRing.s(),
            _ => TripleRing.u(),
        }
    }

    fn compute(&mut self, w: &Word) -> TriplePoly {
        let r = TripleRing;
        let l = w.letters();
        let n = l.len();
        if n == 0 {
            return r.from_int(2);
        }
        if let Some(i) = l.iter().position(|x| x.is_inverse()) {
            let rot: Vec<Letter> = l[i..].iter().chain(&l[..i]).copied().collect();
            let x = rot[0].inverse();
            let v = Word::new(rot[1..].iter().copied());
            let xv = Word::new(std::iter::once(x).chain(rot[1..].iter().copied()));
            let tv = self.trace(&v);
            let txv = self.trace(&xv);
            return r.sub(&r.mul(&Self::letter_trace(x), &tv), &txv);
        }
        if l.iter().all(|&x| x == l[0]) {
            return chebyshev(n, &Self::letter_trace(l[0]));
        }
        if let Some(i) = (0..n).find(|&i| l[i] == l[(i + 1) % n]) {
            let rot: Vec<Letter> = l[i..].iter().chain(&l[..i]).copied().collect();
            let x = rot[0];
            let xv = Word::new(rot[1..].iter().copied());
            let v = Word::new(rot[2..].iter().copied());
            let txv = self.trace(&xv);
            let tv = self.trace(&v);
            return r.sub(&r.mul(&Self::letter_trace(x), &txv), &tv);
        }
        chebyshev(n / 2, &r.v())
    }
}

/// Trace of the literal matrix product `w(A, B)`.
pub fn eval_word_numeric<R: Ring>(r: &R, w: &Word, a: &Mat2<R::Elem>, b: &Mat2<R::Elem>) -> Result<R::Elem> {
    for m in [a, b] {
        if !r.is_one(&mat2::det(r, m)) {
            return Err(Error::Determinant);
        }
    }
    let (ai, bi) = (mat2::adjugate(r, a), mat2::adjugate(r, b));
    let mut acc = mat2::identity(r);
    for l in w.letters() {
        let m = match l {
            Letter::A => a,
            Letter::AInv => &ai,
            Letter::B => b,
            Letter::BInv => &bi,
        };
        acc = mat2::mul(r, &acc, m);
    }
    Ok(mat2::trace(r, &acc))
}
