use std::collections::BTreeMap;

use super::poly::{PolyRing, UniPoly};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Laurent polynomial in `m` with coefficients in a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSym<E> {
    terms: BTreeMap<i64, E>,
}

impl<E: Clone> LaurentSym<E> {
    pub fn terms(&self) -> impl Iterator<Item = (i64, &E)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }
}

/// Arithmetic on Laurent polynomials over a coefficient ring.
#[derive(Clone, Debug)]
pub struct LaurentRing<R> {
    base: R,
}

impl<R: Ring> LaurentRing<R> {
    pub fn new(base: R) -> Self {
        LaurentRing { base }
    }

    pub fn from_terms(&self, it: impl IntoIterator<Item = (i64, R::Elem)>) -> LaurentSym<R::Elem> {
        let mut terms: BTreeMap<i64, R::Elem> = BTreeMap::new();
        for (k, v) in it {
            let e = terms.entry(k).or_insert_with(|| self.base.zero());
            *e = self.base.add(e, &v);
        }
        terms.retain(|_, v| !self.base.is_zero(v));
        LaurentSym { terms }
    }

    /// `m^shift * f(m)` for a polynomial `f` in `m`.
    pub fn from_poly(&self, f: &UniPoly<R::Elem>, shift: i64) -> LaurentSym<R::Elem> {
        self.from_terms(f.coeffs().iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())))
    }

    pub fn add(&self, a: &LaurentSym<R::Elem>, b: &LaurentSym<R::Elem>) -> LaurentSym<R::Elem> {
        self.from_terms(a.terms.iter().chain(&b.terms).map(|(k, v)| (*k, v.clone())))
    }

    pub fn sub(&self, a: &LaurentSym<R::Elem>, b: &LaurentSym<R::Elem>) -> LaurentSym<R::Elem> {
        self.from_terms(a.terms.iter().map(|(k, v)| (*k, v.clone())).chain(b.terms.iter().map(|(k, v)| (*k, self.base.neg(v)))))
    }

    pub fn mul(&self, a: &LaurentSym<R::Elem>, b: &LaurentSym<R::Elem>) -> LaurentSym<R::Elem> {
        self.from_terms(
            a.terms
                .iter()
                .flat_map(|(i, x)| b.terms.iter().map(move |(j, y)| (i + j, (x, y))))
                .map(|(k, (x, y))| (k, self.base.mul(x, y))),
        )
    }

    /// `L(1/m)`
    pub fn invert(&self, a: &LaurentSym<R::Elem>) -> LaurentSym<R::Elem> {
        LaurentSym { terms: a.terms.iter().map(|(k, v)| (-k, v.clone())).collect() }
    }

    pub fn is_symmetric(&self, a: &LaurentSym<R::Elem>) -> bool {
        *a == self.invert(a)
    }

    /// The unique `Q` with `Q(m + 1/m) = L(m)`.
    pub fn symmetrize(&self, a: &LaurentSym<R::Elem>) -> Result<UniPoly<R::Elem>> {
        let b = &self.base;
        let residue = self.sub(a, &self.invert(a));
        if !residue.terms.is_empty() {
            let shown: Vec<String> = residue.terms.iter().filter(|(k, _)| **k > 0).map(|(k, v)| format!("m^{k}: {v:?}")).collect();
            return Err(Error::Symmetry { residue: shown.join(", ") });
        }
        let top = a.terms.keys().next_back().copied().unwrap_or(0).max(0) as usize;
        // (m + 1/m)^d expanded by binomial coefficients
        let mut out = vec![b.zero(); top + 1];
        let mut rest = a.clone();
        while let Some((&d, c)) = rest.terms.iter().next_back() {
            let c = c.clone();
            if d == 0 {
                out[0] = b.add(&out[0], &c);
                break;
            }
            out[d as usize] = b.add(&out[d as usize], &c);
            let mut binom = num_bigint::BigInt::from(1);
            let mut expansion = Vec::with_capacity(d as usize + 1);
            for i in 0..=d {
                expansion.push((d - 2 * i, b.mul(&c, &b.from_bigint(&binom))));
                binom = binom * (d - i) / (i + 1);
            }
            rest = self.sub(&rest, &self.from_terms(expansion));
        }
        Ok(PolyRing::new(b.clone()).from_coeffs(out))
    }

    /// Substitute `t = m + 1/m`.
    pub fn substitute(&self, q: &UniPoly<R::Elem>) -> LaurentSym<R::Elem> {
        let t = self.from_terms([(1, self.base.one()), (-1, self.base.one())]);
        let mut acc = self.from_terms([]);
        for c in q.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, &t), &self.from_terms([(0, c.clone())]));
        }
        acc
    }
}
