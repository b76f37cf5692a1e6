use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::poly::{PolyRing, UniPoly};
use super::ring::Ring;

/// Exponents of `t^et * x^ex`; the derived order compares the `x` exponent first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub ex: u32,
    pub et: u32,
}

impl Mono {
    pub fn new(et: u32, ex: u32) -> Self {
        Mono { ex, et }
    }

    pub fn total(&self) -> u32 {
        self.ex + self.et
    }
}

/// Sparse polynomial in `t` and `x`; never stores zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly<E> {
    terms: BTreeMap<Mono, E>,
}

impl<E> BiPoly<E> {
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &E)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, et: u32, ex: u32) -> Option<&E> {
        self.terms.get(&Mono::new(et, ex))
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.ex).max()
    }

    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.et).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total()).max()
    }

    /// Leading term for the `x`-major lexicographic order.
    pub fn leading(&self) -> Option<(&Mono, &E)> {
        self.terms.iter().next_back()
    }

    /// True when every exponent of `t` is even.
    pub fn is_even_in_t(&self) -> bool {
        self.terms.keys().all(|m| m.et % 2 == 0)
    }
}

/// Arithmetic on [`BiPoly`] over a base ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiRing<R> {
    base: R,
}

impl<R: Ring> BiRing<R> {
    pub fn new(base: R) -> Self {
        BiRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn from_terms(&self, it: impl IntoIterator<Item = (Mono, R::Elem)>) -> BiPoly<R::Elem> {
        let mut terms: BTreeMap<Mono, R::Elem> = BTreeMap::new();
        for (m, c) in it {
            let e = terms.entry(m).or_insert_with(|| self.base.zero());
            *e = self.base.add(e, &c);
        }
        terms.retain(|_, c| !self.base.is_zero(c));
        BiPoly { terms }
    }

    pub fn term(&self, c: R::Elem, et: u32, ex: u32) -> BiPoly<R::Elem> {
        self.from_terms([(Mono::new(et, ex), c)])
    }

    pub fn from_int_terms(&self, it: &[(i64, u32, u32)]) -> BiPoly<R::Elem> {
        self.from_terms(it.iter().map(|&(c, et, ex)| (Mono::new(et, ex), self.base.from_int(c))))
    }

    pub fn t(&self) -> BiPoly<R::Elem> {
        self.term(self.base.one(), 1, 0)
    }

    pub fn x(&self) -> BiPoly<R::Elem> {
        self.term(self.base.one(), 0, 1)
    }

    pub fn constant(&self, c: R::Elem) -> BiPoly<R::Elem> {
        self.term(c, 0, 0)
    }

    pub fn map<S: Ring>(&self, f: &BiPoly<R::Elem>, target: &BiRing<S>, map: impl Fn(&R::Elem) -> S::Elem) -> BiPoly<S::Elem> {
        target.from_terms(f.terms.iter().map(|(m, c)| (*m, map(c))))
    }

    pub fn scale(&self, f: &BiPoly<R::Elem>, a: &R::Elem) -> BiPoly<R::Elem> {
        self.from_terms(f.terms.iter().map(|(m, c)| (*m, self.base.mul(c, a))))
    }

    pub fn partial_t(&self, f: &BiPoly<R::Elem>) -> BiPoly<R::Elem> {
        let b = &self.base;
        self.from_terms(
            f.terms
                .iter()
                .filter(|(m, _)| m.et > 0)
                .map(|(m, c)| (Mono::new(m.et - 1, m.ex), b.mul(&b.from_int(m.et as i64), c))),
        )
    }

    pub fn partial_x(&self, f: &BiPoly<R::Elem>) -> BiPoly<R::Elem> {
        let b = &self.base;
        self.from_terms(
            f.terms
                .iter()
                .filter(|(m, _)| m.ex > 0)
                .map(|(m, c)| (Mono::new(m.et, m.ex - 1), b.mul(&b.from_int(m.ex as i64), c))),
        )
    }

    pub fn swap_vars(&self, f: &BiPoly<R::Elem>) -> BiPoly<R::Elem> {
        self.from_terms(f.terms.iter().map(|(m, c)| (Mono::new(m.ex, m.et), c.clone())))
    }

    /// `f(-t, x)`
    pub fn reflect_t(&self, f: &BiPoly<R::Elem>) -> BiPoly<R::Elem> {
        self.from_terms(
            f.terms
                .iter()
                .map(|(m, c)| (*m, if m.et % 2 == 1 { self.base.neg(c) } else { c.clone() })),
        )
    }

    pub fn eval(&self, f: &BiPoly<R::Elem>, t0: &R::Elem, x0: &R::Elem) -> R::Elem {
        let b = &self.base;
        f.terms.iter().fold(b.zero(), |acc, (m, c)| {
            b.add(&acc, &b.mul(c, &b.mul(&b.pow(t0, m.et as u64), &b.pow(x0, m.ex as u64))))
        })
    }

    /// Evaluate at points of another ring through a coefficient map.
    pub fn eval_in<S: Ring>(&self, f: &BiPoly<R::Elem>, s: &S, map: impl Fn(&R::Elem) -> S::Elem, t0: &S::Elem, x0: &S::Elem) -> S::Elem {
        f.terms.iter().fold(s.zero(), |acc, (m, c)| {
            s.add(&acc, &s.mul(&map(c), &s.mul(&s.pow(t0, m.et as u64), &s.pow(x0, m.ex as u64))))
        })
    }

    /// Substitute `t = t0`, leaving a polynomial in `x`.
    pub fn eval_t(&self, f: &BiPoly<R::Elem>, t0: &R::Elem) -> UniPoly<R::Elem> {
        let b = &self.base;
        let n = f.deg_x().map_or(0, |d| d as usize + 1);
        let mut c = vec![b.zero(); n];
        for (m, v) in &f.terms {
            c[m.ex as usize] = b.add(&c[m.ex as usize], &b.mul(v, &b.pow(t0, m.et as u64)));
        }
        PolyRing::new(b.clone()).from_coeffs(c)
    }

    /// Substitute `x = x0`, leaving a polynomial in `t`.
    pub fn eval_x(&self, f: &BiPoly<R::Elem>, x0: &R::Elem) -> UniPoly<R::Elem> {
        self.eval_t(&self.swap_vars(f), x0)
    }

    /// View as a polynomial in `x` with coefficients in `R[t]`.
    pub fn to_x_major(&self, f: &BiPoly<R::Elem>) -> UniPoly<UniPoly<R::Elem>> {
        let inner = PolyRing::new(self.base.clone());
        let outer = PolyRing::new(inner.clone());
        let n = f.deg_x().map_or(0, |d| d as usize + 1);
        let mut rows: Vec<Vec<R::Elem>> = vec![Vec::new(); n];
        for (m, c) in &f.terms {
            let row = &mut rows[m.ex as usize];
            if row.len() <= m.et as usize {
                row.resize(m.et as usize + 1, self.base.zero());
            }
            row[m.et as usize] = c.clone();
        }
        outer.from_coeffs(rows.into_iter().map(|r| inner.from_coeffs(r)).collect())
    }

    pub fn from_x_major(&self, f: &UniPoly<UniPoly<R::Elem>>) -> BiPoly<R::Elem> {
        self.from_terms(f.coeffs().iter().enumerate().flat_map(|(ex, row)| {
            row.coeffs().iter().enumerate().map(move |(et, c)| (Mono::new(et as u32, ex as u32), c.clone()))
        }))
    }

    /// View as a polynomial in `t` with coefficients in `R[x]`.
    pub fn to_t_major(&self, f: &BiPoly<R::Elem>) -> UniPoly<UniPoly<R::Elem>> {
        self.to_x_major(&self.swap_vars(f))
    }

    pub fn from_t_major(&self, f: &UniPoly<UniPoly<R::Elem>>) -> BiPoly<R::Elem> {
        self.swap_vars(&self.from_x_major(f))
    }

    pub fn from_uni_x(&self, f: &UniPoly<R::Elem>) -> BiPoly<R::Elem> {
        self.from_terms(f.coeffs().iter().enumerate().map(|(i, c)| (Mono::new(0, i as u32), c.clone())))
    }

    pub fn from_uni_t(&self, f: &UniPoly<R::Elem>) -> BiPoly<R::Elem> {
        self.from_terms(f.coeffs().iter().enumerate().map(|(i, c)| (Mono::new(i as u32, 0), c.clone())))
    }

    /// Replace `t^2` by `T` in a polynomial even in `t`.
    pub fn halve_t(&self, f: &BiPoly<R::Elem>) -> Option<BiPoly<R::Elem>> {
        f.is_even_in_t()
            .then(|| self.from_terms(f.terms.iter().map(|(m, c)| (Mono::new(m.et / 2, m.ex), c.clone()))))
    }

    /// Replace `T` by `t^2`.
    pub fn double_t(&self, f: &BiPoly<R::Elem>) -> BiPoly<R::Elem> {
        self.from_terms(f.terms.iter().map(|(m, c)| (Mono::new(m.et * 2, m.ex), c.clone())))
    }
}

impl<R: Ring> Ring for BiRing<R> {
    type Elem = BiPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        BiPoly { terms: BTreeMap::new() }
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_int(n))
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_bigint(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut terms = a.terms.clone();
        for (m, c) in &b.terms {
            match terms.get_mut(m) {
                Some(e) => {
                    *e = self.base.add(e, c);
                    if self.base.is_zero(e) {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(*m, c.clone());
                }
            }
        }
        BiPoly { terms }
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        BiPoly { terms: a.terms.iter().map(|(m, c)| (*m, self.base.neg(c))).collect() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut terms: BTreeMap<Mono, R::Elem> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = Mono::new(ma.et + mb.et, ma.ex + mb.ex);
                let p = self.base.mul(ca, cb);
                match terms.get_mut(&m) {
                    Some(e) => *e = self.base.add(e, &p),
                    None => {
                        terms.insert(m, p);
                    }
                }
            }
        }
        terms.retain(|_, c| !self.base.is_zero(c));
        BiPoly { terms }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.terms.is_empty()
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let (lm, lc) = b.leading()?;
        let (lm, lc) = (*lm, lc.clone());
        let mut r = a.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = r.leading() {
            if m.ex < lm.ex || m.et < lm.et {
                return None;
            }
            let qc = self.base.exact_div(c, &lc)?;
            let qm = Mono::new(m.et - lm.et, m.ex - lm.ex);
            let t = self.term(qc.clone(), qm.et, qm.ex);
            r = self.sub(&r, &self.mul(&t, b));
            q.push((qm, qc));
        }
        Some(self.from_terms(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integers::ZZ;

    #[test]
    fn exact_division_recovers_factor() {
        let r = BiRing::new(ZZ);
        let f = r.from_int_terms(&[(1, 0, 2), (-1, 2, 1), (1, 0, 1), (1, 2, 0), (-1, 0, 0)]);
        let g = r.from_int_terms(&[(1, 0, 1), (-2, 0, 0)]);
        let h = r.mul(&f, &g);
        assert_eq!(r.exact_div(&h, &g), Some(f.clone()));
        assert_eq!(r.exact_div(&h, &f), Some(g));
        assert_eq!(r.exact_div(&f, &r.t()), None);
    }

    #[test]
    fn nested_views_round_trip() {
        let r = BiRing::new(ZZ);
        let f = r.from_int_terms(&[(3, 4, 1), (-2, 0, 3), (5, 2, 0), (1, 1, 1)]);
        assert_eq!(r.from_x_major(&r.to_x_major(&f)), f);
        assert_eq!(r.from_t_major(&r.to_t_major(&f)), f);
        let g = r.eval_t(&f, &BigInt::from(2));
        assert_eq!(g.coeffs(), &[BigInt::from(20), BigInt::from(50), BigInt::from(0), BigInt::from(-2)]);
    }
}
