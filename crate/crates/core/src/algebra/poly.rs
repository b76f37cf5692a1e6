use num_bigint::BigInt;

use super::ring::{Field, Ring};

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct UniPoly<E> {
    c: Vec<E>,
}

impl<E> UniPoly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.c
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn lc(&self) -> Option<&E> {
        self.c.last()
    }
}

/// The polynomial ring `R[x]` over a base ring value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn from_coeffs(&self, mut c: Vec<R::Elem>) -> UniPoly<R::Elem> {
        while c.last().is_some_and(|x| self.base.is_zero(x)) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn from_ints(&self, c: &[i64]) -> UniPoly<R::Elem> {
        self.from_coeffs(c.iter().map(|&v| self.base.from_int(v)).collect())
    }

    pub fn constant(&self, a: R::Elem) -> UniPoly<R::Elem> {
        self.from_coeffs(vec![a])
    }

    pub fn monomial(&self, a: R::Elem, d: usize) -> UniPoly<R::Elem> {
        let mut c = vec![self.base.zero(); d];
        c.push(a);
        self.from_coeffs(c)
    }

    pub fn x(&self) -> UniPoly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    /// `x - a`
    pub fn linear(&self, a: &R::Elem) -> UniPoly<R::Elem> {
        self.from_coeffs(vec![self.base.neg(a), self.base.one()])
    }

    pub fn coeff(&self, f: &UniPoly<R::Elem>, i: usize) -> R::Elem {
        f.c.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn lc(&self, f: &UniPoly<R::Elem>) -> R::Elem {
        f.c.last().cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn eval(&self, f: &UniPoly<R::Elem>, a: &R::Elem) -> R::Elem {
        let b = &self.base;
        f.c.iter().rev().fold(b.zero(), |acc, c| b.add(&b.mul(&acc, a), c))
    }

    /// Evaluate after mapping coefficients into another ring.
    pub fn eval_in<S: Ring>(
        &self,
        f: &UniPoly<R::Elem>,
        s: &S,
        map: impl Fn(&R::Elem) -> S::Elem,
        a: &S::Elem,
    ) -> S::Elem {
        f.c.iter().rev().fold(s.zero(), |acc, c| s.add(&s.mul(&acc, a), &map(c)))
    }

    pub fn map<S: Ring>(&self, f: &UniPoly<R::Elem>, target: &PolyRing<S>, map: impl Fn(&R::Elem) -> S::Elem) -> UniPoly<S::Elem> {
        target.from_coeffs(f.c.iter().map(map).collect())
    }

    pub fn derivative(&self, f: &UniPoly<R::Elem>) -> UniPoly<R::Elem> {
        let b = &self.base;
        self.from_coeffs(
            f.c.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| b.mul(&b.from_int(i as i64), c))
                .collect(),
        )
    }

    pub fn scale(&self, f: &UniPoly<R::Elem>, a: &R::Elem) -> UniPoly<R::Elem> {
        self.from_coeffs(f.c.iter().map(|c| self.base.mul(c, a)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, f: &UniPoly<R::Elem>, k: usize) -> UniPoly<R::Elem> {
        if f.is_zero() {
            return f.clone();
        }
        let mut c = vec![self.base.zero(); k];
        c.extend(f.c.iter().cloned());
        UniPoly { c }
    }

    /// `f(g(x))`
    pub fn compose(&self, f: &UniPoly<R::Elem>, g: &UniPoly<R::Elem>) -> UniPoly<R::Elem> {
        f.c.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, g), &self.constant(c.clone())))
    }

    /// `f(-x)`
    pub fn reflect(&self, f: &UniPoly<R::Elem>) -> UniPoly<R::Elem> {
        let b = &self.base;
        self.from_coeffs(f.c.iter().enumerate().map(|(i, c)| if i % 2 == 1 { b.neg(c) } else { c.clone() }).collect())
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) f mod g`.
    pub fn pseudo_rem(&self, f: &UniPoly<R::Elem>, g: &UniPoly<R::Elem>) -> UniPoly<R::Elem> {
        let b = &self.base;
        let dg = g.degree().expect("pseudo-division by zero");
        let lg = self.lc(g);
        let mut r = f.c.clone();
        if r.len() <= dg {
            return f.clone();
        }
        let steps = r.len() - dg;
        for k in (0..steps).rev() {
            let top = r[k + dg].clone();
            for c in r.iter_mut() {
                *c = b.mul(c, &lg);
            }
            for (i, gc) in g.c.iter().enumerate() {
                r[k + i] = b.sub(&r[k + i], &b.mul(&top, gc));
            }
            r.pop();
        }
        self.from_coeffs(r)
    }

    /// Division by a polynomial whose leading coefficient divides exactly at every step.
    pub fn div_rem_exact_lc(&self, f: &UniPoly<R::Elem>, g: &UniPoly<R::Elem>) -> Option<(UniPoly<R::Elem>, UniPoly<R::Elem>)> {
        let b = &self.base;
        let dg = g.degree()?;
        let lg = self.lc(g);
        let mut r = f.c.clone();
        if r.len() <= dg {
            return Some((self.zero(), f.clone()));
        }
        let mut q = vec![b.zero(); r.len() - dg];
        for k in (0..r.len() - dg).rev() {
            let top = r[k + dg].clone();
            if b.is_zero(&top) {
                continue;
            }
            let t = b.exact_div(&top, &lg)?;
            for (i, gc) in g.c.iter().enumerate() {
                r[k + i] = b.sub(&r[k + i], &b.mul(&t, gc));
            }
            q[k] = t;
        }
        Some((self.from_coeffs(q), self.from_coeffs(r)))
    }

    /// Subresultant resultant over an integral domain with exact division.
    pub fn resultant(&self, f: &UniPoly<R::Elem>, g: &UniPoly<R::Elem>) -> R::Elem {
        let b = &self.base;
        if f.is_zero() || g.is_zero() {
            return b.zero();
        }
        let (mut a, mut bb) = (f.clone(), g.clone());
        let mut s_neg = false;
        if a.deg() < bb.deg() {
            std::mem::swap(&mut a, &mut bb);
            if a.deg() % 2 == 1 && bb.deg() % 2 == 1 {
                s_neg = true;
            }
        }
        if bb.deg() == 0 {
            let r = b.pow(&self.lc(&bb), a.deg() as u64);
            return if s_neg { b.neg(&r) } else { r };
        }
        let mut gg = b.one();
        let mut h = b.one();
        loop {
            let da = a.deg();
            let db = bb.deg();
            let delta = (da - db) as u64;
            if da % 2 == 1 && db % 2 == 1 {
                s_neg = !s_neg;
            }
            let r = self.pseudo_rem(&a, &bb);
            a = bb;
            if r.is_zero() {
                return b.zero();
            }
            let denom = b.mul(&gg, &b.pow(&h, delta));
            bb = self.from_coeffs(r.c.iter().map(|c| b.exact_div(c, &denom).expect("subresultant division")).collect());
            gg = self.lc(&a);
            h = if delta == 0 {
                h
            } else {
                b.exact_div(&b.pow(&gg, delta), &b.pow(&h, delta - 1)).expect("subresultant h")
            };
            if bb.deg() == 0 {
                let da = a.deg() as u64;
                let lb = self.lc(&bb);
                let res = if da == 0 {
                    b.one()
                } else {
                    b.exact_div(&b.pow(&lb, da), &b.pow(&h, da - 1)).expect("subresultant final")
                };
                return if s_neg { b.neg(&res) } else { res };
            }
        }
    }

    /// `(-1)^(d(d-1)/2) Res(f, f') / lc(f)`; `None` when `deg f < 1`.
    pub fn discriminant(&self, f: &UniPoly<R::Elem>) -> Option<R::Elem> {
        let b = &self.base;
        let d = f.degree()?;
        if d == 0 {
            return None;
        }
        let r = self.resultant(f, &self.derivative(f));
        let q = b.exact_div(&r, &self.lc(f)).expect("discriminant division");
        Some(if (d * (d - 1) / 2) % 2 == 1 { b.neg(&q) } else { q })
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = UniPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        UniPoly { c: Vec::new() }
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
        let n = a.c.len().max(b.c.len());
        let z = self.base.zero();
        self.from_coeffs(
            (0..n)
                .map(|i| self.base.add(a.c.get(i).unwrap_or(&z), b.c.get(i).unwrap_or(&z)))
                .collect(),
        )
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.c.len().max(b.c.len());
        let z = self.base.zero();
        self.from_coeffs(
            (0..n)
                .map(|i| self.base.sub(a.c.get(i).unwrap_or(&z), b.c.get(i).unwrap_or(&z)))
                .collect(),
        )
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        UniPoly { c: a.c.iter().map(|x| self.base.neg(x)).collect() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let bs = &self.base;
        let mut c = vec![bs.zero(); a.c.len() + b.c.len() - 1];
        for (i, x) in a.c.iter().enumerate() {
            if bs.is_zero(x) {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                c[i + j] = bs.add(&c[i + j], &bs.mul(x, y));
            }
        }
        self.from_coeffs(c)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.c.is_empty()
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let (q, r) = self.div_rem_exact_lc(a, b)?;
        r.is_zero().then_some(q)
    }
}

impl<F: Field> PolyRing<F> {
    pub fn monic(&self, f: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        match f.lc() {
            None => f.clone(),
            Some(l) => {
                let li = self.base.inv(l).expect("nonzero");
                self.scale(f, &li)
            }
        }
    }

    pub fn div_rem(&self, f: &UniPoly<F::Elem>, g: &UniPoly<F::Elem>) -> (UniPoly<F::Elem>, UniPoly<F::Elem>) {
        let b = &self.base;
        let dg = g.degree().expect("division by zero polynomial");
        let li = b.inv(g.lc().unwrap()).unwrap();
        let mut r = f.c.clone();
        if r.len() <= dg {
            return (self.zero(), f.clone());
        }
        let mut q = vec![b.zero(); r.len() - dg];
        for k in (0..r.len() - dg).rev() {
            let top = r[k + dg].clone();
            if b.is_zero(&top) {
                continue;
            }
            let t = b.mul(&top, &li);
            for (i, gc) in g.c.iter().enumerate() {
                r[k + i] = b.sub(&r[k + i], &b.mul(&t, gc));
            }
            q[k] = t;
        }
        r.truncate(dg);
        (self.from_coeffs(q), self.from_coeffs(r))
    }

    pub fn rem(&self, f: &UniPoly<F::Elem>, g: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        self.div_rem(f, g).1
    }

    /// Monic gcd (zero when both are zero).
    pub fn gcd(&self, f: &UniPoly<F::Elem>, g: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s f + t g' = g = gcd(f, g')` monic.
    pub fn ext_gcd(
        &self,
        f: &UniPoly<F::Elem>,
        g: &UniPoly<F::Elem>,
    ) -> (UniPoly<F::Elem>, UniPoly<F::Elem>, UniPoly<F::Elem>) {
        let (mut r0, mut r1) = (f.clone(), g.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = self.base.inv(l).unwrap();
                (self.scale(&r0, &li), self.scale(&s0, &li), self.scale(&t0, &li))
            }
        }
    }

    /// Inverse of `a` modulo `m`, if it exists.
    pub fn inv_mod(&self, a: &UniPoly<F::Elem>, m: &UniPoly<F::Elem>) -> Option<UniPoly<F::Elem>> {
        let (g, s, _) = self.ext_gcd(&self.rem(a, m), m);
        (g.deg() == 0).then(|| self.rem(&s, m))
    }

    pub fn mul_mod(&self, a: &UniPoly<F::Elem>, b: &UniPoly<F::Elem>, m: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod_big(&self, a: &UniPoly<F::Elem>, e: &num_bigint::BigUint, m: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        let mut acc = self.rem(&self.one(), m);
        let a = self.rem(a, m);
        for i in (0..e.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mul_mod(&acc, &a, m);
            }
        }
        acc
    }

    /// Resultant by the Euclidean algorithm.
    pub fn resultant_field(&self, f: &UniPoly<F::Elem>, g: &UniPoly<F::Elem>) -> F::Elem {
        let b = &self.base;
        if f.is_zero() || g.is_zero() {
            return b.zero();
        }
        let (mut a, mut c) = (f.clone(), g.clone());
        let mut acc = b.one();
        loop {
            let da = a.deg();
            let dc = c.deg();
            if dc == 0 {
                return b.mul(&acc, &b.pow(&self.lc(&c), da as u64));
            }
            let r = self.rem(&a, &c);
            if r.is_zero() {
                return b.zero();
            }
            let dr = r.deg();
            if da % 2 == 1 && dc % 2 == 1 {
                acc = b.neg(&acc);
            }
            acc = b.mul(&acc, &b.pow(&self.lc(&c), (da - dr) as u64));
            a = c;
            c = r;
        }
    }

    pub fn is_squarefree(&self, f: &UniPoly<F::Elem>) -> bool {
        if f.deg() <= 0 {
            return !f.is_zero();
        }
        let d = self.derivative(f);
        if d.is_zero() {
            return false;
        }
        self.gcd(f, &d).deg() == 0
    }
}
