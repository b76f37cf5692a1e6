use super::ring::Ring;

/// A 2×2 matrix `[[a, b], [c, d]]` over a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

impl<E: Clone> Mat2<E> {
    pub fn new(a: E, b: E, c: E, d: E) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn entries(&self) -> [&E; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

pub fn identity<R: Ring>(r: &R) -> Mat2<R::Elem> {
    Mat2::new(r.one(), r.zero(), r.zero(), r.one())
}

pub fn mul<R: Ring>(r: &R, x: &Mat2<R::Elem>, y: &Mat2<R::Elem>) -> Mat2<R::Elem> {
    Mat2::new(
        r.add(&r.mul(&x.a, &y.a), &r.mul(&x.b, &y.c)),
        r.add(&r.mul(&x.a, &y.b), &r.mul(&x.b, &y.d)),
        r.add(&r.mul(&x.c, &y.a), &r.mul(&x.d, &y.c)),
        r.add(&r.mul(&x.c, &y.b), &r.mul(&x.d, &y.d)),
    )
}

pub fn sub<R: Ring>(r: &R, x: &Mat2<R::Elem>, y: &Mat2<R::Elem>) -> Mat2<R::Elem> {
    Mat2::new(r.sub(&x.a, &y.a), r.sub(&x.b, &y.b), r.sub(&x.c, &y.c), r.sub(&x.d, &y.d))
}

pub fn scale<R: Ring>(r: &R, x: &Mat2<R::Elem>, s: &R::Elem) -> Mat2<R::Elem> {
    Mat2::new(r.mul(&x.a, s), r.mul(&x.b, s), r.mul(&x.c, s), r.mul(&x.d, s))
}

pub fn det<R: Ring>(r: &R, x: &Mat2<R::Elem>) -> R::Elem {
    r.sub(&r.mul(&x.a, &x.d), &r.mul(&x.b, &x.c))
}

pub fn trace<R: Ring>(r: &R, x: &Mat2<R::Elem>) -> R::Elem {
    r.add(&x.a, &x.d)
}

/// The adjugate, which is the inverse for determinant one.
pub fn adjugate<R: Ring>(r: &R, x: &Mat2<R::Elem>) -> Mat2<R::Elem> {
    Mat2::new(x.d.clone(), r.neg(&x.b), r.neg(&x.c), x.a.clone())
}

pub fn pow<R: Ring>(r: &R, x: &Mat2<R::Elem>, mut e: u64) -> Mat2<R::Elem> {
    let mut acc = identity(r);
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(r, &acc, &base);
        }
        base = mul(r, &base, &base);
        e >>= 1;
    }
    acc
}

/// A random element of SL₂ over a finite field with nonzero upper-left entry.
pub fn random_sl2<F: super::ring::FiniteField>(f: &F, rng: &mut dyn rand::RngCore) -> Mat2<F::Elem> {
    loop {
        let (a, b, c) = (f.random(rng), f.random(rng), f.random(rng));
        if let Some(ai) = f.inv(&a) {
            let d = f.mul(&f.add(&f.one(), &f.mul(&b, &c)), &ai);
            return Mat2::new(a, b, c, d);
        }
    }
}
