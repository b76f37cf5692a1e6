use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::integers::QQ;
use super::poly::{PolyRing, UniPoly};
use super::ring::{Field, Ring};
use super::zpoly::ZPoly;

/// `ℚ[y]/(h)` for an irreducible integer polynomial `h`; elements are coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    modulus: UniPoly<BigRational>,
    n: usize,
}

impl NumberField {
    /// The caller guarantees irreducibility over ℚ (e.g. a factor returned by `zpoly::factor`).
    pub fn new(h: &ZPoly) -> Self {
        let qr = PolyRing::new(QQ);
        let modulus = qr.monic(&qr.from_coeffs(h.coeffs().iter().map(|c| BigRational::from(c.clone())).collect()));
        let n = modulus.degree().expect("nonconstant modulus");
        NumberField { modulus, n }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generator(&self) -> Vec<BigRational> {
        self.from_poly(&PolyRing::new(QQ).x())
    }

    pub fn from_poly(&self, f: &UniPoly<BigRational>) -> Vec<BigRational> {
        let mut v = PolyRing::new(QQ).rem(f, &self.modulus).into_coeffs();
        v.resize(self.n, BigRational::zero());
        v
    }

    pub fn to_poly(&self, a: &[BigRational]) -> UniPoly<BigRational> {
        PolyRing::new(QQ).from_coeffs(a.to_vec())
    }

    pub fn from_integer(&self, a: &BigInt) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.n];
        v[0] = BigRational::from(a.clone());
        v
    }
}

impl Ring for NumberField {
    type Elem = Vec<BigRational>;

    fn zero(&self) -> Self::Elem {
        vec![BigRational::zero(); self.n]
    }
    fn one(&self) -> Self::Elem {
        self.from_integer(&BigInt::from(1))
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_integer(&BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.from_integer(n)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| -x).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let qr = PolyRing::new(QQ);
        self.from_poly(&qr.mul(&self.to_poly(a), &self.to_poly(b)))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|x| x.is_zero())
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

impl Field for NumberField {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        let qr = PolyRing::new(QQ);
        qr.inv_mod(&self.to_poly(a), &self.modulus).map(|s| self.from_poly(&s))
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integers::ZZ;

    #[test]
    fn sqrt_five_arithmetic() {
        let k = NumberField::new(&PolyRing::new(ZZ).from_ints(&[-5, 0, 1]));
        let s = k.generator();
        assert_eq!(k.mul(&s, &s), k.from_int(5));
        let a = k.add(&s, &k.one());
        let ai = k.inv(&a).unwrap();
        assert!(k.is_one(&k.mul(&a, &ai)));
    }
}
