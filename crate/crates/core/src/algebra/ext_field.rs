use num_bigint::{BigInt, BigUint};
use rand::RngCore;

use super::poly::{PolyRing, UniPoly};
use super::prime_field::PrimeField;
use super::primes::primes_up_to;
use super::ring::{Field, FiniteField, Ring};
use crate::error::{Error, Result};

/// `F_p[y]/(g)` for a monic irreducible `g` of degree `k`; elements are coordinate vectors of length `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    fp: PrimeField,
    modulus: UniPoly<u64>,
    k: usize,
}

/// Rabin's test over a prime field.
pub fn is_irreducible_fp(fp: PrimeField, f: &UniPoly<u64>) -> bool {
    let r = PolyRing::new(fp);
    let k = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(k) => k,
    };
    let f = r.monic(f);
    let p = BigUint::from(fp.p());
    let x = r.x();
    let frob_pow = |times: usize| {
        let mut h = x.clone();
        for _ in 0..times {
            h = r.pow_mod_big(&h, &p, &f);
        }
        h
    };
    if !r.rem(&r.sub(&frob_pow(k), &x), &f).is_zero() {
        return false;
    }
    for q in primes_up_to(k as u64) {
        if k % q as usize == 0 {
            let h = r.sub(&frob_pow(k / q as usize), &x);
            if r.gcd(&h, &f).deg() != 0 {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `k` over F_p,
/// comparing coefficients from `y^(k-1)` down to the constant term.
pub fn smallest_irreducible(fp: PrimeField, k: usize) -> UniPoly<u64> {
    let r = PolyRing::new(fp);
    let p = fp.p() as u128;
    let mut n: u128 = 0;
    loop {
        let mut c = Vec::with_capacity(k + 1);
        let mut m = n;
        for _ in 0..k {
            c.push((m % p) as u64);
            m /= p;
        }
        c.push(1);
        let f = r.from_coeffs(c);
        if is_irreducible_fp(fp, &f) {
            return f;
        }
        n += 1;
    }
}

impl ExtField {
    /// The canonical field with `p^k` elements.
    pub fn canonical(fp: PrimeField, k: usize) -> Self {
        assert!(k >= 1);
        let modulus = smallest_irreducible(fp, k);
        ExtField { fp, modulus, k }
    }

    pub fn with_modulus(fp: PrimeField, modulus: UniPoly<u64>) -> Result<Self> {
        let r = PolyRing::new(fp);
        let modulus = r.monic(&modulus);
        if !is_irreducible_fp(fp, &modulus) {
            return Err(Error::Invalid("extension modulus is not irreducible".into()));
        }
        let k = modulus.degree().unwrap();
        Ok(ExtField { fp, modulus, k })
    }

    pub fn prime_field(&self) -> PrimeField {
        self.fp
    }

    pub fn modulus(&self) -> &UniPoly<u64> {
        &self.modulus
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn embed(&self, a: u64) -> Vec<u64> {
        let mut v = vec![0; self.k];
        v[0] = a % self.fp.p();
        v
    }

    /// The class of `y`.
    pub fn generator(&self) -> Vec<u64> {
        if self.k == 1 {
            return vec![self.fp.neg(&self.modulus.coeffs()[0])];
        }
        let mut v = vec![0; self.k];
        v[1] = 1;
        v
    }

    pub fn from_poly(&self, f: &UniPoly<u64>) -> Vec<u64> {
        let r = PolyRing::new(self.fp);
        let red = r.rem(f, &self.modulus);
        let mut v = red.into_coeffs();
        v.resize(self.k, 0);
        v
    }

    pub fn to_poly(&self, a: &[u64]) -> UniPoly<u64> {
        PolyRing::new(self.fp).from_coeffs(a.to_vec())
    }

    /// `Some(c)` when `a` lies in the prime field.
    pub fn as_prime(&self, a: &[u64]) -> Option<u64> {
        a[1..].iter().all(|&c| c == 0).then_some(a[0])
    }

    pub fn frobenius(&self, a: &Vec<u64>) -> Vec<u64> {
        self.pow(a, self.fp.p())
    }

    /// Degree over F_p of the smallest subfield containing `a`.
    pub fn element_degree(&self, a: &Vec<u64>) -> usize {
        let mut b = self.frobenius(a);
        let mut d = 1;
        while b != *a {
            b = self.frobenius(&b);
            d += 1;
        }
        d
    }
}

impl Ring for ExtField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.k]
    }
    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }
    fn from_int(&self, n: i64) -> Vec<u64> {
        self.embed(self.fp.reduce_i64(n))
    }
    fn from_bigint(&self, n: &BigInt) -> Vec<u64> {
        self.embed(self.fp.from_bigint(n))
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.fp.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.fp.sub(x, y)).collect()
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.fp.neg(x)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let f = &self.fp;
        let k = self.k;
        if k == 1 {
            return vec![f.mul(&a[0], &b[0])];
        }
        let p = f.p() as u128;
        let mut prod = vec![0u128; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + (*x as u128) * (*y as u128)) % p;
            }
        }
        let m = self.modulus.coeffs();
        for d in (k..2 * k - 1).rev() {
            let top = prod[d];
            if top == 0 {
                continue;
            }
            for (i, mc) in m.iter().enumerate().take(k) {
                let idx = d - k + i;
                prod[idx] = (prod[idx] + (p - top) * (*mc as u128)) % p;
            }
            prod[d] = 0;
        }
        prod.truncate(k);
        prod.into_iter().map(|v| v as u64).collect()
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn exact_div(&self, a: &Vec<u64>, b: &Vec<u64>) -> Option<Vec<u64>> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

impl Field for ExtField {
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        let r = PolyRing::new(self.fp);
        let s = r.inv_mod(&self.to_poly(a), &self.modulus)?;
        Some(self.from_poly(&s))
    }
    fn characteristic(&self) -> u64 {
        self.fp.p()
    }
}

impl FiniteField for ExtField {
    fn prime(&self) -> u64 {
        self.fp.p()
    }
    fn degree(&self) -> usize {
        self.k
    }
    fn frobenius_inverse(&self, a: &Vec<u64>) -> Vec<u64> {
        let mut b = a.clone();
        for _ in 1..self.k {
            b = self.frobenius(&b);
        }
        b
    }
    fn random(&self, rng: &mut dyn RngCore) -> Vec<u64> {
        (0..self.k).map(|_| rng.next_u64() % self.fp.p()).collect()
    }
    fn element(&self, i: u128) -> Vec<u64> {
        let p = self.fp.p() as u128;
        let mut m = i;
        (0..self.k)
            .map(|_| {
                let d = (m % p) as u64;
                m /= p;
                d
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(smallest_irreducible(f3, 2).coeffs(), &[1, 0, 1]);
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(smallest_irreducible(f5, 2).coeffs(), &[2, 0, 1]);
        assert_eq!(smallest_irreducible(f3, 3).coeffs(), &[1, 2, 0, 1]);
    }

    #[test]
    fn field_axioms_in_f_3_4() {
        let f = ExtField::canonical(PrimeField::new(3).unwrap(), 4);
        let elems: Vec<_> = (0..81).map(|i| f.element(i)).collect();
        for a in &elems {
            if !f.is_zero(a) {
                assert!(f.is_one(&f.mul(a, &f.inv(a).unwrap())));
            }
            assert_eq!(f.pow(a, 81), *a);
            assert_eq!(f.frobenius(&f.frobenius_inverse(a)), *a);
        }
        let (a, b, c) = (&elems[17], &elems[40], &elems[77]);
        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
        assert_eq!(f.frobenius(&f.mul(a, b)), f.mul(&f.frobenius(a), &f.frobenius(b)));
    }

    #[test]
    fn rejects_reducible_modulus() {
        let f3 = PrimeField::new(3).unwrap();
        let r = PolyRing::new(f3);
        assert!(ExtField::with_modulus(f3, r.from_ints(&[2, 0, 1])).is_err());
    }
}
