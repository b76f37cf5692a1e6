use num_bigint::BigInt;
use rand::RngCore;

use super::integers::mod_u64;
use super::primes::{inv_mod_u64, is_prime_u64};
use super::ring::{Field, FiniteField, Ring};
use crate::error::{Error, Result};

/// The field F_p for an odd prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || p >= 1 << 63 || !is_prime_u64(p) {
            return Err(Error::Modulus(p.to_string()));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Canonical value of `a` reduced into the field.
    pub fn reduce_i64(&self, a: i64) -> u64 {
        (a as i128).rem_euclid(self.p as i128) as u64
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        mod_u64(n, self.p)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = *a as u128 + *b as u128;
        (s % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn exact_div(&self, a: &u64, b: &u64) -> Option<u64> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            inv_mod_u64(*a, self.p)
        }
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

impl FiniteField for PrimeField {
    fn prime(&self) -> u64 {
        self.p
    }
    fn degree(&self) -> usize {
        1
    }
    fn frobenius_inverse(&self, a: &u64) -> u64 {
        *a
    }
    fn random(&self, rng: &mut dyn RngCore) -> u64 {
        rng.next_u64() % self.p
    }
    fn element(&self, i: u128) -> u64 {
        (i % self.p as u128) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_and_composite() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(10007).is_ok());
    }

    #[test]
    fn arithmetic_near_word_size() {
        let f = PrimeField::new(9223372036854775783).unwrap();
        let a = f.p() - 1;
        assert_eq!(f.mul(&a, &a), 1);
        assert_eq!(f.add(&a, &a), f.p() - 2);
        assert_eq!(f.mul(&f.inv(&12345).unwrap(), &12345), 1);
    }
}
