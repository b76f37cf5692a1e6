use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for the full 64-bit range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as u64).collect()
}

pub fn odd_primes_up_to(n: u64) -> Vec<u64> {
    primes_up_to(n).into_iter().filter(|&p| p != 2).collect()
}

/// Largest primes below `2^62`, in decreasing order.
pub fn large_primes(count: usize) -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    std::iter::from_fn(move || loop {
        n -= 2;
        if is_prime_u64(n) {
            return Some(n);
        }
    })
    .take(count)
}

fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho(n: &BigUint, max_iter: u64) -> Option<BigUint> {
    let one = BigUint::one();
    for c in 1u32..20 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut prod = one.clone();
        let mut iter = 0u64;
        loop {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            prod = (prod * diff) % n;
            iter += 1;
            if iter % 64 == 0 || iter >= max_iter {
                let g = prod.gcd(n);
                if g == *n {
                    break;
                }
                if g != one {
                    return Some(g);
                }
            }
            if iter >= max_iter {
                return None;
            }
        }
    }
    None
}

/// Result of factoring an integer with bounded effort.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Proven or probable prime factors with exponents, ascending.
    pub primes: Vec<(BigUint, u32)>,
    /// Cofactors that resisted factoring.
    pub unresolved: Vec<BigUint>,
}

#[derive(Clone, Copy, Debug)]
pub struct FactorBounds {
    pub trial: u64,
    pub rho_iterations: u64,
    /// Cofactors with more bits than this are not tested or split.
    pub max_bits: u64,
}

impl Default for FactorBounds {
    fn default() -> Self {
        FactorBounds { trial: 1_000_000, rho_iterations: 200_000, max_bits: 2048 }
    }
}

/// Trial division up to `bounds.trial`, then Pollard rho on what remains.
pub fn factor_integer(n: &BigInt, bounds: &FactorBounds) -> Factorization {
    let mut n = n.abs().to_biguint().expect("nonnegative");
    let mut primes = Vec::new();
    let mut unresolved = Vec::new();
    if n.is_zero() {
        return Factorization { primes, unresolved };
    }
    for p in primes_up_to(bounds.trial) {
        if n.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            primes.push((pb, e));
        }
        if let Some(v) = n.to_u64() {
            if v > 1 && (p as u128) * (p as u128) > v as u128 {
                break;
            }
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if m.bits() > bounds.max_bits {
            unresolved.push(m);
            continue;
        }
        if is_probable_prime_big(&m) {
            push_prime(&mut primes, m);
            continue;
        }
        match rho(&m, bounds.rho_iterations) {
            Some(d) => {
                let e = &m / &d;
                stack.push(d);
                stack.push(e);
            }
            None => unresolved.push(m),
        }
    }
    primes.sort();
    unresolved.sort();
    Factorization { primes, unresolved }
}

fn push_prime(primes: &mut Vec<(BigUint, u32)>, p: BigUint) {
    if let Some(slot) = primes.iter_mut().find(|(q, _)| *q == p) {
        slot.1 += 1;
    } else {
        primes.push((p, 1));
    }
}

/// Odd prime divisors that fit in 64 bits.
pub fn odd_prime_divisors(n: &BigInt, bounds: &FactorBounds) -> (Vec<u64>, Vec<BigUint>) {
    let f = factor_integer(n, bounds);
    let mut small = Vec::new();
    let mut big = f.unresolved;
    for (p, _) in f.primes {
        match p.to_u64() {
            Some(2) => {}
            Some(v) => small.push(v),
            None => big.push(p),
        }
    }
    (small, big)
}

/// Extended Euclid on machine integers: `a^{-1} mod m`.
pub fn inv_mod_u64(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i128) as u64)
}

/// `p^r` exactly dividing `n`, as `(r, n / p^r)`.
pub fn split_prime_power(mut n: u64, p: u64) -> (u32, u64) {
    let mut r = 0;
    while n % p == 0 {
        n /= p;
        r += 1;
    }
    (r, n)
}
