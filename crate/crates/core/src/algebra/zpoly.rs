//! Integer polynomials: content, modular gcd, squarefree decomposition and
//! Zassenhaus factorization over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bipoly::{BiPoly, BiRing};
use super::factor::factor_uni_fp;
use super::integers::{mod_u64, symmetric_mod, ZZ};
use super::poly::{PolyRing, UniPoly};
use super::prime_field::PrimeField;
use super::primes::{large_primes, odd_primes_up_to};
use super::ring::Ring;
use crate::error::{Error, Result};

pub type ZPoly = UniPoly<BigInt>;

fn zr() -> PolyRing<ZZ> {
    PolyRing::new(ZZ)
}

pub fn content(f: &ZPoly) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divide by the content and make the leading coefficient positive.
pub fn primitive_part(f: &ZPoly) -> ZPoly {
    if f.is_zero() {
        return f.clone();
    }
    let mut c = content(f);
    if f.lc().unwrap().is_negative() {
        c = -c;
    }
    zr().from_coeffs(f.coeffs().iter().map(|a| a / &c).collect())
}

pub fn reduce(f: &ZPoly, fp: PrimeField) -> UniPoly<u64> {
    PolyRing::new(fp).from_coeffs(f.coeffs().iter().map(|c| mod_u64(c, fp.p())).collect())
}

/// Coefficient-wise reduction of an integer bivariate polynomial.
pub fn reduce_bivar(f: &BiPoly<BigInt>, fp: PrimeField) -> BiPoly<u64> {
    BiRing::new(fp).from_terms(f.terms().map(|(m, c)| (*m, mod_u64(c, fp.p()))))
}

/// Reduction modulo an odd prime; rejects 2 and composites.
pub fn reduce_mod_p(f: &BiPoly<BigInt>, p: u64) -> Result<BiPoly<u64>> {
    Ok(reduce_bivar(f, PrimeField::new(p)?))
}

/// Lift residues in [0, p) to symmetric integer representatives.
pub fn lift_symmetric(f: &UniPoly<u64>, p: u64) -> ZPoly {
    let m = BigInt::from(p);
    zr().from_coeffs(f.coeffs().iter().map(|&c| symmetric_mod(&BigInt::from(c), &m)).collect())
}

/// Combine `a mod m` with `b mod p` into the residue modulo `m*p` in `[0, m*p)`.
pub fn crt_pair(a: &BigInt, m: &BigInt, b: u64, p: u64) -> BigInt {
    let pb = BigInt::from(p);
    let am = mod_u64(a, p);
    let mm = mod_u64(m, p);
    let inv = super::primes::inv_mod_u64(mm, p).expect("coprime moduli");
    let diff = (b as u128 + p as u128 - am as u128) % p as u128;
    let k = (diff * inv as u128) % p as u128;
    let r = a + m * BigInt::from(k as u64);
    r.mod_floor(&(m * pb))
}

/// Exact quotient `f / g` over ℤ, if it exists.
pub fn divide_exact(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let (q, r) = zr().div_rem_exact_lc(f, g)?;
    r.is_zero().then_some(q)
}

/// Greatest common divisor over ℤ with positive leading coefficient, by
/// reduction modulo word-size primes and Chinese remaindering.
pub fn gcd(f: &ZPoly, g: &ZPoly) -> ZPoly {
    let r = zr();
    if f.is_zero() {
        return primitive_part(g);
    }
    if g.is_zero() {
        return primitive_part(f);
    }
    let c = content(f).gcd(&content(g));
    let (f, g) = (primitive_part(f), primitive_part(g));
    if f.deg() == 0 || g.deg() == 0 {
        return r.constant(c);
    }
    let l = r.lc(&f).gcd(&r.lc(&g));
    let mut acc: Option<(ZPoly, BigInt)> = None;
    let mut last: Option<ZPoly> = None;
    for p in large_primes(usize::MAX) {
        if mod_u64(&l, p) == 0 {
            continue;
        }
        let fp = PrimeField::new(p).expect("prime");
        let pr = PolyRing::new(fp);
        let gp = pr.monic(&pr.gcd(&reduce(&f, fp), &reduce(&g, fp)));
        if gp.deg() == 0 {
            return r.constant(c);
        }
        let gp = pr.scale(&gp, &mod_u64(&l, p));
        acc = match acc {
            Some((h, m)) if h.deg() == gp.deg() => {
                let coeffs = (0..h.coeffs().len())
                    .map(|i| crt_pair(&h.coeffs()[i], &m, gp.coeffs()[i], p))
                    .collect();
                Some((r.from_coeffs(coeffs), m * BigInt::from(p)))
            }
            Some((h, m)) if h.deg() < gp.deg() => Some((h, m)),
            _ => Some((r.from_coeffs(gp.coeffs().iter().map(|&v| BigInt::from(v)).collect()), BigInt::from(p))),
        };
        let (h, m) = acc.as_ref().unwrap();
        let cand = primitive_part(&r.from_coeffs(h.coeffs().iter().map(|v| symmetric_mod(v, m)).collect()));
        if last.as_ref() == Some(&cand) && divide_exact(&f, &cand).is_some() && divide_exact(&g, &cand).is_some() {
            return r.scale(&cand, &c);
        }
        last = Some(cand);
    }
    unreachable!("prime supply exhausted")
}

/// Yun decomposition over ℚ: primitive, pairwise coprime `g_i` with `f = c * prod g_i^i`.
pub fn squarefree_decomposition(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    let r = zr();
    let f = primitive_part(f);
    if f.deg() <= 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let fd = r.derivative(&f);
    let a0 = gcd(&f, &fd);
    let mut b = divide_exact(&f, &a0).expect("gcd divides");
    let c = divide_exact(&fd, &a0).expect("gcd divides");
    let mut d = r.sub(&c, &r.derivative(&b));
    let mut i = 1;
    while b.deg() > 0 {
        let a = gcd(&b, &d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = divide_exact(&b, &a).expect("gcd divides");
        let c = divide_exact(&d, &a).expect("gcd divides");
        d = r.sub(&c, &r.derivative(&b));
        i += 1;
    }
    out
}

pub fn squarefree_part(f: &ZPoly) -> Result<ZPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = zr();
    Ok(squarefree_decomposition(f).iter().fold(r.one(), |acc, (g, _)| r.mul(&acc, g)))
}

fn isqrt_ceil(n: &BigInt) -> BigInt {
    let s = n.sqrt();
    if &(&s * &s) == n {
        s
    } else {
        s + 1
    }
}

/// One linear Hensel step bundle: lift `F ≡ g*h (mod p)` to modulus `p^k`,
/// `h` monic. Returns the lifted `(g, h)`.
fn hensel_lift(f: &ZPoly, g0: &UniPoly<u64>, h0: &UniPoly<u64>, fp: PrimeField, k: u32) -> (ZPoly, ZPoly) {
    let r = zr();
    let pr = PolyRing::new(fp);
    let p = BigInt::from(fp.p());
    let (gg, s, t) = pr.ext_gcd(g0, h0);
    debug_assert_eq!(gg.deg(), 0);
    let mut g = r.from_coeffs(g0.coeffs().iter().map(|&c| BigInt::from(c)).collect());
    let mut h = r.from_coeffs(h0.coeffs().iter().map(|&c| BigInt::from(c)).collect());
    let mut m = p.clone();
    for _ in 1..k {
        let diff = r.sub(f, &r.mul(&g, &h));
        let e = r.from_coeffs(diff.coeffs().iter().map(|c| c / &m).collect());
        let ep = reduce(&e, fp);
        let (q, rr) = pr.div_rem(&pr.mul(&ep, &s), h0);
        let dg = pr.add(&pr.mul(&ep, &t), &pr.mul(&q, g0));
        let to_z = |u: &UniPoly<u64>| r.from_coeffs(u.coeffs().iter().map(|&c| BigInt::from(c) * &m).collect());
        g = r.add(&g, &to_z(&dg));
        h = r.add(&h, &to_z(&rr));
        m *= &p;
        let red = |u: &ZPoly| r.from_coeffs(u.coeffs().iter().map(|c| c.mod_floor(&m)).collect());
        g = red(&g);
        h = red(&h);
    }
    (g, h)
}

fn mignotte_bound(f: &ZPoly) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let n = f.degree().unwrap_or(0) as u32;
    (BigInt::one() << n) * isqrt_ceil(&norm2) * zr().lc(f).abs()
}

/// Factor a primitive squarefree polynomial of positive degree.
fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let r = zr();
    if f.deg() <= 1 {
        return vec![f.clone()];
    }
    let lc = r.lc(f);
    let disc_free = |fp: PrimeField| {
        let pr = PolyRing::new(fp);
        let fm = reduce(f, fp);
        fm.deg() == f.deg() && pr.is_squarefree(&fm)
    };
    let mut best: Option<(PrimeField, Vec<UniPoly<u64>>)> = None;
    let mut tried = 0;
    for p in odd_primes_up_to(100_000) {
        if mod_u64(&lc, p) == 0 {
            continue;
        }
        let fp = PrimeField::new(p).unwrap();
        if !disc_free(fp) {
            continue;
        }
        let (_, facs) = factor_uni_fp(fp, &reduce(f, fp)).expect("nonzero");
        let facs: Vec<UniPoly<u64>> = facs.into_iter().map(|(g, _)| g).collect();
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((fp, facs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (fp, facs) = best.expect("some prime is good");
    let p = BigInt::from(fp.p());
    let bound = mignotte_bound(f) * 2 + 1;
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= bound {
        pk *= &p;
        k += 1;
    }
    let pr = PolyRing::new(fp);
    let mut lifted = Vec::new();
    let mut rest = f.clone();
    let mut rest_mod = reduce(f, fp);
    for u in &facs[..facs.len() - 1] {
        let g0 = pr.exact_div(&rest_mod, u).expect("modular factor divides");
        let (g, h) = hensel_lift(&rest, &g0, u, fp, k);
        lifted.push(h);
        rest = g;
        rest_mod = g0;
    }
    let last = rest;
    let inv_lc = zr().lc(&last).extended_gcd(&pk).x.mod_floor(&pk);
    lifted.push(r.from_coeffs(last.coeffs().iter().map(|c| (c * &inv_lc).mod_floor(&pk)).collect()));

    let mut out = Vec::new();
    let mut f = f.clone();
    let mut pool: Vec<ZPoly> = lifted;
    let mut size = 1;
    'outer: while 2 * size <= pool.len() {
        let n = pool.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let lcf = r.lc(&f);
            let mut prod = r.constant(lcf.clone());
            for &i in &idx {
                prod = r.from_coeffs(r.mul(&prod, &pool[i]).coeffs().iter().map(|c| c.mod_floor(&pk)).collect());
            }
            let cand = primitive_part(&r.from_coeffs(prod.coeffs().iter().map(|c| symmetric_mod(c, &pk)).collect()));
            if let Some(q) = divide_exact(&f, &cand) {
                out.push(cand);
                f = q;
                let mut keep = Vec::new();
                for (i, u) in pool.into_iter().enumerate() {
                    if !idx.contains(&i) {
                        keep.push(u);
                    }
                }
                pool = keep;
                continue 'outer;
            }
            // next combination
            let mut j = size;
            loop {
                if j == 0 {
                    size += 1;
                    continue 'outer;
                }
                j -= 1;
                if idx[j] < n - size + j {
                    idx[j] += 1;
                    for l in j + 1..size {
                        idx[l] = idx[l - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    if f.deg() > 0 {
        out.push(primitive_part(&f));
    }
    out
}

/// Irreducible factorization over ℚ: `f = c * prod g_i^{e_i}` with primitive `g_i`
/// of positive leading coefficient, sorted by degree then coefficients.
pub fn factor(f: &ZPoly) -> Result<(BigInt, Vec<(ZPoly, usize)>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = zr();
    let mut out = Vec::new();
    for (g, m) in squarefree_decomposition(f) {
        for h in factor_squarefree(&g) {
            out.push((h, m));
        }
    }
    out.sort_by(|a, b| (a.0.coeffs().len(), a.0.coeffs().iter().rev().collect::<Vec<_>>()).cmp(&(b.0.coeffs().len(), b.0.coeffs().iter().rev().collect::<Vec<_>>())));
    let prod = out.iter().fold(r.one(), |acc, (g, m)| r.mul(&acc, &r.pow(g, *m as u64)));
    let unit = r.lc(f) / r.lc(&prod);
    Ok((unit, out))
}

/// Bivariate gcd over ℤ (as polynomials in `x` over ℤ[t]), by the primitive
/// remainder sequence; normalized to positive leading coefficient.
pub fn gcd_bivar(f: &BiPoly<BigInt>, g: &BiPoly<BigInt>) -> BiPoly<BigInt> {
    let br = BiRing::new(ZZ);
    let xr = PolyRing::new(zr());
    let cont = |u: &UniPoly<ZPoly>| u.coeffs().iter().fold(ZPoly::default(), |a, c| gcd(&a, c));
    let prim = |u: &UniPoly<ZPoly>| {
        let c = cont(u);
        xr.from_coeffs(u.coeffs().iter().map(|a| divide_exact(a, &c).expect("content divides")).collect())
    };
    let mut a = br.to_x_major(f);
    let mut b = br.to_x_major(g);
    if a.is_zero() {
        return normalize_bivar(g);
    }
    if b.is_zero() {
        return normalize_bivar(f);
    }
    let c = gcd(&cont(&a), &cont(&b));
    a = prim(&a);
    b = prim(&b);
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.deg() == 0 {
            a = xr.one();
            break;
        }
        let rr = xr.pseudo_rem(&a, &b);
        a = b;
        b = if rr.is_zero() { rr } else { prim(&rr) };
    }
    let res = xr.mul(&a, &xr.constant(c));
    normalize_bivar(&br.from_x_major(&res))
}

/// Remove the integer content and make the leading (x-major) coefficient positive.
pub fn normalize_bivar(f: &BiPoly<BigInt>) -> BiPoly<BigInt> {
    let br = BiRing::new(ZZ);
    let Some((_, lc)) = f.leading() else {
        return f.clone();
    };
    let mut c = f.terms().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if lc.is_negative() {
        c = -c;
    }
    br.from_terms(f.terms().map(|(m, v)| (*m, v / &c)))
}

pub fn bivar_content(f: &BiPoly<BigInt>) -> BigInt {
    f.terms().fold(BigInt::zero(), |g, (_, v)| g.gcd(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ZPoly {
        zr().from_ints(c)
    }

    #[test]
    fn modular_gcd() {
        let r = zr();
        let a = p(&[1, -3, 2, 7]);
        let b = p(&[-5, 0, 3]);
        let c = p(&[2, 1]);
        let g = gcd(&r.mul(&r.mul(&a, &c), &r.constant(6.into())), &r.mul(&r.mul(&b, &c), &r.constant(4.into())));
        assert_eq!(g, r.scale(&c, &2.into()));
        assert_eq!(gcd(&a, &b), p(&[1]));
    }

    #[test]
    fn yun_over_q() {
        let r = zr();
        let a = p(&[1, 1, -1]);
        let b = p(&[-2, 1]);
        let f = r.mul(&a, &r.pow(&b, 3));
        let d = squarefree_decomposition(&f);
        assert_eq!(d, vec![(p(&[-1, -1, 1]), 1), (b.clone(), 3)]);
        assert_eq!(squarefree_part(&p(&[-1, 1, 1])).unwrap(), p(&[-1, 1, 1]));
    }

    #[test]
    fn zassenhaus_splits_cyclotomic_like_product() {
        let r = zr();
        // (x^2 + x - 1)(x^10 - 10x^8 + 35x^6 + x^5 - 50x^4 - 5x^3 + 25x^2 + 5x - 1)
        let a = p(&[-1, 1, 1]);
        let b = p(&[-1, 5, 25, -5, -50, 1, 35, 0, -10, 0, 1]);
        let (u, fs) = factor(&r.mul(&a, &b)).unwrap();
        assert_eq!(u, BigInt::one());
        assert_eq!(fs, vec![(a, 1), (b, 1)]);
        let x4 = p(&[1, 0, 0, 0, 1]);
        assert_eq!(factor(&x4).unwrap().1, vec![(x4, 1)]);
        let (u, fs) = factor(&p(&[-2, 0, -2, 0, 4])).unwrap();
        assert_eq!(u, BigInt::from(2));
        assert_eq!(fs, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1), (p(&[1, 0, 2]), 1)]);
    }

    #[test]
    fn bivariate_gcd() {
        let br = BiRing::new(ZZ);
        let f = br.from_int_terms(&[(1, 0, 2), (-1, 2, 1), (1, 0, 1), (1, 2, 0), (-1, 0, 0)]);
        let g1 = br.from_int_terms(&[(3, 1, 1), (1, 0, 0)]);
        let g2 = br.from_int_terms(&[(1, 0, 3), (-2, 4, 0)]);
        let a = br.mul(&br.mul(&f, &g1), &br.constant(BigInt::from(-4)));
        let b = br.mul(&f, &g2);
        assert_eq!(gcd_bivar(&a, &b), f);
    }
}
