//! Resultants of bivariate polynomials and univariate discriminants.
//!
//! Over ℤ the resultant is computed modulo word-size primes by evaluation and
//! interpolation, then recovered by Chinese remaindering under a coefficient
//! bound; over 𝔽_p the same evaluation scheme is used when the field has enough
//! points, and the subresultant sequence over 𝔽_p[t] otherwise.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bipoly::{BiPoly, BiRing};
use super::integers::{mod_u64, symmetric_mod, ZZ};
use super::poly::{PolyRing, UniPoly};
use super::prime_field::PrimeField;
use super::primes::large_primes;
use super::ring::{Field, Ring};
use super::zpoly::{crt_pair, ZPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    T,
    X,
}

/// Arrange so that the eliminated variable is `x`.
fn orient<R: Ring>(br: &BiRing<R>, f: &BiPoly<R::Elem>, v: Var) -> BiPoly<R::Elem> {
    match v {
        Var::X => f.clone(),
        Var::T => br.swap_vars(f),
    }
}

fn check_degenerate<E>(f: &BiPoly<E>, g: &BiPoly<E>) -> Result<()> {
    let dx = |h: &BiPoly<E>| h.deg_x().unwrap_or(0);
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if dx(f) == 0 && dx(g) == 0 {
        return Err(Error::Degenerate("both inputs are constant in the eliminated variable".into()));
    }
    Ok(())
}

fn res_degree_bound<E>(f: &BiPoly<E>, g: &BiPoly<E>) -> usize {
    let (fx, ft) = (f.deg_x().unwrap_or(0) as usize, f.deg_t().unwrap_or(0) as usize);
    let (gx, gt) = (g.deg_x().unwrap_or(0) as usize, g.deg_t().unwrap_or(0) as usize);
    fx * gt + gx * ft
}

/// Newton interpolation over 𝔽_p.
pub fn interpolate(fp: PrimeField, xs: &[u64], ys: &[u64]) -> UniPoly<u64> {
    let r = PolyRing::new(fp);
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = fp.sub(&coef[i], &coef[i - 1]);
            let den = fp.sub(&xs[i], &xs[i - j]);
            coef[i] = fp.mul(&num, &fp.inv(&den).expect("distinct nodes"));
        }
    }
    let mut acc = r.zero();
    for i in (0..n).rev() {
        acc = r.add(&r.mul(&acc, &r.from_coeffs(vec![fp.neg(&xs[i]), 1])), &r.constant(coef[i]));
    }
    acc
}

/// `Res_x(f, g)` over 𝔽_p by evaluation at points where neither leading coefficient vanishes.
fn res_by_evaluation(fp: PrimeField, f: &BiPoly<u64>, g: &BiPoly<u64>, bound: usize) -> Option<UniPoly<u64>> {
    let br = BiRing::new(fp);
    let pr = PolyRing::new(fp);
    let (df, dg) = (f.deg_x()? as i64, g.deg_x()? as i64);
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut t0 = 0u64;
    while xs.len() <= bound {
        if t0 >= fp.p() {
            return None;
        }
        let a = br.eval_t(f, &t0);
        let b = br.eval_t(g, &t0);
        if a.deg() == df && b.deg() == dg {
            xs.push(t0);
            ys.push(pr.resultant_field(&a, &b));
        }
        t0 += 1;
    }
    Some(interpolate(fp, &xs, &ys))
}

/// `Res(f, g)` eliminating `v`, over 𝔽_p; the result is a polynomial in the other variable.
pub fn resultant_bivar_fp(fp: PrimeField, f: &BiPoly<u64>, g: &BiPoly<u64>, v: Var) -> Result<UniPoly<u64>> {
    let br = BiRing::new(fp);
    let (f, g) = (orient(&br, f, v), orient(&br, g, v));
    check_degenerate(&f, &g)?;
    let bound = res_degree_bound(&f, &g);
    if let Some(r) = res_by_evaluation(fp, &f, &g, bound) {
        return Ok(r);
    }
    let xr = PolyRing::new(PolyRing::new(fp));
    Ok(xr.resultant(&br.to_x_major(&f), &br.to_x_major(&g)))
}

fn norm1(f: &BiPoly<BigInt>) -> BigInt {
    f.terms().map(|(_, c)| c.abs()).sum()
}

/// `Res(f, g)` eliminating `v`, over ℤ.
pub fn resultant_bivar(f: &BiPoly<BigInt>, g: &BiPoly<BigInt>, v: Var) -> Result<ZPoly> {
    let br = BiRing::new(ZZ);
    let (f, g) = (orient(&br, f, v), orient(&br, g, v));
    check_degenerate(&f, &g)?;
    let (dfx, dgx) = (f.deg_x().unwrap_or(0), g.deg_x().unwrap_or(0));
    let bound_deg = res_degree_bound(&f, &g);
    let limit = norm1(&f).pow(dgx) * norm1(&g).pow(dfx) * 2 + 1;
    let lcf = br.to_x_major(&f).coeffs().last().cloned().unwrap_or_default();
    let lcg = br.to_x_major(&g).coeffs().last().cloned().unwrap_or_default();
    let zr = PolyRing::new(ZZ);
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); bound_deg + 1];
    let mut modulus = BigInt::one();
    for p in large_primes(usize::MAX) {
        if lcf.coeffs().iter().all(|c| mod_u64(c, p) == 0) || lcg.coeffs().iter().all(|c| mod_u64(c, p) == 0) {
            continue;
        }
        let fp = PrimeField::new(p).expect("prime");
        let fb = super::zpoly::reduce_bivar(&f, fp);
        let gb = super::zpoly::reduce_bivar(&g, fp);
        let r = res_by_evaluation(fp, &fb, &gb, bound_deg).expect("large field has enough points");
        let mut rc = r.into_coeffs();
        rc.resize(bound_deg + 1, 0);
        for (a, b) in acc.iter_mut().zip(rc) {
            *a = crt_pair(a, &modulus, b, p);
        }
        modulus *= BigInt::from(p);
        if modulus > limit {
            break;
        }
    }
    Ok(zr.from_coeffs(acc.iter().map(|c| symmetric_mod(c, &modulus)).collect()))
}

/// Resultant of two univariate integer polynomials, by the same modular scheme.
pub fn resultant_uni(f: &ZPoly, g: &ZPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let n1 = |h: &ZPoly| h.coeffs().iter().map(|c| c.abs()).sum::<BigInt>();
    let limit = n1(f).pow(g.deg() as u32) * n1(g).pow(f.deg() as u32) * 2 + 1;
    let mut acc = BigInt::zero();
    let mut modulus = BigInt::one();
    for p in large_primes(usize::MAX) {
        if mod_u64(f.lc().unwrap(), p) == 0 || mod_u64(g.lc().unwrap(), p) == 0 {
            continue;
        }
        let fp = PrimeField::new(p).expect("prime");
        let pr = PolyRing::new(fp);
        let r = pr.resultant_field(&super::zpoly::reduce(f, fp), &super::zpoly::reduce(g, fp));
        acc = crt_pair(&acc, &modulus, r, p);
        modulus *= BigInt::from(p);
        if modulus > limit {
            break;
        }
    }
    symmetric_mod(&acc, &modulus)
}

/// `(-1)^(d(d-1)/2) Res(f, f') / lc(f)` over any integral domain.
pub fn discriminant_uni<R: Ring>(r: &PolyRing<R>, f: &UniPoly<R::Elem>) -> Result<R::Elem> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::Degenerate("discriminant of a constant".into())),
        Some(_) => Ok(r.discriminant(f).expect("positive degree")),
    }
}

/// Discriminant over ℤ through the modular resultant.
pub fn discriminant_z(f: &ZPoly) -> Result<BigInt> {
    let d = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::Degenerate("discriminant of a constant".into())),
        Some(d) => d,
    };
    let zr = PolyRing::new(ZZ);
    let res = resultant_uni(f, &zr.derivative(f));
    let q = res / f.lc().unwrap();
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}
