//! Factorization of bivariate polynomials over a prime field.
//!
//! The polynomial is split into its content in `t` and a squarefree
//! decomposition; each squarefree part, viewed in `F_p[t][x]`, is reduced
//! modulo an irreducible `h(t)` with a squarefree, degree-preserving image,
//! factored over `F_p[t]/(h)`, Hensel-lifted modulo a power of `h`, and the
//! lifted factors are recombined by trial division.

use super::bipoly::{BiPoly, BiRing};
use super::ext_field::{is_irreducible_fp, ExtField};
use super::factor::factor_uni;
use super::poly::{PolyRing, UniPoly};
use super::prime_field::PrimeField;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Default bound on the total degree accepted by [`factor_bi_fp`].
pub const DEFAULT_DEGREE_BOUND: u32 = 40;

type TPoly = UniPoly<u64>;
type XPoly = UniPoly<TPoly>;

struct Ctx {
    fp: PrimeField,
    tr: PolyRing<PrimeField>,
    xr: PolyRing<PolyRing<PrimeField>>,
    br: BiRing<PrimeField>,
}

impl Ctx {
    fn new(fp: PrimeField) -> Self {
        let tr = PolyRing::new(fp);
        Ctx { fp, tr: tr.clone(), xr: PolyRing::new(tr), br: BiRing::new(fp) }
    }

    fn content(&self, f: &XPoly) -> TPoly {
        f.coeffs().iter().fold(self.tr.zero(), |g, c| self.tr.gcd(&g, c))
    }

    fn primitive(&self, f: &XPoly) -> XPoly {
        let c = self.content(f);
        self.xr.from_coeffs(f.coeffs().iter().map(|a| self.tr.exact_div(a, &c).expect("content divides")).collect())
    }

    /// Gcd in `F_p[t][x]`, normalized so that the leading coefficient has leading coefficient 1.
    fn gcd(&self, f: &XPoly, g: &XPoly) -> XPoly {
        if f.is_zero() {
            return self.normalize(g);
        }
        if g.is_zero() {
            return self.normalize(f);
        }
        let c = self.tr.gcd(&self.content(f), &self.content(g));
        let (mut a, mut b) = (self.primitive(f), self.primitive(g));
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.deg() == 0 {
                a = self.xr.one();
                break;
            }
            let r = self.xr.pseudo_rem(&a, &b);
            a = b;
            b = if r.is_zero() { r } else { self.primitive(&r) };
        }
        self.normalize(&self.xr.mul(&a, &self.xr.constant(c)))
    }

    fn normalize(&self, f: &XPoly) -> XPoly {
        match f.lc() {
            None => f.clone(),
            Some(l) => {
                let inv = self.fp.inv(&self.tr.lc(l)).expect("nonzero");
                self.xr.from_coeffs(f.coeffs().iter().map(|c| self.tr.scale(c, &inv)).collect())
            }
        }
    }

    fn derivative_x(&self, f: &XPoly) -> XPoly {
        self.xr.derivative(f)
    }

    fn swap(&self, f: &XPoly) -> XPoly {
        self.br.to_t_major(&self.br.from_x_major(f))
    }

    fn is_const(f: &XPoly) -> bool {
        f.deg() <= 0 && f.coeffs().first().is_none_or(|c| c.deg() <= 0)
    }

    fn div(&self, f: &XPoly, g: &XPoly) -> XPoly {
        self.xr.exact_div(f, g).expect("exact bivariate division")
    }

    /// `f(t, x)^(1/p)` for `f` with all exponents divisible by `p`.
    fn pth_root(&self, f: &XPoly) -> XPoly {
        let p = self.fp.p() as usize;
        self.xr.from_coeffs(
            f.coeffs()
                .iter()
                .step_by(p)
                .map(|c| self.tr.from_coeffs(c.coeffs().iter().step_by(p).copied().collect()))
                .collect(),
        )
    }

    /// Squarefree decomposition of a polynomial in `F_p[t][x]`.
    fn squarefree(&self, f: &XPoly, scale: usize, out: &mut Vec<(XPoly, usize)>) {
        if Self::is_const(f) {
            return;
        }
        let d = self.derivative_x(f);
        if d.is_zero() {
            let s = self.swap(f);
            if self.derivative_x(&s).is_zero() {
                self.squarefree(&self.pth_root(f), scale * self.fp.p() as usize, out);
            } else {
                let mut sub = Vec::new();
                self.squarefree(&s, scale, &mut sub);
                out.extend(sub.into_iter().map(|(g, m)| (self.swap(&g), m)));
            }
            return;
        }
        let mut c = self.gcd(f, &d);
        let mut w = self.div(f, &c);
        let mut i = 1;
        while !Self::is_const(&w) {
            let y = self.gcd(&w, &c);
            let z = self.div(&w, &y);
            if !Self::is_const(&z) {
                out.push((self.normalize(&z), i * scale));
            }
            c = self.div(&c, &y);
            w = y;
            i += 1;
        }
        self.squarefree(&c, scale, out);
    }
}

/// Monic irreducible polynomials of degree `d` over F_p, in increasing order.
fn irreducibles(fp: PrimeField, d: usize) -> impl Iterator<Item = TPoly> {
    let p = fp.p() as u128;
    let tr = PolyRing::new(fp);
    let total = p.checked_pow(d as u32).unwrap_or(u128::MAX);
    (0..total).filter_map(move |n| {
        let mut c = Vec::with_capacity(d + 1);
        let mut m = n;
        for _ in 0..d {
            c.push((m % p) as u64);
            m /= p;
        }
        c.push(1);
        let h = tr.from_coeffs(c);
        is_irreducible_fp(fp, &h).then_some(h)
    })
}

struct Lifter<'a> {
    ctx: &'a Ctx,
    h: TPoly,
    k: ExtField,
    kr: PolyRing<ExtField>,
    hb: TPoly,
}

impl Lifter<'_> {
    fn to_k(&self, f: &XPoly) -> UniPoly<Vec<u64>> {
        self.kr.from_coeffs(f.coeffs().iter().map(|c| self.k.from_poly(c)).collect())
    }

    fn from_k(&self, f: &UniPoly<Vec<u64>>) -> XPoly {
        self.ctx.xr.from_coeffs(f.coeffs().iter().map(|c| self.k.to_poly(c)).collect())
    }

    fn reduce(&self, f: &XPoly, m: &TPoly) -> XPoly {
        self.ctx.xr.from_coeffs(f.coeffs().iter().map(|c| self.ctx.tr.rem(c, m)).collect())
    }

    /// Lift `f ≡ g0 * u0 (mod h)`, `u0` monic, to modulus `h^b`.
    fn lift(&self, f: &XPoly, g0: &UniPoly<Vec<u64>>, u0: &UniPoly<Vec<u64>>, b: usize) -> (XPoly, XPoly) {
        let (xr, tr, kr) = (&self.ctx.xr, &self.ctx.tr, &self.kr);
        let (one, s, t) = kr.ext_gcd(g0, u0);
        debug_assert_eq!(one.deg(), 0);
        let mut g = self.from_k(g0);
        let mut u = self.from_k(u0);
        let mut hj = self.h.clone();
        for _ in 1..b {
            let next = tr.mul(&hj, &self.h);
            let diff = self.reduce(&xr.sub(f, &xr.mul(&g, &u)), &next);
            let e = xr.from_coeffs(diff.coeffs().iter().map(|c| tr.exact_div(c, &hj).expect("h-adic lifting")).collect());
            let ek = self.to_k(&e);
            let (q, r) = kr.div_rem(&kr.mul(&ek, &s), u0);
            let dg = kr.add(&kr.mul(&ek, &t), &kr.mul(&q, g0));
            let shift = xr.constant(hj.clone());
            g = self.reduce(&xr.add(&g, &xr.mul(&self.from_k(&dg), &shift)), &self.hb);
            u = self.reduce(&xr.add(&u, &xr.mul(&self.from_k(&r), &shift)), &self.hb);
            hj = next;
        }
        (g, u)
    }
}

impl Ctx {
    /// Choose `h` with `lc(f) mod h != 0` and `f mod h` squarefree; prefer fewer modular factors.
    fn choose_modulus(&self, f: &XPoly) -> Result<(TPoly, Vec<UniPoly<Vec<u64>>>)> {
        let lc = f.lc().expect("nonzero").clone();
        let mut best: Option<(TPoly, Vec<UniPoly<Vec<u64>>>)> = None;
        let mut good = 0;
        for d in 1..=12usize {
            for h in irreducibles(self.fp, d) {
                if self.tr.rem(&lc, &h).is_zero() {
                    continue;
                }
                let k = ExtField::with_modulus(self.fp, h.clone()).expect("irreducible");
                let kr = PolyRing::new(k.clone());
                let img = kr.from_coeffs(f.coeffs().iter().map(|c| k.from_poly(c)).collect());
                if !kr.is_squarefree(&img) {
                    continue;
                }
                let (_, facs) = factor_uni(&kr, &img)?;
                let facs: Vec<_> = facs.into_iter().map(|(g, _)| g).collect();
                if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
                    best = Some((h, facs));
                }
                good += 1;
                if good >= 3 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
                    return Ok(best.unwrap());
                }
            }
            if let Some(b) = best {
                return Ok(b);
            }
        }
        Err(Error::Capacity("no lucky specialization found for bivariate factorization".into()))
    }

    /// Irreducible factors of a primitive polynomial, squarefree and separable in `x`.
    fn factor_separable(&self, f: &XPoly) -> Result<Vec<XPoly>> {
        if f.deg() <= 1 {
            return Ok(vec![self.normalize(f)]);
        }
        if f.coeffs().iter().all(|c| c.deg() <= 0) {
            let uni = self.tr.from_coeffs(f.coeffs().iter().map(|c| self.tr.coeff(c, 0)).collect());
            let (_, facs) = factor_uni(&self.tr, &uni)?;
            return Ok(facs.into_iter().map(|(g, _)| self.xr.from_coeffs(g.coeffs().iter().map(|&c| self.tr.constant(c)).collect())).collect());
        }
        let (h, facs) = self.choose_modulus(f)?;
        if facs.len() == 1 {
            return Ok(vec![self.normalize(f)]);
        }
        let dt = f.coeffs().iter().map(|c| c.deg().max(0) as usize).max().unwrap_or(0);
        let d = h.deg() as usize;
        let b = (2 * dt + 1) / d + 1;
        let hb = self.tr.pow(&h, b as u64);
        let k = ExtField::with_modulus(self.fp, h.clone()).expect("irreducible");
        let lifter = Lifter { ctx: self, h, kr: PolyRing::new(k.clone()), k, hb: hb.clone() };

        let mut lifted = Vec::new();
        let mut rest = f.clone();
        let mut rest_k = lifter.to_k(f);
        for u in &facs[..facs.len() - 1] {
            let g0 = lifter.kr.exact_div(&rest_k, u).expect("modular factor divides");
            let (g, lu) = lifter.lift(&rest, &g0, u, b);
            lifted.push(lu);
            rest = g;
            rest_k = g0;
        }
        let lc_inv = self.tr.inv_mod(rest.lc().unwrap(), &hb).expect("leading coefficient is a unit");
        lifted.push(lifter.reduce(&self.xr.mul(&rest, &self.xr.constant(lc_inv)), &hb));

        let mut out = Vec::new();
        let mut g = f.clone();
        let mut pool = lifted;
        let mut size = 1;
        'outer: while 2 * size <= pool.len() {
            let n = pool.len();
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let mut prod = self.xr.constant(g.lc().unwrap().clone());
                for &i in &idx {
                    prod = lifter.reduce(&self.xr.mul(&prod, &pool[i]), &hb);
                }
                let cand = self.primitive(&prod);
                if let Some(q) = self.xr.exact_div(&g, &cand) {
                    out.push(self.normalize(&cand));
                    g = q;
                    pool = pool.into_iter().enumerate().filter(|(i, _)| !idx.contains(i)).map(|(_, u)| u).collect();
                    continue 'outer;
                }
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
        if !Ctx::is_const(&g) {
            out.push(self.normalize(&g));
        }
        Ok(out)
    }

    /// Irreducible factors of a squarefree polynomial without content in `t`.
    fn factor_squarefree(&self, f: &XPoly) -> Result<Vec<XPoly>> {
        let c = self.gcd(f, &self.derivative_x(f));
        let mut out = Vec::new();
        if !Ctx::is_const(&c) {
            let sep = self.div(f, &c);
            if !Ctx::is_const(&sep) {
                out.extend(self.factor_separable(&sep)?);
            }
            for g in self.factor_separable(&self.swap(&c))? {
                out.push(self.normalize(&self.swap(&g)));
            }
        } else {
            out.extend(self.factor_separable(f)?);
        }
        Ok(out)
    }
}

/// Leading coefficient in the x-major term order.
fn leading_coeff(f: &BiPoly<u64>) -> u64 {
    f.leading().map_or(0, |(_, c)| *c)
}

/// Factorization over F_p into irreducible factors with multiplicity, each with
/// leading (x-major) coefficient 1, together with the unit.
pub fn factor_bi_fp(fp: PrimeField, f: &BiPoly<u64>, degree_bound: u32) -> Result<(u64, Vec<(BiPoly<u64>, usize)>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.total_degree().unwrap_or(0) > degree_bound {
        return Err(Error::Capacity(format!("total degree {} exceeds bound {degree_bound}", f.total_degree().unwrap_or(0))));
    }
    let ctx = Ctx::new(fp);
    let br = &ctx.br;
    let unit = leading_coeff(f);
    let xf = br.to_x_major(f);
    let cont = ctx.content(&xf);
    let prim = ctx.primitive(&xf);

    let mut out: Vec<(BiPoly<u64>, usize)> = Vec::new();
    if cont.deg() > 0 {
        let (_, cf) = factor_uni(&ctx.tr, &cont)?;
        out.extend(cf.into_iter().map(|(g, m)| (br.from_uni_t(&g), m)));
    }
    let mut sqf = Vec::new();
    ctx.squarefree(&prim, 1, &mut sqf);
    for (g, m) in sqf {
        for h in ctx.factor_squarefree(&g)? {
            let hb = br.from_x_major(&h);
            let l = fp.inv(&leading_coeff(&hb)).expect("nonzero");
            out.push((br.scale(&hb, &l), m));
        }
    }
    // merge equal factors coming from different branches
    out.sort_by(|a, b| factor_key(&a.0).cmp(&factor_key(&b.0)).then(a.1.cmp(&b.1)));
    let mut merged: Vec<(BiPoly<u64>, usize)> = Vec::new();
    for (g, m) in out {
        match merged.last_mut() {
            Some((h, k)) if *h == g => *k += m,
            _ => merged.push((g, m)),
        }
    }
    let product = merged.iter().fold(br.one(), |acc, (g, m)| br.mul(&acc, &br.pow(g, *m as u64)));
    if br.scale(&product, &unit) != *f {
        return Err(Error::Consistency("bivariate factorization does not multiply back to its input".into()));
    }
    Ok((unit, merged))
}

/// Deterministic order: total degree, then terms from the leading one down.
pub fn factor_key(f: &BiPoly<u64>) -> (u32, Vec<(u32, u32, u64)>) {
    (f.total_degree().unwrap_or(0), f.terms().rev().map(|(m, c)| (m.ex, m.et, *c)).collect())
}

/// Squarefree test for a bivariate polynomial over F_p.
pub fn is_squarefree_bi(fp: PrimeField, f: &BiPoly<u64>) -> bool {
    let ctx = Ctx::new(fp);
    let xf = ctx.br.to_x_major(f);
    let cont = ctx.content(&xf);
    if cont.deg() > 0 && !ctx.tr.is_squarefree(&cont) {
        return false;
    }
    let mut sqf = Vec::new();
    ctx.squarefree(&ctx.primitive(&xf), 1, &mut sqf);
    sqf.iter().all(|(_, m)| *m == 1)
}
