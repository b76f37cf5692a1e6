//! Singular points of a plane curve over ℚ and over 𝔽_p.
//!
//! Over 𝔽_p the t-coordinates are the roots of `gcd(Res_x(P, P_x), Res_x(P, P_t))`.
//! For each irreducible factor `h` of that gcd we work in `K = 𝔽_p[t]/(h)`, where
//! the x-coordinates over the class of `t` are the roots of `gcd(P, P_x, P_t)`.
//! Each irreducible `g` of that gcd gives one Galois orbit of `deg h · deg g`
//! points, which are listed in the canonical field of that degree when it is
//! at most `k_max`. Counts are exact whatever `k_max` is.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::algebra::bifactor::is_squarefree_bi;
use crate::algebra::bipoly::{BiPoly, BiRing, Mono};
use crate::algebra::ext_field::ExtField;
use crate::algebra::factor::{factor_uni, factor_uni_fp, roots_in_field, roots_of_irreducible, ExtFieldElem};
use crate::algebra::integers::{mod_u64, ZZ};
use crate::algebra::numfield::NumberField;
use crate::algebra::poly::{PolyRing, UniPoly};
use crate::algebra::prime_field::PrimeField;
use crate::algebra::primes::large_primes;
use crate::algebra::resultant::{resultant_bivar, resultant_bivar_fp, Var};
use crate::algebra::ring::{Field, Ring};
use crate::algebra::text::{format_bipoly, format_unipoly};
use crate::algebra::zpoly::{self, lift_symmetric, ZPoly};
use crate::error::{Error, Result};

/// `f(t0, x)` as a polynomial in `x` over the ring of `t0`.
pub(crate) fn specialize_t<R: Ring, K: Ring>(
    br: &BiRing<R>,
    f: &BiPoly<R::Elem>,
    k: &K,
    map: impl Fn(&R::Elem) -> K::Elem,
    t0: &K::Elem,
) -> UniPoly<K::Elem> {
    let inner = PolyRing::new(br.base().clone());
    let kr = PolyRing::new(k.clone());
    kr.from_coeffs(br.to_x_major(f).coeffs().iter().map(|c| inner.eval_in(c, k, &map, t0)).collect())
}

fn residue_text(p: u64, a: u64) -> String {
    if a > p / 2 {
        format!("{}", a as i64 - p as i64)
    } else {
        a.to_string()
    }
}

/// Name for the translated coordinate `v − a`.
fn shifted_name(v: &str, a: &ExtFieldElem) -> String {
    match a.as_prime() {
        Some(0) => v.to_string(),
        Some(c) if c > a.p / 2 => format!("({v} + {})", a.p - c),
        Some(c) => format!("({v} - {c})"),
        None => format!("({v} - ({a}))"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SingularPoint {
    pub t: ExtFieldElem,
    pub x: ExtFieldElem,
    pub multiplicity: usize,
    /// Lowest form of `P` at the point, factored when the point is rational.
    pub tangent_cone: String,
}

impl SingularPoint {
    pub fn label(&self) -> String {
        format!("({},{})", self.t, self.x)
    }

    pub fn to_json(&self) -> Value {
        json!({"point": self.label(), "field_degree": self.t.k, "multiplicity": self.multiplicity, "tangent_cone": self.tangent_cone})
    }
}

/// One Galois orbit of singular points over 𝔽_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularOrbit {
    /// Monic irreducible polynomial of the t-coordinates.
    pub t_factor: UniPoly<u64>,
    /// Monic irreducible polynomial of the x-coordinates over `𝔽_p[t]/(t_factor)`.
    pub x_factor: UniPoly<Vec<u64>>,
    pub degree: usize,
    /// All points of the orbit when `degree <= k_max`, otherwise empty.
    pub points: Vec<SingularPoint>,
}

impl SingularOrbit {
    pub fn t_text(&self, p: u64) -> String {
        format_unipoly(&lift_symmetric(&self.t_factor, p), "t")
    }

    /// The x-factor as a polynomial in `t` and `x` with `deg_t < deg t_factor`.
    pub fn x_text(&self, p: u64) -> String {
        let m = BigInt::from(p);
        let br = BiRing::new(ZZ);
        let f = br.from_terms(self.x_factor.coeffs().iter().enumerate().flat_map(|(ex, c)| {
            let m = m.clone();
            c.iter().enumerate().map(move |(et, &v)| (Mono::new(et as u32, ex as u32), crate::algebra::integers::symmetric_mod(&BigInt::from(v), &m)))
        }));
        format_bipoly(&f, ["t", "x"])
    }

    /// Whether `g` vanishes on the orbit.
    pub fn lies_on(&self, fp: PrimeField, g: &BiPoly<u64>) -> bool {
        let kf = ExtField::with_modulus(fp, self.t_factor.clone()).expect("orbit modulus is irreducible");
        let kr = PolyRing::new(kf.clone());
        let spec = specialize_t(&BiRing::new(fp), g, &kf, |&c| kf.embed(c), &kf.generator());
        kr.rem(&spec, &self.x_factor).is_zero()
    }

    pub fn describe(&self, p: u64) -> String {
        format!("orbit of {} points with {} = 0 and {} = 0", self.degree, self.t_text(p), self.x_text(p))
    }

    pub fn to_json(&self, p: u64) -> Value {
        json!({
            "degree": self.degree,
            "t_factor": self.t_text(p),
            "x_factor": self.x_text(p),
            "points": self.points.iter().map(SingularPoint::to_json).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPSingular {
    pub p: u64,
    pub k_max: usize,
    pub orbits: Vec<SingularOrbit>,
}

impl ModPSingular {
    /// Number of geometric singular points.
    pub fn count(&self) -> usize {
        self.orbits.iter().map(|o| o.degree).sum()
    }

    /// False when some orbit lies beyond `k_max` and its points are not listed.
    pub fn complete(&self) -> bool {
        self.orbits.iter().all(|o| o.degree <= self.k_max)
    }

    pub fn points(&self) -> impl Iterator<Item = &SingularPoint> {
        self.orbits.iter().flat_map(|o| o.points.iter())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "count": self.count(),
            "complete": self.complete(),
            "orbits": self.orbits.iter().map(|o| o.to_json(self.p)).collect::<Vec<_>>(),
        })
    }
}

pub fn singular_points_mod_p(f: &BiPoly<BigInt>, p: u64, k_max: usize) -> Result<ModPSingular> {
    let fp = PrimeField::new(p)?;
    singular_points_fp(fp, &zpoly::reduce_bivar(f, fp), k_max)
}

/// Singular points of a squarefree curve over 𝔽_p.
pub fn singular_points_fp(fp: PrimeField, f: &BiPoly<u64>, k_max: usize) -> Result<ModPSingular> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_squarefree_bi(fp, f) {
        return Err(Error::NotSquarefree);
    }
    let mut out = ModPSingular { p: fp.p(), k_max, orbits: Vec::new() };
    // a squarefree polynomial in t alone is a union of disjoint lines
    if f.deg_x().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let br = BiRing::new(fp);
    let tr = PolyRing::new(fp);
    let (px, pt) = (br.partial_x(f), br.partial_t(f));
    let mut h = tr.zero();
    for d in [&px, &pt] {
        if !d.is_zero() {
            h = tr.gcd(&h, &resultant_bivar_fp(fp, f, d, Var::X)?);
        }
    }
    if h.is_zero() {
        return Err(Error::Consistency("both resultants vanish for a squarefree curve".into()));
    }
    if h.deg() <= 0 {
        return Ok(out);
    }
    for (hi, _) in factor_uni_fp(fp, &h)?.1 {
        let kf = ExtField::with_modulus(fp, hi.clone())?;
        let kr = PolyRing::new(kf.clone());
        let t0 = kf.generator();
        let g = [f, &px, &pt]
            .iter()
            .fold(kr.zero(), |acc, q| kr.gcd(&acc, &specialize_t(&br, q, &kf, |&c| kf.embed(c), &t0)));
        if g.deg() <= 0 {
            continue;
        }
        for (gj, _) in factor_uni(&kr, &g)?.1 {
            let degree = hi.deg() as usize * gj.deg() as usize;
            let points = if degree <= k_max { orbit_points(fp, [f, &px, &pt], &hi, &kf, &gj, degree)? } else { Vec::new() };
            out.orbits.push(SingularOrbit { t_factor: hi.clone(), x_factor: gj, degree, points });
        }
    }
    out.orbits.sort_by(|a, b| {
        (a.degree, a.t_factor.coeffs().iter().rev().collect::<Vec<_>>(), a.x_factor.coeffs().iter().rev().collect::<Vec<_>>())
            .cmp(&(b.degree, b.t_factor.coeffs().iter().rev().collect(), b.x_factor.coeffs().iter().rev().collect()))
    });
    Ok(out)
}

/// All conjugates of one orbit in the canonical field of degree `degree`,
/// re-verified by evaluating `P`, `P_x` and `P_t`.
fn orbit_points(
    fp: PrimeField,
    polys: [&BiPoly<u64>; 3],
    hi: &UniPoly<u64>,
    kf: &ExtField,
    gj: &UniPoly<Vec<u64>>,
    degree: usize,
) -> Result<Vec<SingularPoint>> {
    let lf = ExtField::canonical(fp, degree);
    let lr = PolyRing::new(lf.clone());
    let tr = PolyRing::new(fp);
    let br = BiRing::new(fp);
    let elem = |c: Vec<u64>| ExtFieldElem { p: fp.p(), k: degree, coords: c };
    let mut pts = Vec::new();
    for rho in roots_of_irreducible(fp, hi, &lf) {
        let mapped = lr.from_coeffs(gj.coeffs().iter().map(|c| tr.eval_in(&kf.to_poly(c), &lf, |&a| lf.embed(a), &rho)).collect());
        for x0 in roots_in_field(&lr, &mapped) {
            for q in polys {
                if !lf.is_zero(&br.eval_in(q, &lf, |&a| lf.embed(a), &rho, &x0)) {
                    return Err(Error::Consistency(format!("listed point ({},{}) is not singular", elem(rho.clone()), elem(x0.clone()))));
                }
            }
            let (t, x) = (elem(rho.clone()), elem(x0));
            let (multiplicity, tangent_cone) = tangent_cone(fp, &lf, polys[0], &t, &x);
            pts.push(SingularPoint { t, x, multiplicity, tangent_cone });
        }
    }
    if pts.len() != degree {
        return Err(Error::Consistency(format!("orbit of degree {degree} produced {} points", pts.len())));
    }
    pts.sort();
    Ok(pts)
}

/// Multiplicity and lowest homogeneous form of `f` at `(t0, x0)`.
pub fn tangent_cone(fp: PrimeField, lf: &ExtField, f: &BiPoly<u64>, t0: &ExtFieldElem, x0: &ExtFieldElem) -> (usize, String) {
    let lb = BiRing::new(lf.clone());
    let lifted = BiRing::new(fp).map(f, &lb, |&c| lf.embed(c));
    let st = lb.add(&lb.t(), &lb.constant(t0.coords.clone()));
    let sx = lb.add(&lb.x(), &lb.constant(x0.coords.clone()));
    let shifted = lifted.terms().fold(lb.zero(), |acc, (m, c)| {
        let term = lb.mul(&lb.pow(&st, m.et as u64), &lb.pow(&sx, m.ex as u64));
        lb.add(&acc, &lb.scale(&term, c))
    });
    let order = shifted.terms().map(|(m, _)| m.total()).min().unwrap_or(0);
    let form: Vec<(u32, Vec<u64>)> = shifted.terms().filter(|(m, _)| m.total() == order).map(|(m, c)| (m.et, c.clone())).collect();
    let names = [shifted_name("t", t0), shifted_name("x", x0)];
    let all_prime = form.iter().all(|(_, c)| lf.as_prime(c).is_some());
    let text = if all_prime {
        factored_binary_form(fp, order, &form.iter().map(|(j, c)| (*j, c[0])).collect::<Vec<_>>(), &names)
    } else {
        let mut parts: Vec<String> = form
            .iter()
            .rev()
            .map(|(j, c)| {
                let e = ExtFieldElem { p: fp.p(), k: lf.k(), coords: c.clone() };
                let mono = binary_monomial(*j, order - j, &names);
                format!("({e})*{mono}")
            })
            .collect();
        parts.reverse();
        parts.join(" + ")
    };
    (order as usize, text)
}

fn binary_monomial(a: u32, b: u32, names: &[String; 2]) -> String {
    let pw = |n: &str, e: u32| match e {
        0 => None,
        1 => Some(n.to_string()),
        _ => Some(format!("{n}^{e}")),
    };
    let v: Vec<String> = [pw(&names[1], b), pw(&names[0], a)].into_iter().flatten().collect();
    if v.is_empty() {
        "1".into()
    } else {
        v.join("*")
    }
}

/// Factor `Σ c_j T^j X^(d−j)` over 𝔽_p into homogeneous irreducibles, up to a unit.
fn factored_binary_form(fp: PrimeField, d: u32, form: &[(u32, u64)], names: &[String; 2]) -> String {
    let p = fp.p();
    let jmin = form.iter().map(|(j, _)| *j).min().unwrap_or(0);
    let mut coeffs = vec![0u64; (d - jmin) as usize + 1];
    for &(j, c) in form {
        coeffs[(d - j) as usize] = c;
    }
    let tr = PolyRing::new(fp);
    let u = tr.from_coeffs(coeffs);
    let mut factors: Vec<(String, usize)> = Vec::new();
    if u.deg() > 0 {
        let (_, fs) = factor_uni_fp(fp, &u).expect("nonzero form");
        for (g, m) in fs {
            let e = g.deg() as u32;
            let terms: Vec<String> = g
                .coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| {
                    let mono = binary_monomial(e - i as u32, i as u32, names);
                    let cs = residue_text(p, c);
                    match (cs.as_str(), mono.as_str()) {
                        (_, "1") => cs,
                        ("1", _) => mono,
                        ("-1", _) => format!("-{mono}"),
                        _ => format!("{cs}*{mono}"),
                    }
                })
                .collect();
            factors.push((terms.join(" + ").replace("+ -", "- "), m));
        }
    }
    if jmin > 0 {
        factors.insert(0, (names[0].clone(), jmin as usize));
    }
    let single = factors.len() == 1 && factors[0].1 == 1;
    factors
        .iter()
        .map(|(s, m)| {
            let wrapped = if single || !s.contains(' ') { s.clone() } else { format!("({s})") };
            if *m == 1 {
                wrapped
            } else {
                format!("{wrapped}^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Rational singular points with t-coordinates the roots of `t_factor` and
/// x-coordinates the roots of `x_factor` over `ℚ[t]/(t_factor)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGroup {
    pub t_factor: ZPoly,
    pub x_factor: UniPoly<Vec<BigRational>>,
    pub count: usize,
}

impl RationalGroup {
    fn x_text(&self) -> String {
        let den = self
            .x_factor
            .coeffs()
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let br = BiRing::new(ZZ);
        let f = br.from_terms(self.x_factor.coeffs().iter().enumerate().flat_map(|(ex, c)| {
            let den = den.clone();
            c.iter().enumerate().map(move |(et, v)| (Mono::new(et as u32, ex as u32), (v * BigRational::from(den.clone())).to_integer()))
        }));
        format_bipoly(&f, ["t", "x"])
    }

    pub fn to_json(&self) -> Value {
        json!({"count": self.count, "t_factor": format_unipoly(&self.t_factor, "t"), "x_factor": self.x_text()})
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalSingular {
    pub groups: Vec<RationalGroup>,
}

fn reduce_rational(c: &BigRational, p: u64) -> Option<u64> {
    let d = mod_u64(c.denom(), p);
    if d == 0 {
        return None;
    }
    let fp = PrimeField::new(p).ok()?;
    Some(fp.mul(&mod_u64(c.numer(), p), &fp.inv(&d)?))
}

impl RationalSingular {
    pub fn count(&self) -> usize {
        self.groups.iter().map(|g| g.count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.groups.iter().map(RationalGroup::to_json).collect())
    }

    /// Whether the orbit consists of reductions of rational singular points.
    /// `None` when the reduction of the locus is not defined at `p`.
    pub fn reduces_to(&self, orbit: &SingularOrbit, p: u64) -> Option<bool> {
        let fp = PrimeField::new(p).ok()?;
        let tr = PolyRing::new(fp);
        for g in &self.groups {
            let fbar = zpoly::reduce(&g.t_factor, fp);
            if fbar.deg() != g.t_factor.deg() {
                return None;
            }
            if !tr.rem(&fbar, &orbit.t_factor).is_zero() {
                continue;
            }
            let kf = ExtField::with_modulus(fp, orbit.t_factor.clone()).ok()?;
            let kr = PolyRing::new(kf.clone());
            let mut coeffs = Vec::new();
            for c in g.x_factor.coeffs() {
                let red: Option<Vec<u64>> = c.iter().map(|v| reduce_rational(v, p)).collect();
                coeffs.push(kf.from_poly(&tr.from_coeffs(red?)));
            }
            let gbar = kr.from_coeffs(coeffs);
            if kr.rem(&gbar, &orbit.x_factor).is_zero() {
                return Some(true);
            }
        }
        Some(false)
    }
}

/// Squarefree test over ℚ through a reduction preserving both degrees, with an
/// exact gcd as the fallback.
pub fn is_squarefree_q(f: &BiPoly<BigInt>) -> bool {
    let br = BiRing::new(ZZ);
    let zr = PolyRing::new(ZZ);
    let rows = br.to_x_major(f);
    let content = rows.coeffs().iter().fold(zr.zero(), |acc, c| zpoly::gcd(&acc, c));
    if content.deg() > 0 && zpoly::squarefree_decomposition(&content).iter().any(|(_, m)| *m > 1) {
        return false;
    }
    if f.deg_x().unwrap_or(0) == 0 {
        return true;
    }
    for q in large_primes(3) {
        let fq = PrimeField::new(q).expect("prime");
        let r = zpoly::reduce_bivar(f, fq);
        if r.deg_x() == f.deg_x() && r.deg_t() == f.deg_t() && is_squarefree_bi(fq, &r) {
            return true;
        }
    }
    zpoly::gcd_bivar(f, &br.partial_x(f)).deg_x().unwrap_or(0) == 0
}

/// `gcd(Res_x(P, P_x), Res_x(P, P_t))` is a unit, tested modulo two large primes
/// at which the x-degree of `P` and its leading coefficient survive.
fn coprime_resultants_modular(f: &BiPoly<BigInt>, fx: &BiPoly<BigInt>, ft: &BiPoly<BigInt>) -> Result<bool> {
    let mut tried = 0;
    for q in large_primes(8) {
        let fq = PrimeField::new(q).expect("prime");
        let r = zpoly::reduce_bivar(f, fq);
        if r.deg_x() != f.deg_x() || r.deg_t() != f.deg_t() {
            continue;
        }
        let tr = PolyRing::new(fq);
        let mut h = tr.zero();
        for d in [fx, ft] {
            let dq = zpoly::reduce_bivar(d, fq);
            if !dq.is_zero() {
                h = tr.gcd(&h, &resultant_bivar_fp(fq, &r, &dq, Var::X)?);
            }
        }
        if h.is_zero() || h.deg() > 0 {
            return Ok(false);
        }
        tried += 1;
        if tried == 2 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Singular points of a squarefree integer curve over the algebraic closure of ℚ.
pub fn singular_points_q(f: &BiPoly<BigInt>) -> Result<RationalSingular> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_squarefree_q(f) {
        return Err(Error::NotSquarefree);
    }
    let br = BiRing::new(ZZ);
    let (fx, ft) = (br.partial_x(f), br.partial_t(f));
    if f.deg_x().unwrap_or(0) == 0 || ft.is_zero() || coprime_resultants_modular(f, &fx, &ft)? {
        return Ok(RationalSingular::default());
    }
    let r1 = resultant_bivar(f, &fx, Var::X)?;
    let r2 = resultant_bivar(f, &ft, Var::X)?;
    let h = zpoly::gcd(&r1, &r2);
    if h.is_zero() {
        return Err(Error::Consistency("both resultants vanish for a squarefree curve".into()));
    }
    let mut groups = Vec::new();
    if h.deg() <= 0 {
        return Ok(RationalSingular { groups });
    }
    for (hi, _) in zpoly::factor(&h)?.1 {
        let k = NumberField::new(&hi);
        let kr = PolyRing::new(k.clone());
        let t0 = k.generator();
        let specs: Vec<UniPoly<Vec<BigRational>>> =
            [f, &fx, &ft].iter().map(|q| specialize_t(&br, q, &k, |c| k.from_integer(c), &t0)).collect();
        let g = specs.iter().fold(kr.zero(), |acc, q| kr.gcd(&acc, q));
        if g.deg() <= 0 {
            continue;
        }
        let g = kr.monic(&kr.div_rem(&g, &kr.gcd(&g, &kr.derivative(&g))).0);
        if specs.iter().any(|q| !kr.rem(q, &g).is_zero()) {
            return Err(Error::Consistency("singular x-factor does not divide the partials".into()));
        }
        let count = hi.deg() as usize * g.deg() as usize;
        let t_factor = if hi.lc().is_some_and(|c| c.is_negative()) { PolyRing::new(ZZ).neg(&hi) } else { hi };
        groups.push(RationalGroup { t_factor, x_factor: g, count });
    }
    Ok(RationalSingular { groups })
}
