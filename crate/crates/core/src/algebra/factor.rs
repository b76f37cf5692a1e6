use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ext_field::ExtField;
use super::poly::{PolyRing, UniPoly};
use super::prime_field::PrimeField;
use super::ring::{FiniteField, Ring};
use crate::error::{Error, Result};

const EDF_SEED: u64 = 0x6368_6172_7661_7200;

/// Element of the canonical field with `p^k` elements (see [`ExtField::canonical`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtFieldElem {
    pub p: u64,
    pub k: usize,
    pub coords: Vec<u64>,
}

impl ExtFieldElem {
    pub fn from_prime(p: u64, a: u64) -> Self {
        ExtFieldElem { p, k: 1, coords: vec![a % p] }
    }

    /// Value in the prime field, if the element lies there.
    pub fn as_prime(&self) -> Option<u64> {
        self.coords[1..].iter().all(|&c| c == 0).then_some(self.coords[0])
    }
}

impl std::fmt::Display for ExtFieldElem {
    /// Prime-field values print as integers; others as polynomials in the generator `g`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(a) = self.as_prime() {
            return write!(f, "{a}");
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coords.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(EDF_SEED)
}

/// `f^(1/p)` for a polynomial in `x^p` over a finite field.
fn pth_root<F: FiniteField>(r: &PolyRing<F>, f: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
    let p = r.base().prime() as usize;
    r.from_coeffs(f.coeffs().iter().step_by(p).map(|c| r.base().frobenius_inverse(c)).collect())
}

/// Squarefree decomposition `f = lc * prod g_i^i` with monic, pairwise coprime `g_i`.
pub fn squarefree_decomposition<F: FiniteField>(r: &PolyRing<F>, f: &UniPoly<F::Elem>) -> Vec<(UniPoly<F::Elem>, usize)> {
    let mut out = Vec::new();
    sqf_rec(r, &r.monic(f), 1, &mut out);
    out.sort_by_key(|(_, m)| *m);
    out
}

fn sqf_rec<F: FiniteField>(r: &PolyRing<F>, f: &UniPoly<F::Elem>, scale: usize, out: &mut Vec<(UniPoly<F::Elem>, usize)>) {
    if f.deg() <= 0 {
        return;
    }
    let d = r.derivative(f);
    let mut c = r.gcd(f, &d);
    let mut w = r.exact_div(f, &c).expect("gcd divides");
    let mut i = 1;
    while w.deg() > 0 {
        let y = r.gcd(&w, &c);
        let fac = r.exact_div(&w, &y).expect("gcd divides");
        if fac.deg() > 0 {
            out.push((r.monic(&fac), i * scale));
        }
        c = r.exact_div(&c, &y).expect("gcd divides");
        w = y;
        i += 1;
    }
    if c.deg() > 0 {
        let root = pth_root(r, &c);
        sqf_rec(r, &r.monic(&root), scale * r.base().prime() as usize, out);
    }
}

/// Product of the distinct monic irreducible factors.
pub fn squarefree_part<F: FiniteField>(r: &PolyRing<F>, f: &UniPoly<F::Elem>) -> Result<UniPoly<F::Elem>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(squarefree_decomposition(r, f).iter().fold(r.one(), |acc, (g, _)| r.mul(&acc, g)))
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree<F: FiniteField>(r: &PolyRing<F>, f: &UniPoly<F::Elem>) -> Vec<(UniPoly<F::Elem>, usize)> {
    let q = r.base().order();
    let x = r.x();
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut h = r.rem(&x, &f);
    let mut i = 0;
    while f.deg() >= 2 * (i as i64 + 1) {
        i += 1;
        h = r.pow_mod_big(&h, &q, &f);
        let g = r.gcd(&r.sub(&h, &x), &f);
        if g.deg() > 0 {
            f = r.exact_div(&f, &g).expect("gcd divides");
            h = r.rem(&h, &f);
            out.push((g, i));
        }
    }
    if f.deg() > 0 {
        let d = f.deg() as usize;
        out.push((r.monic(&f), d));
    }
    out
}

/// Split a monic squarefree product of irreducibles of degree `d` (odd characteristic).
pub fn equal_degree<F: FiniteField>(r: &PolyRing<F>, f: &UniPoly<F::Elem>, d: usize) -> Vec<UniPoly<F::Elem>> {
    let mut rng = rng();
    let mut todo = vec![f.clone()];
    let mut done = Vec::new();
    let e: BigUint = (r.base().order().pow(d as u32) - 1u32) >> 1;
    while let Some(g) = todo.pop() {
        let n = g.deg() as usize;
        if n == d {
            done.push(g);
            continue;
        }
        loop {
            let a = r.from_coeffs((0..n).map(|_| r.base().random(&mut rng)).collect());
            if a.deg() <= 0 {
                continue;
            }
            let b = r.sub(&r.pow_mod_big(&a, &e, &g), &r.one());
            let h = r.gcd(&b, &g);
            if h.deg() > 0 && h.deg() < g.deg() {
                let other = r.exact_div(&g, &h).expect("gcd divides");
                todo.push(h);
                todo.push(r.monic(&other));
                break;
            }
        }
    }
    done
}

/// Order used for deterministic output: degree first, then coefficients from the top.
pub fn poly_order_key<E: Clone + Ord>(f: &UniPoly<E>) -> (usize, Vec<E>) {
    (f.coeffs().len(), f.coeffs().iter().rev().cloned().collect())
}

/// Complete factorization into monic irreducibles with multiplicities, plus the leading coefficient.
pub fn factor_uni<F>(r: &PolyRing<F>, f: &UniPoly<F::Elem>) -> Result<(F::Elem, Vec<(UniPoly<F::Elem>, usize)>)>
where
    F: FiniteField,
    F::Elem: Ord,
{
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = r.lc(f);
    let mut out = Vec::new();
    for (g, m) in squarefree_decomposition(r, f) {
        for (h, d) in distinct_degree(r, &g) {
            for irr in equal_degree(r, &h, d) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by(|a, b| poly_order_key(&a.0).cmp(&poly_order_key(&b.0)).then(a.1.cmp(&b.1)));
    Ok((unit, out))
}

/// Univariate factorization over a prime field.
pub fn factor_uni_fp(fp: PrimeField, f: &UniPoly<u64>) -> Result<(u64, Vec<(UniPoly<u64>, usize)>)> {
    factor_uni(&PolyRing::new(fp), f)
}

/// Roots of an irreducible polynomial over F_p inside the canonical field of degree `deg g`.
pub fn roots_of_irreducible(fp: PrimeField, g: &UniPoly<u64>, field: &ExtField) -> Vec<Vec<u64>> {
    let r = PolyRing::new(field.clone());
    let lifted = r.from_coeffs(g.coeffs().iter().map(|&c| field.embed(c)).collect());
    let lifted = r.monic(&lifted);
    debug_assert_eq!(field.prime(), fp.p());
    roots_in_field(&r, &lifted)
}

/// All roots in the coefficient field of a polynomial over a finite field, without multiplicity.
pub fn roots_in_field<F>(r: &PolyRing<F>, f: &UniPoly<F::Elem>) -> Vec<F::Elem>
where
    F: FiniteField,
{
    if f.deg() <= 0 {
        return Vec::new();
    }
    let f = r.monic(f);
    let q = r.base().order();
    let x = r.x();
    let xq = r.pow_mod_big(&x, &q, &f);
    let lin = r.gcd(&r.sub(&xq, &x), &f);
    if lin.deg() <= 0 {
        return Vec::new();
    }
    equal_degree(r, &lin, 1)
        .into_iter()
        .map(|l| r.base().neg(&l.coeffs()[0]))
        .collect()
}

/// Outcome of [`roots_over_closure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureRoots {
    pub roots: Vec<(ExtFieldElem, usize)>,
    /// Irreducible factors of degree above the bound, with multiplicity.
    pub residual: Vec<(UniPoly<u64>, usize)>,
}

impl ClosureRoots {
    pub fn complete(&self) -> bool {
        self.residual.is_empty()
    }
}

/// Roots in the canonical fields F_{p^k}, `k <= k_max`, each in the smallest such field.
pub fn roots_over_closure(fp: PrimeField, f: &UniPoly<u64>, k_max: usize) -> Result<ClosureRoots> {
    let (_, factors) = factor_uni_fp(fp, f)?;
    let mut roots = Vec::new();
    let mut residual = Vec::new();
    for (g, m) in factors {
        let d = g.deg() as usize;
        if d > k_max {
            residual.push((g, m));
            continue;
        }
        let field = ExtField::canonical(fp, d);
        let mut rs: Vec<ExtFieldElem> = roots_of_irreducible(fp, &g, &field)
            .into_iter()
            .map(|c| ExtFieldElem { p: fp.p(), k: d, coords: c })
            .collect();
        rs.sort();
        roots.extend(rs.into_iter().map(|e| (e, m)));
    }
    Ok(ClosureRoots { roots, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ext_field::is_irreducible_fp;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn golden_quadratic_mod_five_is_a_square() {
        let f5 = fp(5);
        let r = PolyRing::new(f5);
        let (u, fs) = factor_uni_fp(f5, &r.from_ints(&[-1, 1, 1])).unwrap();
        assert_eq!(u, 1);
        assert_eq!(fs, vec![(r.from_ints(&[-2, 1]), 2)]);
    }

    #[test]
    fn x2_plus_1_mod_3() {
        let f3 = fp(3);
        let r = PolyRing::new(f3);
        let f = r.from_ints(&[1, 0, 1]);
        let (_, fs) = factor_uni_fp(f3, &f).unwrap();
        assert_eq!(fs, vec![(f.clone(), 1)]);
        let cr = roots_over_closure(f3, &f, 2).unwrap();
        assert!(cr.complete());
        assert_eq!(cr.roots.len(), 2);
        assert!(cr.roots.iter().all(|(e, m)| e.k == 2 && *m == 1));
        let partial = roots_over_closure(f3, &f, 1).unwrap();
        assert!(!partial.complete());
    }

    #[test]
    fn inseparable_squarefree_decomposition() {
        let f3 = fp(3);
        let r = PolyRing::new(f3);
        // (x^3 + 2x + 1)^3 * (x - 1)^2 * x
        let a = r.from_ints(&[1, 2, 0, 1]);
        let f = r.mul(&r.mul(&r.pow(&a, 3), &r.pow(&r.from_ints(&[-1, 1]), 2)), &r.x());
        let d = squarefree_decomposition(&r, &f);
        assert_eq!(d, vec![(r.x(), 1), (r.from_ints(&[-1, 1]), 2), (a.clone(), 3)]);
        let (_, fs) = factor_uni_fp(f3, &f).unwrap();
        let back = fs.iter().fold(r.one(), |acc, (g, m)| r.mul(&acc, &r.pow(g, *m as u64)));
        assert_eq!(back, f);
        assert!(fs.iter().all(|(g, _)| is_irreducible_fp(f3, g)));
    }

    #[test]
    fn factors_over_extension_field() {
        let f = ExtField::canonical(fp(7), 2);
        let r = PolyRing::new(f.clone());
        let x2m3 = r.from_coeffs(vec![f.from_int(-3), f.zero(), f.one()]);
        let (_, fs) = factor_uni(&r, &x2m3).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(g, m)| g.deg() == 1 && *m == 1));
    }
}
