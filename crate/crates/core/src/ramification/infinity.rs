//! Points of the projective closure on the line at infinity.
//!
//! With `P` of total degree `d`, the top form `F(t, x)` cuts the line `z = 0`;
//! each root of `F` is a point `(t:x:0)` whose intersection multiplicity with
//! the line is the root's multiplicity. The point multiplicity is the order of
//! the homogenized polynomial in the affine chart around the point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::algebra::bipoly::{BiPoly, BiRing};
use crate::algebra::ext_field::ExtField;
use crate::algebra::factor::factor_uni_fp;
use crate::algebra::integers::ZZ;
use crate::algebra::numfield::NumberField;
use crate::algebra::poly::PolyRing;
use crate::algebra::prime_field::PrimeField;
use crate::algebra::ring::Ring;
use crate::algebra::text::format_unipoly;
use crate::algebra::zpoly::{self, lift_symmetric};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfinityPoint {
    /// `(t:x:0)`; a non-rational `r` stands for any root of `minimal_polynomial`.
    pub point: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_polynomial: Option<String>,
    /// Number of conjugate points described by this entry.
    pub count: usize,
    pub intersection_multiplicity: usize,
    pub multiplicity: usize,
    pub smooth: bool,
}

/// Order at `(r:1:0)` of the homogenization, in the chart `x = 1` with local
/// coordinates `(t − r, z)`.
fn chart_order<K: Ring>(k: &K, terms: &[(u32, u32, K::Elem)], d: u32, r: &K::Elem) -> u32 {
    let kb = BiRing::new(k.clone());
    let s = kb.add(&kb.t(), &kb.constant(r.clone()));
    let z = kb.x();
    let g = terms.iter().fold(kb.zero(), |acc, (a, b, c)| {
        let m = kb.mul(&kb.pow(&s, *a as u64), &kb.pow(&z, (d - a - b) as u64));
        kb.add(&acc, &kb.scale(&m, c))
    });
    g.terms().map(|(m, _)| m.total()).min().unwrap_or(0)
}

fn push(out: &mut Vec<InfinityPoint>, point: String, minpoly: Option<String>, count: usize, im: usize, order: u32) {
    out.push(InfinityPoint {
        point,
        minimal_polynomial: minpoly,
        count,
        intersection_multiplicity: im,
        multiplicity: order as usize,
        smooth: order == 1,
    });
}

/// Points at infinity over the algebraic closure of ℚ (`characteristic == 0`) or of 𝔽_p.
pub fn points_at_infinity(f: &BiPoly<BigInt>, characteristic: u64) -> Result<Vec<InfinityPoint>> {
    if characteristic == 0 {
        return over_q(f);
    }
    let fp = PrimeField::new(characteristic)?;
    over_fp(fp, &zpoly::reduce_bivar(f, fp))
}

fn top_degree<E>(f: &BiPoly<E>) -> Result<u32> {
    match f.total_degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::Degenerate("constant curve".into())),
        Some(d) => Ok(d),
    }
}

fn over_q(f: &BiPoly<BigInt>) -> Result<Vec<InfinityPoint>> {
    let d = top_degree(f)?;
    let zr = PolyRing::new(ZZ);
    let mut u = vec![BigInt::from(0); d as usize + 1];
    for (m, c) in f.terms().filter(|(m, _)| m.total() == d) {
        u[m.et as usize] = c.clone();
    }
    let u = zr.from_coeffs(u);
    let mut out = Vec::new();
    let at_x0 = d as usize - u.deg() as usize;
    if at_x0 > 0 {
        push(&mut out, "(1:0:0)".into(), None, 1, at_x0, d - f.deg_t().unwrap_or(0));
    }
    if u.deg() > 0 {
        for (g, m) in zpoly::factor(&u)?.1 {
            let k = NumberField::new(&g);
            let terms: Vec<(u32, u32, Vec<BigRational>)> = f.terms().map(|(mo, c)| (mo.et, mo.ex, k.from_integer(c))).collect();
            let order = chart_order(&k, &terms, d, &k.generator());
            if g.deg() == 1 {
                let r = BigRational::new(-g.coeffs()[0].clone(), g.coeffs()[1].clone());
                push(&mut out, format!("({r}:1:0)"), None, 1, m, order);
            } else {
                let g = if g.lc().is_some_and(|c| c.is_negative()) { zr.neg(&g) } else { g };
                push(&mut out, "(r:1:0)".into(), Some(format_unipoly(&g, "r")), g.deg() as usize, m, order);
            }
        }
    }
    Ok(out)
}

fn over_fp(fp: PrimeField, f: &BiPoly<u64>) -> Result<Vec<InfinityPoint>> {
    let d = top_degree(f)?;
    let tr = PolyRing::new(fp);
    let mut u = vec![0u64; d as usize + 1];
    for (m, c) in f.terms().filter(|(m, _)| m.total() == d) {
        u[m.et as usize] = *c;
    }
    let u = tr.from_coeffs(u);
    let mut out = Vec::new();
    let at_x0 = d as usize - u.deg() as usize;
    if at_x0 > 0 {
        push(&mut out, "(1:0:0)".into(), None, 1, at_x0, d - f.deg_t().unwrap_or(0));
    }
    if u.deg() > 0 {
        for (g, m) in factor_uni_fp(fp, &u)?.1 {
            let k = ExtField::with_modulus(fp, g.clone())?;
            let terms: Vec<(u32, u32, Vec<u64>)> = f.terms().map(|(mo, c)| (mo.et, mo.ex, k.embed(*c))).collect();
            let order = chart_order(&k, &terms, d, &k.generator());
            if g.deg() == 1 {
                let r = fp.neg(&g.coeffs()[0]);
                push(&mut out, format!("({r}:1:0)"), None, 1, m, order);
            } else {
                let text = format_unipoly(&lift_symmetric(&g, fp.p()), "r");
                push(&mut out, "(r:1:0)".into(), Some(text), g.deg() as usize, m, order);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse_bipoly;
    use crate::knots::Catalog;

    fn cat(name: &str) -> BiPoly<BigInt> {
        Catalog::builtin().find(name).unwrap().expected_polynomial().unwrap()
    }

    fn summary(v: &[InfinityPoint]) -> Vec<(String, usize, usize, bool)> {
        v.iter().map(|p| (p.point.clone(), p.intersection_multiplicity, p.multiplicity, p.smooth)).collect()
    }

    #[test]
    fn line_through_two() {
        let f = parse_bipoly("x - 2", ["t", "x"]).unwrap();
        assert_eq!(summary(&points_at_infinity(&f, 0).unwrap()), [("(1:0:0)".to_string(), 1, 1, true)]);
    }

    #[test]
    fn figure_eight_points_are_smooth() {
        let got = summary(&points_at_infinity(&cat("4_1"), 0).unwrap());
        assert_eq!(got, [("(1:0:0)".to_string(), 1, 1, true), ("(0:1:0)".to_string(), 2, 1, true)]);
    }

    #[test]
    fn stevedore_points() {
        // top form t^4 x^2: both points are singular on the projective closure
        let got = summary(&points_at_infinity(&cat("6_1"), 0).unwrap());
        assert_eq!(got, [("(1:0:0)".to_string(), 2, 2, false), ("(0:1:0)".to_string(), 4, 2, false)]);
        assert_eq!(summary(&points_at_infinity(&cat("6_1"), 3).unwrap()), got);
    }

    #[test]
    fn conjugate_points() {
        let f = parse_bipoly("t^2 + x^2 - 1", ["t", "x"]).unwrap();
        let q = points_at_infinity(&f, 0).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].minimal_polynomial.as_deref(), Some("r^2 + 1"));
        assert_eq!(q[0].count, 2);
        assert!(q[0].smooth);
        // r^2 + 1 splits mod 5
        assert_eq!(points_at_infinity(&f, 5).unwrap().len(), 2);
    }
}
