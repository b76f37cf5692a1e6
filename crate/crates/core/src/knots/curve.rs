use num_bigint::BigInt;

use crate::algebra::bipoly::{BiPoly, BiRing, Mono};
use crate::algebra::integers::ZZ;
use crate::algebra::laurent::LaurentRing;
use crate::algebra::mat2::{self, Mat2};
use crate::algebra::poly::PolyRing;
use crate::algebra::ring::Ring;
use crate::algebra::text::format_bipoly;
use crate::algebra::zpoly::{gcd_bivar, normalize_bivar};
use crate::error::{Error, Result};
use crate::trace::{Letter, Word};

use super::presentation::Presentation;

/// The plane curve `P(t, x) = 0`, `t = tr a = tr b`, `x = tr ab⁻¹`, whose union
/// with the line `x = 2` is the character variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterCurve {
    pub p: BiPoly<BigInt>,
    pub presentation: Presentation,
}

impl CharacterCurve {
    pub fn to_text(&self) -> String {
        format_bipoly(&self.p, ["t", "x"])
    }
}

/// `m` times the generic matrices `A = [[m,1],[0,1/m]]`, `B = [[m,0],[2−x,1/m]]`
/// and their inverses, over `ℤ[m, x]` (with `m` stored in the `t` slot).
fn scaled_letter(r: &BiRing<ZZ>, l: Letter) -> Mat2<BiPoly<BigInt>> {
    let m = r.t();
    let m2 = r.mul(&m, &m);
    let c = r.mul(&m, &r.sub(&r.from_int(2), &r.x()));
    match l {
        Letter::A => Mat2::new(m2, m, r.zero(), r.one()),
        Letter::AInv => Mat2::new(r.one(), r.neg(&m), r.zero(), m2),
        Letter::B => Mat2::new(m2, r.zero(), c, r.one()),
        Letter::BInv => Mat2::new(r.one(), r.zero(), r.neg(&c), m2),
    }
}

fn scaled_word(r: &BiRing<ZZ>, w: &Word, pad: usize) -> Mat2<BiPoly<BigInt>> {
    let mut acc = mat2::scale(r, &mat2::identity(r), &r.pow(&r.t(), pad as u64));
    for &l in w.letters() {
        acc = mat2::mul(r, &acc, &scaled_letter(r, l));
    }
    acc
}

/// `m^N (L − R)` evaluated on the generic matrices, `N = max(|L|, |R|)`.
pub fn relation_matrix(pres: &Presentation) -> Mat2<BiPoly<BigInt>> {
    let r = BiRing::new(ZZ);
    let n = pres.lhs.len().max(pres.rhs.len());
    let l = scaled_word(&r, &pres.lhs, n - pres.lhs.len());
    let rr = scaled_word(&r, &pres.rhs, n - pres.rhs.len());
    mat2::sub(&r, &l, &rr)
}

fn entry_gcd(entries: Vec<BiPoly<BigInt>>) -> Option<BiPoly<BigInt>> {
    let r = BiRing::new(ZZ);
    let mut nonzero: Vec<BiPoly<BigInt>> = entries.into_iter().filter(|e| !e.is_zero()).collect();
    nonzero.sort_by_key(|e| e.len());
    let mut it = nonzero.into_iter();
    let mut g = normalize_bivar(&it.next()?);
    for e in it {
        if r.exact_div(&e, &g).is_none() {
            g = gcd_bivar(&g, &e);
        }
    }
    Some(g)
}

/// Defining polynomial of the non-abelian part of the character variety.
///
/// The gcd of the entries of `A·W − W·B` over `ℤ[m, x]` is stripped of powers
/// of `m` and of `x − 2`, then rewritten in `t = m + 1/m`.
pub fn character_curve(pres: &Presentation) -> Result<CharacterCurve> {
    pres.check_knot_group()?;
    let r = BiRing::new(ZZ);
    let e = relation_matrix(pres);
    let mut g = entry_gcd(vec![e.a, e.b, e.c, e.d])
        .ok_or_else(|| Error::Construction(format!("{pres}: the relation holds identically")))?;
    let low = g.terms().map(|(m, _)| m.et).min().unwrap_or(0);
    g = r.from_terms(g.terms().map(|(m, c)| (Mono::new(m.et - low, m.ex), c.clone())));
    let x2 = r.sub(&r.x(), &r.from_int(2));
    while let Some(q) = r.exact_div(&g, &x2) {
        g = q;
    }
    if g.deg_x().unwrap_or(0) == 0 {
        return Err(Error::Construction(format!("{pres}: no non-abelian component (entry gcd {})", format_bipoly(&g, ["m", "x"]))));
    }
    let top = g.deg_t().unwrap_or(0);
    if top % 2 == 1 {
        return Err(Error::Symmetry { residue: format!("odd m-degree {top} in {}", format_bipoly(&g, ["m", "x"])) });
    }
    let xr = PolyRing::new(ZZ);
    let lr = LaurentRing::new(xr.clone());
    let rows = r.to_t_major(&g);
    let laurent = lr.from_terms(rows.coeffs().iter().enumerate().map(|(i, c)| (i as i64 - (top / 2) as i64, c.clone())));
    let sym = lr.symmetrize(&laurent)?;
    let p = normalize_bivar(&r.from_t_major(&sym));
    Ok(CharacterCurve { p, presentation: pres.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse_bipoly;
    use crate::knots::{two_bridge_presentation, TwoBridgeFraction};

    fn curve(s: &str) -> BiPoly<BigInt> {
        character_curve(&Presentation::parse(s).unwrap()).unwrap().p
    }

    #[test]
    fn figure_eight() {
        let p = curve("abABa = bABab");
        assert_eq!(p, parse_bipoly("x^2 + (1 - t^2)*x + t^2 - 1", ["t", "x"]).unwrap());
    }

    #[test]
    fn trefoil() {
        let f = TwoBridgeFraction::parse("1/3").unwrap();
        let p = character_curve(&two_bridge_presentation(&f)).unwrap().p;
        // tr(ab) = 1 on the whole component
        assert_eq!(p, parse_bipoly("x - t^2 + 1", ["t", "x"]).unwrap());
    }

    #[test]
    fn rejects_non_knot_relations() {
        assert!(matches!(character_curve(&Presentation::parse("aa = b").unwrap()), Err(Error::NotKnotGroup(_))));
        assert!(matches!(character_curve(&Presentation::parse("ab = ab").unwrap()), Err(Error::Construction(_))));
    }
}
