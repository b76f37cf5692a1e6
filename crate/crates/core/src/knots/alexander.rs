use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::integers::ZZ;
use crate::algebra::poly::PolyRing;
use crate::algebra::text::format_unipoly;
use crate::algebra::zpoly::ZPoly;
use crate::error::{Error, Result};
use crate::trace::Letter;

use super::presentation::Presentation;

/// Alexander polynomial in `T`, normalized to lowest degree 0 and positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderPoly {
    pub delta: ZPoly,
}

impl AlexanderPoly {
    pub fn to_text(&self) -> String {
        format_unipoly(&self.delta, "T")
    }

    pub fn eval(&self, t: i64) -> BigInt {
        PolyRing::new(ZZ).eval(&self.delta, &BigInt::from(t))
    }

    /// `|Δ(−1)|`
    pub fn determinant(&self) -> BigInt {
        self.eval(-1).abs()
    }

    pub fn is_symmetric(&self) -> bool {
        let c = self.delta.coeffs();
        let rev: Vec<BigInt> = c.iter().rev().cloned().collect();
        let neg: Vec<BigInt> = rev.iter().map(|v| -v).collect();
        c == rev.as_slice() || c == neg.as_slice()
    }
}

/// Abelianized Fox derivative `∂r/∂a` of the relator, with `a, b ↦ T`.
pub fn alexander_poly(pres: &Presentation) -> Result<AlexanderPoly> {
    pres.check_knot_group()?;
    let rel = pres.relator();
    let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut height = 0i64;
    for &l in rel.letters() {
        match l {
            Letter::A => *acc.entry(height).or_insert_with(BigInt::zero) += 1,
            Letter::AInv => *acc.entry(height - 1).or_insert_with(BigInt::zero) -= 1,
            _ => {}
        }
        height += if l.is_inverse() { -1 } else { 1 };
    }
    acc.retain(|_, c| !c.is_zero());
    let (Some(&lo), Some(&hi)) = (acc.keys().next(), acc.keys().next_back()) else {
        return Err(Error::NotKnotGroup(format!("relator {rel} has vanishing Fox derivative")));
    };
    let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize + 1];
    for (k, c) in acc {
        coeffs[(k - lo) as usize] = c;
    }
    if coeffs.last().is_some_and(|c| c.is_negative()) {
        coeffs.iter_mut().for_each(|c| *c = -&*c);
    }
    Ok(AlexanderPoly { delta: PolyRing::new(ZZ).from_coeffs(coeffs) })
}

/// `|Δ(−1)|`, the order of the first homology of the double branched cover.
pub fn knot_determinant(pres: &Presentation) -> Result<BigInt> {
    Ok(alexander_poly(pres)?.determinant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::resultant::discriminant_z;
    use crate::knots::{two_bridge_presentation, TwoBridgeFraction};
    use num_traits::One;

    fn delta(s: &str) -> String {
        alexander_poly(&Presentation::parse(s).unwrap()).unwrap().to_text()
    }

    #[test]
    fn small_knots() {
        assert_eq!(delta("aba = bab"), "T^2 + (-1)*T + 1");
        assert_eq!(delta("abABa = bABab"), "T^2 + (-3)*T + 1");
        let f = TwoBridgeFraction::parse("7/25").unwrap();
        let d = alexander_poly(&two_bridge_presentation(&f)).unwrap();
        assert_eq!(d.determinant(), BigInt::from(25));
        assert_eq!(discriminant_z(&d.delta).unwrap(), BigInt::from(13225));
    }

    #[test]
    fn determinant_is_alpha() {
        for alpha in (3..=99u64).step_by(2) {
            for beta in 1..alpha {
                let Ok(f) = TwoBridgeFraction::new(beta, alpha) else { continue };
                let d = alexander_poly(&two_bridge_presentation(&f)).unwrap();
                assert_eq!(d.determinant(), BigInt::from(alpha), "{f}");
                assert!(d.eval(1).abs().is_one());
                assert!(d.is_symmetric());
            }
        }
    }

    #[test]
    fn rejects_bad_exponent_sum() {
        assert!(matches!(alexander_poly(&Presentation::parse("aab = b").unwrap()), Err(Error::NotKnotGroup(_))));
    }
}
