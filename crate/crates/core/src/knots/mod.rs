//! Two-bridge knots: presentations, character curves and Alexander polynomials.

pub mod alexander;
pub mod catalog;
pub mod curve;
pub mod fraction;
pub mod presentation;

pub use alexander::{alexander_poly, knot_determinant, AlexanderPoly};
pub use catalog::{presentation_for, Catalog, CatalogEntry};
pub use curve::{character_curve, relation_matrix, CharacterCurve};
pub use fraction::TwoBridgeFraction;
pub use presentation::{schubert_signs, two_bridge_presentation, Presentation};

use num_bigint::BigInt;

use crate::algebra::bipoly::{BiPoly, BiRing};
use crate::algebra::integers::ZZ;
use crate::algebra::ring::Ring;

/// Equality up to an overall sign and `t ↦ −t`.
pub fn same_curve(p: &BiPoly<BigInt>, q: &BiPoly<BigInt>) -> bool {
    let r = BiRing::new(ZZ);
    let qs = [q.clone(), r.reflect_t(q)];
    qs.iter().any(|q| p == q || *p == r.neg(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factor::roots_in_field;
    use crate::algebra::mat2::{self, Mat2};
    use crate::algebra::poly::PolyRing;
    use crate::algebra::ring::Field;
    use crate::algebra::zpoly;
    use crate::algebra::PrimeField;
    use crate::chebyshev;
    use crate::trace::Letter;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn catalog_curves_match() {
        for e in &Catalog::builtin().entries {
            let c = character_curve(&e.presentation().unwrap()).unwrap();
            assert!(same_curve(&c.p, &e.expected_polynomial().unwrap()), "{}: got {}", e.name, c.to_text());
            assert!(c.p.is_even_in_t(), "{}", e.name);
        }
    }

    #[test]
    fn curve_at_t_zero_is_phi_alpha() {
        let r = BiRing::new(ZZ);
        let zr = PolyRing::new(ZZ);
        for e in &Catalog::builtin().entries {
            let alpha = e.fraction().unwrap().alpha();
            let p = character_curve(&e.presentation().unwrap()).unwrap().p;
            let p0 = r.eval_t(&p, &BigInt::from(0));
            let phi = chebyshev::phi(alpha as i64).unwrap();
            assert!(p0 == phi || p0 == zr.neg(&phi), "{}", e.name);
            // the trefoil curve x = t² − 1 attains equality
            let (dt, dx) = (p.deg_t().unwrap() / 2, p0.degree().unwrap() as u32);
            assert!(dt < dx || (alpha == 3 && dt == dx), "{}", e.name);
        }
    }

    #[test]
    fn schubert_curves_for_catalog_fractions_without_relations() {
        // 11/15 and 7/25 come from the Schubert word directly
        for s in ["11/15", "7/25"] {
            let f = TwoBridgeFraction::parse(s).unwrap();
            let e = Catalog::builtin().find(s).unwrap();
            let p = character_curve(&two_bridge_presentation(&f)).unwrap().p;
            assert!(same_curve(&p, &e.expected_polynomial().unwrap()));
        }
    }

    fn numeric_letter(f: &PrimeField, l: Letter, m: u64, x: u64) -> Mat2<u64> {
        let mi = f.inv(&m).unwrap();
        let c = f.sub(&2, &x);
        let a = Mat2::new(m, 1, 0, mi);
        let b = Mat2::new(m, 0, c, mi);
        match l {
            Letter::A => a,
            Letter::AInv => mat2::adjugate(f, &a),
            Letter::B => b,
            Letter::BInv => mat2::adjugate(f, &b),
        }
    }

    #[test]
    fn points_of_the_curve_are_representations() {
        let f = PrimeField::new(10007).unwrap();
        let pr = PolyRing::new(f);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for e in &Catalog::builtin().entries {
            let pres = e.presentation().unwrap();
            let p = zpoly::reduce_bivar(&character_curve(&pres).unwrap().p, f);
            let br = BiRing::new(f);
            let mut found = 0;
            while found < 100 {
                let m = rng.gen_range(2..10006u64);
                let t = f.add(&m, &f.inv(&m).unwrap());
                for x in roots_in_field(&pr, &br.eval_t(&p, &t)) {
                    if x == 2 || f.add(&x, &2) == f.mul(&t, &t) {
                        continue;
                    }
                    let word = |w: &crate::trace::Word| {
                        w.letters().iter().fold(mat2::identity(&f), |acc, &l| mat2::mul(&f, &acc, &numeric_letter(&f, l, m, x)))
                    };
                    assert_eq!(word(&pres.lhs), word(&pres.rhs), "{} at m={m}, x={x}", e.name);
                    found += 1;
                }
            }
        }
    }
}
