//! Odd primes at which the reduction of a curve can differ from the curve over ℚ.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::bipoly::{BiPoly, BiRing};
use crate::algebra::integers::ZZ;
use crate::algebra::poly::PolyRing;
use crate::algebra::primes::odd_prime_divisors;
use crate::algebra::resultant::{discriminant_z, resultant_bivar, resultant_uni, Var};
use crate::algebra::zpoly::{self, ZPoly};
use crate::error::Result;
use crate::knots::AlexanderPoly;

use super::Config;

pub const DETERMINANT: &str = "alexander_determinant";
pub const ALEXANDER_DISC: &str = "alexander_discriminant";
pub const P0_DISC: &str = "disc_P0";
pub const ELIMINATION: &str = "elimination";
pub const LEADING_FORM: &str = "leading_form";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Candidates {
    /// Odd prime → sources that produced it.
    pub primes: BTreeMap<u64, Vec<String>>,
    /// Cofactors beyond the factoring bounds, kept as opaque candidates.
    pub unfactored: Vec<(String, Vec<String>)>,
    pub notes: Vec<String>,
}

impl Candidates {
    fn add(&mut self, n: &BigInt, source: &str, cfg: &Config) {
        if n.is_zero() {
            self.notes.push(format!("{source}: vanishes"));
            return;
        }
        let (small, big) = odd_prime_divisors(n, &cfg.factor_bounds());
        for p in small {
            let v = self.primes.entry(p).or_default();
            if !v.iter().any(|s| s == source) {
                v.push(source.to_string());
            }
        }
        for b in big {
            let key = b.to_string();
            match self.unfactored.iter_mut().find(|(k, _)| *k == key) {
                Some((_, v)) => v.push(source.to_string()),
                None => self.unfactored.push((key, vec![source.to_string()])),
            }
        }
    }

    /// Tag a prime that was analyzed without being a candidate.
    pub fn force(&mut self, p: u64, source: &str) {
        self.primes.entry(p).or_insert_with(|| vec![source.to_string()]);
    }

    pub fn prime_list(&self) -> Vec<u64> {
        self.primes.keys().copied().collect()
    }
}

fn discriminant_or_one(f: &ZPoly) -> Result<BigInt> {
    if f.deg() < 1 {
        return Ok(BigInt::one());
    }
    discriminant_z(f)
}

/// Primes dividing the extreme coefficients and the discriminant of the top form.
fn leading_form_integer(f: &BiPoly<BigInt>) -> Result<BigInt> {
    let d = f.total_degree().unwrap_or(0);
    let top: Vec<(u32, &BigInt)> = f.terms().filter(|(m, _)| m.total() == d).map(|(m, c)| (m.et, c)).collect();
    let mut n = top.iter().fold(BigInt::zero(), |g, (_, c)| num_integer::Integer::gcd(&g, *c));
    if let (Some(first), Some(last)) = (top.first(), top.last()) {
        n *= first.1 * last.1;
    }
    let jmin = top.iter().map(|(j, _)| *j).min().unwrap_or(0);
    let mut u = vec![BigInt::zero(); (d - jmin) as usize + 1];
    for (j, c) in &top {
        u[(j - jmin) as usize] = (*c).clone();
    }
    let u = PolyRing::new(ZZ).from_coeffs(u);
    if u.deg() >= 2 {
        n *= discriminant_or_one(&zpoly::squarefree_part(&u)?)?;
    }
    Ok(n)
}

/// `Res_t(R1/H, R2/H) · lc(R1) · lc(R2) · lc(H) · disc(H)` with `R1 = Res_x(P, P_x)`,
/// `R2 = Res_x(P, P_t)`, `H` the squarefree part of their gcd.
///
/// A curve even in `t` is first written in `T = t²`: away from `t = 0` its
/// singular points are those of the halved curve, and at `t = 0` they are the
/// repeated roots of `P(0, x)`, which the `disc_P0` source covers.
fn elimination_integer(f: &BiPoly<BigInt>) -> Result<Option<BigInt>> {
    let br = BiRing::new(ZZ);
    let halved = br.halve_t(f);
    let f = halved.as_ref().unwrap_or(f);
    let (fx, ft) = (br.partial_x(f), br.partial_t(f));
    if f.deg_x().unwrap_or(0) == 0 || ft.is_zero() {
        return Ok(None);
    }
    let r1 = resultant_bivar(f, &fx, Var::X)?;
    let r2 = resultant_bivar(f, &ft, Var::X)?;
    if r1.is_zero() || r2.is_zero() {
        return Ok(None);
    }
    let h = zpoly::primitive_part(&zpoly::gcd(&r1, &r2));
    let a = zpoly::divide_exact(&r1, &h).expect("gcd divides");
    let b = zpoly::divide_exact(&r2, &h).expect("gcd divides");
    let mut n = if a.deg() < 1 || b.deg() < 1 { BigInt::one() } else { resultant_uni(&a, &b) };
    n *= r1.lc().unwrap() * r2.lc().unwrap();
    if h.deg() >= 1 {
        let hs = zpoly::squarefree_part(&h)?;
        n *= hs.lc().unwrap() * discriminant_or_one(&hs)?;
    }
    Ok(Some(n))
}

/// Candidate odd primes with their sources.
pub fn candidate_primes(f: &BiPoly<BigInt>, delta: &AlexanderPoly, cfg: &Config) -> Result<Candidates> {
    let mut c = Candidates::default();
    c.add(&delta.determinant(), DETERMINANT, cfg);
    c.add(&discriminant_or_one(&delta.delta)?, ALEXANDER_DISC, cfg);
    let br = BiRing::new(ZZ);
    let p0 = br.eval_t(f, &BigInt::zero());
    if !p0.is_zero() {
        c.add(&discriminant_or_one(&p0)?, P0_DISC, cfg);
    }
    c.add(&leading_form_integer(f)?, LEADING_FORM, cfg);
    let dt = f.deg_t().unwrap_or(0);
    let size = if f.is_even_in_t() { dt / 2 } else { dt } * f.deg_x().unwrap_or(0);
    if size <= cfg.elimination_degree_bound {
        match elimination_integer(f)? {
            Some(n) => c.add(&n, ELIMINATION, cfg),
            None => c.notes.push(format!("{ELIMINATION}: degenerate partial derivatives")),
        }
    } else {
        c.notes.push(format!(
            "{ELIMINATION}: skipped, size {size} exceeds elimination_degree_bound {}",
            cfg.elimination_degree_bound
        ));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::{alexander_poly, Catalog};

    fn cands(name: &str) -> Candidates {
        let e = Catalog::builtin().find(name).unwrap();
        let d = alexander_poly(&e.presentation().unwrap()).unwrap();
        candidate_primes(&e.expected_polynomial().unwrap(), &d, &Config::default()).unwrap()
    }

    #[test]
    fn figure_eight_has_only_five() {
        let c = cands("4_1");
        assert_eq!(c.prime_list(), [5]);
        assert!(c.unfactored.is_empty());
    }

    #[test]
    fn reference_supersets() {
        let c = cands("7_4");
        assert!(c.primes.contains_key(&3) && c.primes.contains_key(&5));
        let c = cands("8_9");
        for p in [5, 7, 23] {
            assert!(c.primes.contains_key(&p), "{p}");
        }
        assert_eq!(c.primes[&7], [ELIMINATION]);
        let tight = Config { elimination_degree_bound: 10, ..Config::default() };
        let e = Catalog::builtin().find("8_9").unwrap();
        let d = alexander_poly(&e.presentation().unwrap()).unwrap();
        let c = candidate_primes(&e.expected_polynomial().unwrap(), &d, &tight).unwrap();
        assert!(!c.primes.contains_key(&7));
        assert!(c.notes.iter().any(|n| n.contains("skipped")));
    }
}
