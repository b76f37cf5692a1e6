//! The polynomials `Φ_k`, `Ψ_k ∈ ℤ[x]`, characterized by
//! `Φ_k(λ + 1/λ) = (λ^{k/2} − λ^{−k/2}) / (λ^{1/2} − λ^{−1/2})` (k odd) or
//! `/(λ − λ⁻¹)` (k even), and `Ψ_k(λ + 1/λ) = (λ^{k/2} + λ^{−k/2}) / (λ^{1/2} + λ^{−1/2})`
//! (k odd) or `λ^{k/2} + λ^{−k/2}` (k even).

use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::algebra::integers::ZZ;
use crate::algebra::laurent::LaurentRing;
use crate::algebra::poly::{PolyRing, UniPoly};
use crate::algebra::primes::split_prime_power;
use crate::algebra::ring::Ring;
use crate::algebra::text::format_unipoly;
use crate::algebra::zpoly::{self, ZPoly};
use crate::algebra::PrimeField;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Phi,
    Psi,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Phi => "Phi",
            Kind::Psi => "Psi",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Φ_1..Φ_K` and `Ψ_1..Ψ_K`, built by `P_k = x P_{k−2} − P_{k−4}`.
#[derive(Clone, Debug)]
pub struct PhiPsiTable {
    phi: Vec<ZPoly>,
    psi: Vec<ZPoly>,
}

impl PhiPsiTable {
    pub fn new(bound: usize) -> Self {
        let zr = PolyRing::new(ZZ);
        let bound = bound.max(4);
        let mut phi = vec![zr.from_ints(&[1]), zr.from_ints(&[1]), zr.from_ints(&[1, 1]), zr.from_ints(&[0, 1])];
        let mut psi = vec![zr.from_ints(&[1]), zr.from_ints(&[0, 1]), zr.from_ints(&[-1, 1]), zr.from_ints(&[-2, 0, 1])];
        let x = zr.x();
        for k in 4..bound {
            for seq in [&mut phi, &mut psi] {
                let next = zr.sub(&zr.mul(&x, &seq[k - 2]), &seq[k - 4]);
                seq.push(next);
            }
        }
        PhiPsiTable { phi, psi }
    }

    pub fn bound(&self) -> usize {
        self.phi.len()
    }

    pub fn get(&self, kind: Kind, k: usize) -> Option<&ZPoly> {
        let seq = match kind {
            Kind::Phi => &self.phi,
            Kind::Psi => &self.psi,
        };
        k.checked_sub(1).and_then(|i| seq.get(i))
    }
}

static TABLE: RwLock<Option<Arc<PhiPsiTable>>> = RwLock::new(None);

/// Shared table covering at least `bound`; a larger request replaces it.
pub fn table(bound: usize) -> Arc<PhiPsiTable> {
    if let Some(t) = TABLE.read().unwrap_or_else(|e| e.into_inner()).as_ref() {
        if t.bound() >= bound {
            return t.clone();
        }
    }
    let mut guard = TABLE.write().unwrap_or_else(|e| e.into_inner());
    if let Some(t) = guard.as_ref() {
        if t.bound() >= bound {
            return t.clone();
        }
    }
    let t = Arc::new(PhiPsiTable::new(bound.next_power_of_two()));
    *guard = Some(t.clone());
    t
}

pub fn get(kind: Kind, k: i64) -> Result<ZPoly> {
    if k < 1 {
        return Err(Error::Invalid(format!("{kind} index must be at least 1, got {k}")));
    }
    let k = k as usize;
    Ok(table(k).get(kind, k).expect("table covers k").clone())
}

pub fn phi(k: i64) -> Result<ZPoly> {
    get(Kind::Phi, k)
}

pub fn psi(k: i64) -> Result<ZPoly> {
    get(Kind::Psi, k)
}

/// The second pair of recursions, alternating between odd and even index:
/// `Φ_{2k} = Φ_{2k−1} − Φ_{2k−2}`, `Φ_{2k+1} = (x+2)Φ_{2k} − Φ_{2k−1}`,
/// `Ψ_{2k} = (x+2)Ψ_{2k−1} − Ψ_{2k−2}`, `Ψ_{2k+1} = Ψ_{2k} − Ψ_{2k−1}`.
pub fn alternate_table(bound: usize) -> (Vec<ZPoly>, Vec<ZPoly>) {
    let zr = PolyRing::new(ZZ);
    let x2 = zr.from_ints(&[2, 1]);
    let mut phi = vec![zr.from_ints(&[1]), zr.from_ints(&[1])];
    let mut psi = vec![zr.from_ints(&[1]), zr.from_ints(&[0, 1])];
    for k in 3..=bound.max(2) {
        // index k lives at position k − 1
        let (a, b) = (k - 2, k - 3);
        if k % 2 == 0 {
            phi.push(zr.sub(&phi[a], &phi[b]));
            psi.push(zr.sub(&zr.mul(&x2, &psi[a]), &psi[b]));
        } else {
            phi.push(zr.sub(&zr.mul(&x2, &phi[a]), &phi[b]));
            psi.push(zr.sub(&psi[a], &psi[b]));
        }
    }
    phi.truncate(bound);
    psi.truncate(bound);
    (phi, psi)
}

/// `Φ_k` or `Ψ_k` recovered by symmetrizing its defining Laurent polynomial in `λ`.
pub fn defining_laurent(kind: Kind, k: usize) -> Result<ZPoly> {
    if k == 0 {
        return Err(Error::Invalid("index must be at least 1".into()));
    }
    let lr = LaurentRing::new(ZZ);
    let k = k as i64;
    let terms: Vec<(i64, BigInt)> = match (kind, k % 2) {
        // (λ^k − 1)/(λ − 1) · λ^{(1−k)/2}
        (Kind::Phi, 1) => (0..k).map(|j| (j - (k - 1) / 2, BigInt::from(1))).collect(),
        // (λ^k − 1)/(λ² − 1) · λ^{1−k/2}
        (Kind::Phi, _) => (0..k / 2).map(|j| (2 * j + 1 - k / 2, BigInt::from(1))).collect(),
        // (λ^k + 1)/(λ + 1) · λ^{(1−k)/2}
        (Kind::Psi, 1) => (0..k).map(|j| (j - (k - 1) / 2, BigInt::from(if j % 2 == 0 { 1 } else { -1 }))).collect(),
        (Kind::Psi, _) => vec![(k / 2, BigInt::from(1)), (-k / 2, BigInt::from(1))],
    };
    lr.symmetrize(&lr.from_terms(terms))
}

/// Factor accompanying the `p^r`-th power in the congruence mod `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cofactor {
    One,
    UMinus2,
    USquaredMinus4,
    UPlus2,
}

impl Cofactor {
    pub fn base(self) -> ZPoly {
        let zr = PolyRing::new(ZZ);
        match self {
            Cofactor::One => zr.from_ints(&[1]),
            Cofactor::UMinus2 => zr.from_ints(&[-2, 1]),
            Cofactor::USquaredMinus4 => zr.from_ints(&[-4, 0, 1]),
            Cofactor::UPlus2 => zr.from_ints(&[2, 1]),
        }
    }
}

/// `P_k ≡ P_{k′}^{p^r} · c(u)^{(p^r−1)/2} (mod p)` where `k = p^r k′`, `p ∤ k′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPForm {
    pub kind: Kind,
    pub k: u64,
    pub p: u64,
    pub k_prime: u64,
    pub r: u32,
    pub base: ZPoly,
    /// `p^r`
    pub exponent: u64,
    pub cofactor: Cofactor,
    pub cofactor_exponent: u64,
}

impl ModPForm {
    /// The right-hand side expanded over `𝔽_p`.
    pub fn expand(&self) -> UniPoly<u64> {
        let fp = PrimeField::new(self.p).expect("validated prime");
        let pr = PolyRing::new(fp);
        let base = zpoly::reduce(&self.base, fp);
        let cof = zpoly::reduce(&self.cofactor.base(), fp);
        pr.mul(&pr.pow(&base, self.exponent), &pr.pow(&cof, self.cofactor_exponent))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}_{}(u) = {}_{}(u)", self.kind, self.k, self.kind, self.k_prime);
        if self.exponent > 1 {
            s.push_str(&format!("^{}", self.exponent));
        }
        if self.cofactor != Cofactor::One && self.cofactor_exponent > 0 {
            let c = format_unipoly(&self.cofactor.base(), "u");
            s.push_str(&format!(" * ({c})^{}", self.cofactor_exponent));
        }
        s.push_str(&format!(" mod {}", self.p));
        s
    }
}

pub fn phi_psi_mod_p_form(kind: Kind, k: u64, p: u64) -> Result<ModPForm> {
    PrimeField::new(p)?;
    if k == 0 {
        return Err(Error::Invalid("index must be at least 1".into()));
    }
    let (r, k_prime) = split_prime_power(k, p);
    let exponent = p.pow(r);
    let cofactor = match (r, kind, k % 2 == 1) {
        (0, _, _) => Cofactor::One,
        (_, Kind::Phi, true) => Cofactor::UMinus2,
        (_, Kind::Phi, false) => Cofactor::USquaredMinus4,
        (_, Kind::Psi, true) => Cofactor::UPlus2,
        (_, Kind::Psi, false) => Cofactor::One,
    };
    let cofactor_exponent = if cofactor == Cofactor::One { 0 } else { (exponent - 1) / 2 };
    Ok(ModPForm {
        kind,
        k,
        p,
        k_prime,
        r,
        base: get(kind, k_prime as i64)?,
        exponent,
        cofactor,
        cofactor_exponent,
    })
}

/// One line per index, `Phi_k = ...`, in canonical polynomial text.
pub fn table_text(kinds: &[Kind], upto: usize) -> String {
    let t = table(upto);
    let mut out = String::new();
    for k in 1..=upto {
        let cols: Vec<String> = kinds
            .iter()
            .map(|&kind| format!("{}_{} = {}", kind, k, format_unipoly(t.get(kind, k).expect("covered"), "x")))
            .collect();
        out.push_str(&cols.join("\t"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mat2::{self, random_sl2};
    use crate::algebra::text::parse_unipoly;
    use crate::algebra::ring::Field;
    use crate::algebra::NumberField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> ZPoly {
        parse_unipoly(s, "x").unwrap()
    }

    #[test]
    fn small_table() {
        let rows = [
            ("1", "1"),
            ("1", "x"),
            ("x + 1", "x - 1"),
            ("x", "x^2 - 2"),
            ("x^2 + x - 1", "x^2 - x - 1"),
            ("x^2 - 1", "x^3 - 3*x"),
            ("x^3 + x^2 - 2*x - 1", "x^3 - x^2 - 2*x + 1"),
            ("x^3 - 2*x", "x^4 - 4*x^2 + 2"),
            ("x^4 + x^3 - 3*x^2 - 2*x + 1", "x^4 - x^3 - 3*x^2 + 2*x + 1"),
            ("x^4 - 3*x^2 + 1", "x^5 - 5*x^3 + 5*x"),
        ];
        for (i, (f, g)) in rows.iter().enumerate() {
            let k = i as i64 + 1;
            assert_eq!(phi(k).unwrap(), p(f), "Phi_{k}");
            assert_eq!(psi(k).unwrap(), p(g), "Psi_{k}");
        }
        assert!(phi(0).is_err());
        assert!(psi(-3).is_err());
    }

    #[test]
    fn degrees() {
        for k in 1..=60usize {
            let (dphi, dpsi) = if k % 2 == 1 { ((k - 1) / 2, (k - 1) / 2) } else { (k / 2 - 1, k / 2) };
            assert_eq!(phi(k as i64).unwrap().degree(), Some(dphi));
            assert_eq!(psi(k as i64).unwrap().degree(), Some(dpsi));
        }
    }

    #[test]
    fn phi_25_over_phi_5() {
        let q = zpoly::divide_exact(&phi(25).unwrap(), &phi(5).unwrap()).unwrap();
        assert_eq!(q, p("x^10 - 10*x^8 + 35*x^6 + x^5 - 50*x^4 - 5*x^3 + 25*x^2 + 5*x - 1"));
    }

    #[test]
    fn matches_definition() {
        for k in 1..=20 {
            for kind in [Kind::Phi, Kind::Psi] {
                assert_eq!(defining_laurent(kind, k).unwrap(), get(kind, k as i64).unwrap(), "{kind}_{k}");
            }
        }
    }

    #[test]
    fn recursion_systems_agree() {
        let (aphi, apsi) = alternate_table(60);
        let t = table(60);
        for k in 1..=60 {
            assert_eq!(&aphi[k - 1], t.get(Kind::Phi, k).unwrap(), "Phi_{k}");
            assert_eq!(&apsi[k - 1], t.get(Kind::Psi, k).unwrap(), "Psi_{k}");
        }
    }

    #[test]
    fn doubling_identities() {
        let zr = PolyRing::new(ZZ);
        let two = zr.from_ints(&[2]);
        for k in 1..=30i64 {
            let (f, g, h) = (psi(2 * k).unwrap(), phi(k).unwrap(), psi(k).unwrap());
            let minus = if k % 2 == 1 { zr.from_ints(&[-2, 1]) } else { zr.from_ints(&[-4, 0, 1]) };
            assert_eq!(zr.sub(&f, &two), zr.mul(&minus, &zr.mul(&g, &g)));
            let plus = if k % 2 == 1 { zr.from_ints(&[2, 1]) } else { zr.from_ints(&[1]) };
            assert_eq!(zr.add(&f, &two), zr.mul(&plus, &zr.mul(&h, &h)));
        }
    }

    #[test]
    fn psi_even_is_trace_of_power() {
        let f = PrimeField::new(10007).unwrap();
        let pr = PolyRing::new(f);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let a = random_sl2(&f, &mut rng);
            let k = rng.gen_range(1..=30u64);
            let q = zpoly::reduce(&psi(2 * k as i64).unwrap(), f);
            assert_eq!(pr.eval(&q, &mat2::trace(&f, &a)), mat2::trace(&f, &mat2::pow(&f, &a, k)));
        }
    }

    fn cyclotomic(n: usize) -> ZPoly {
        let zr = PolyRing::new(ZZ);
        let mut c = vec![0i64; n + 1];
        c[0] = -1;
        c[n] = 1;
        let mut f = zr.from_ints(&c);
        for d in (1..n).filter(|d| n % d == 0) {
            f = zpoly::divide_exact(&f, &cyclotomic(d)).unwrap();
        }
        f
    }

    #[test]
    fn roots_are_finite_order_traces() {
        // A = diag(ζ, ζ⁻¹) with ζ a primitive n-th root of unity
        for n in 1..=24usize {
            let h = if n == 1 { PolyRing::new(ZZ).from_ints(&[-1, 1]) } else { cyclotomic(n) };
            let kf = NumberField::new(&h);
            let z = kf.generator();
            let tr = kf.add(&z, &kf.inv(&z).unwrap());
            let zq = PolyRing::new(crate::algebra::QQ);
            for k in 1..=12usize {
                let at = |f: &ZPoly| {
                    let q = PolyRing::new(ZZ).map(f, &zq, |c| num_rational::BigRational::from(c.clone()));
                    let mut acc = kf.zero();
                    for c in q.coeffs().iter().rev() {
                        acc = kf.add(&kf.mul(&acc, &tr), &kf.from_poly(&zq.constant(c.clone())));
                    }
                    kf.is_zero(&acc)
                };
                let scalar = n <= 2;
                assert_eq!(at(&phi(k as i64).unwrap()), k % n == 0 && !scalar, "Phi_{k} at order {n}");
                let minus_id = n % 2 == 0 && k % n == n / 2;
                assert_eq!(at(&psi(k as i64).unwrap()), minus_id && n != 2, "Psi_{k} at order {n}");
            }
        }
    }

    #[test]
    fn mod_p_forms() {
        let f = phi_psi_mod_p_form(Kind::Phi, 9, 3).unwrap();
        assert_eq!((f.k_prime, f.exponent, f.cofactor, f.cofactor_exponent), (1, 9, Cofactor::UMinus2, 4));
        let f5 = PrimeField::new(3).unwrap();
        assert_eq!(f.expand(), zpoly::reduce(&p("(x - 2)^4"), f5));

        let g = phi_psi_mod_p_form(Kind::Psi, 10, 5).unwrap();
        assert_eq!((g.k_prime, g.exponent, g.cofactor), (2, 5, Cofactor::One));
        assert_eq!(g.expand(), zpoly::reduce(&p("x^5"), PrimeField::new(5).unwrap()));

        let h = phi_psi_mod_p_form(Kind::Phi, 25, 5).unwrap();
        assert_eq!(h.expand(), zpoly::reduce(&p("(x - 2)^12"), PrimeField::new(5).unwrap()));

        let triv = phi_psi_mod_p_form(Kind::Phi, 7, 5).unwrap();
        assert_eq!((triv.r, triv.exponent, triv.cofactor), (0, 1, Cofactor::One));
        assert!(phi_psi_mod_p_form(Kind::Phi, 9, 2).is_err());
        assert!(phi_psi_mod_p_form(Kind::Phi, 9, 9).is_err());
    }

    #[test]
    fn mod_p_forms_reproduce_reduction() {
        for p in [3u64, 5, 7, 11, 13] {
            let fp = PrimeField::new(p).unwrap();
            for k in 1..=80u64 {
                for kind in [Kind::Phi, Kind::Psi] {
                    let form = phi_psi_mod_p_form(kind, k, p).unwrap();
                    assert_eq!(form.expand(), zpoly::reduce(&get(kind, k as i64).unwrap(), fp), "{kind}_{k} mod {p}");
                }
            }
        }
    }
}
