use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::bipoly::{BiPoly, BiRing};
use crate::algebra::integers::ZZ;
use crate::algebra::ring::Ring;
use crate::algebra::text::{format_terms, parse_terms};
use crate::error::Result;

pub const VAR_NAMES: [&str; 3] = ["s", "u", "v"];

/// Integer polynomial in `s = tr a`, `u = tr b`, `v = tr ab`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TriplePoly {
    terms: BTreeMap<[u32; 3], BigInt>,
}

impl TriplePoly {
    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &BigInt)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Evaluate in any ring through the canonical integer map.
    pub fn eval<R: Ring>(&self, r: &R, s: &R::Elem, u: &R::Elem, v: &R::Elem) -> R::Elem {
        self.terms.iter().fold(r.zero(), |acc, (e, c)| {
            let m = r.mul(&r.pow(s, e[0] as u64), &r.mul(&r.pow(u, e[1] as u64), &r.pow(v, e[2] as u64)));
            r.add(&acc, &r.mul(&r.from_bigint(c), &m))
        })
    }

    /// Terms by descending total degree, then descending exponents of `s`, `u`, `v`.
    pub fn to_text(&self) -> String {
        let mut keys: Vec<&[u32; 3]> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then(b.cmp(a))
        });
        format_terms(keys.into_iter().map(|k| (k.to_vec(), &self.terms[k])), &VAR_NAMES)
    }

    pub fn parse(s: &str) -> Result<TriplePoly> {
        Ok(TripleRing.from_terms(parse_terms(s, &VAR_NAMES)?.into_iter().map(|(e, c)| ([e[0], e[1], e[2]], c))))
    }
}

impl std::fmt::Display for TriplePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The ring `ℤ[s, u, v]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TripleRing;

impl TripleRing {
    pub fn from_terms(&self, it: impl IntoIterator<Item = ([u32; 3], BigInt)>) -> TriplePoly {
        let mut terms: BTreeMap<[u32; 3], BigInt> = BTreeMap::new();
        for (e, c) in it {
            *terms.entry(e).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        TriplePoly { terms }
    }

    pub fn var(&self, i: usize) -> TriplePoly {
        let mut e = [0; 3];
        e[i] = 1;
        self.from_terms([(e, BigInt::one())])
    }

    pub fn s(&self) -> TriplePoly {
        self.var(0)
    }
    pub fn u(&self) -> TriplePoly {
        self.var(1)
    }
    pub fn v(&self) -> TriplePoly {
        self.var(2)
    }

    pub fn scale(&self, f: &TriplePoly, c: i64) -> TriplePoly {
        self.from_terms(f.terms.iter().map(|(e, v)| (*e, v * c)))
    }
}

impl Ring for TripleRing {
    type Elem = TriplePoly;

    fn zero(&self) -> TriplePoly {
        TriplePoly::default()
    }
    fn one(&self) -> TriplePoly {
        self.from_int(1)
    }
    fn from_int(&self, n: i64) -> TriplePoly {
        self.from_terms([([0, 0, 0], BigInt::from(n))])
    }
    fn from_bigint(&self, n: &BigInt) -> TriplePoly {
        self.from_terms([([0, 0, 0], n.clone())])
    }
    fn add(&self, a: &TriplePoly, b: &TriplePoly) -> TriplePoly {
        self.from_terms(a.terms.iter().chain(&b.terms).map(|(e, c)| (*e, c.clone())))
    }
    fn sub(&self, a: &TriplePoly, b: &TriplePoly) -> TriplePoly {
        self.from_terms(a.terms.iter().map(|(e, c)| (*e, c.clone())).chain(b.terms.iter().map(|(e, c)| (*e, -c))))
    }
    fn neg(&self, a: &TriplePoly) -> TriplePoly {
        TriplePoly { terms: a.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    fn mul(&self, a: &TriplePoly, b: &TriplePoly) -> TriplePoly {
        self.from_terms(a.terms.iter().flat_map(|(ea, ca)| {
            b.terms.iter().map(move |(eb, cb)| ([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb))
        }))
    }
    fn is_zero(&self, a: &TriplePoly) -> bool {
        a.terms.is_empty()
    }
    fn exact_div(&self, a: &TriplePoly, b: &TriplePoly) -> Option<TriplePoly> {
        // only division by integer constants is needed
        if b.terms.len() == 1 {
            if let Some(c) = b.terms.get(&[0, 0, 0]) {
                let mut out = Vec::new();
                for (e, v) in &a.terms {
                    if (v % c) != BigInt::zero() {
                        return None;
                    }
                    out.push((*e, v / c));
                }
                return Some(self.from_terms(out));
            }
        }
        None
    }
}

/// Substitute `s = u = t` and `v = t² − x`, so that `x = tr(ab⁻¹)`.
pub fn to_knot_coords(q: &TriplePoly) -> BiPoly<BigInt> {
    let br = BiRing::new(ZZ);
    let t = br.t();
    let v = br.sub(&br.mul(&t, &t), &br.x());
    q.terms.iter().fold(br.zero(), |acc, (e, c)| {
        let m = br.mul(&br.pow(&t, (e[0] + e[1]) as u64), &br.pow(&v, e[2] as u64));
        br.add(&acc, &br.scale(&m, c))
    })
}
