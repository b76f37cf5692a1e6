//! Canonical polynomial text: `x^2 + (-1)*t^2*x + x + t^2 + (-1)`.
//!
//! Terms are emitted by descending exponent of the last variable, then of the
//! earlier ones; coefficient `1` is omitted in front of a monomial and negative
//! coefficients are parenthesized. The parser accepts that form and, more
//! generally, sums, differences, products, integer powers and parentheses.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bipoly::{BiPoly, BiRing, Mono};
use super::integers::ZZ;
use super::poly::{PolyRing, UniPoly};
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 4096;
const MAX_TERMS: usize = 200_000;
const MAX_COEFF_BITS: u64 = 100_000;

/// Render terms given as exponent vectors (one entry per name) in the order supplied.
pub fn format_terms<'a>(terms: impl IntoIterator<Item = (Vec<u32>, &'a BigInt)>, names: &[&str]) -> String {
    let mut out = Vec::new();
    for (exps, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mono: Vec<String> = exps
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
            .collect();
        let mono = mono.join("*");
        let coef = if c.is_negative() { format!("({c})") } else { c.to_string() };
        out.push(if mono.is_empty() {
            coef
        } else if c.is_one() {
            mono
        } else {
            format!("{coef}*{mono}")
        });
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out.join(" + ")
    }
}

/// `names[0]` is the `t` variable, `names[1]` the `x` variable.
pub fn format_bipoly(f: &BiPoly<BigInt>, names: [&str; 2]) -> String {
    format_terms(f.terms().rev().map(|(m, c)| (vec![m.et, m.ex], c)), &names)
}

pub fn format_unipoly(f: &UniPoly<BigInt>, name: &str) -> String {
    format_terms(f.coeffs().iter().enumerate().rev().map(|(i, c)| (vec![i as u32], c)), &[name])
}

/// Sparse polynomial in any number of variables, used only while parsing.
type Sparse = BTreeMap<Vec<u32>, BigInt>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
}

fn sp_add(a: &Sparse, b: &Sparse, sign: i32) -> Sparse {
    let mut r = a.clone();
    for (m, c) in b {
        let e = r.entry(m.clone()).or_insert_with(BigInt::zero);
        if sign > 0 {
            *e += c;
        } else {
            *e -= c;
        }
    }
    r.retain(|_, c| !c.is_zero());
    r
}

fn sp_mul(a: &Sparse, b: &Sparse) -> Result<Sparse> {
    if a.len().saturating_mul(b.len()) > MAX_TERMS * 4 {
        return Err(Error::Capacity("polynomial too large to parse".into()));
    }
    let mut r = Sparse::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            if m.iter().any(|&e| e > MAX_EXPONENT) {
                return Err(Error::Capacity("exponent too large".into()));
            }
            if ca.bits() + cb.bits() > MAX_COEFF_BITS {
                return Err(Error::Capacity("coefficient too large".into()));
            }
            *r.entry(m).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    r.retain(|_, c| !c.is_zero());
    if r.len() > MAX_TERMS {
        return Err(Error::Capacity("polynomial too large to parse".into()));
    }
    Ok(r)
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn constant(&self, c: BigInt) -> Sparse {
        let mut r = Sparse::new();
        if !c.is_zero() {
            r.insert(vec![0; self.names.len()], c);
        }
        r
    }

    fn expr(&mut self, depth: usize) -> Result<Sparse> {
        if depth > 64 {
            return Err(Error::parse(self.pos, "nesting too deep"));
        }
        let mut acc = Sparse::new();
        let mut sign = 1;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = -1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term(depth)?;
            acc = sp_add(&acc, &t, sign);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<Sparse> {
        let mut acc = self.power(depth)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.power(depth)?;
            acc = sp_mul(&acc, &f)?;
        }
        Ok(acc)
    }

    fn power(&mut self, depth: usize) -> Result<Sparse> {
        let base = self.primary(depth)?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let n = self.integer()?;
        let e: u32 = u32::try_from(&n)
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| Error::parse(start, "exponent out of range"))?;
        if base.len() > 1 && e > 64 {
            return Err(Error::Capacity("power of a sum is too large".into()));
        }
        let mut acc = self.constant(BigInt::one());
        for _ in 0..e {
            acc = sp_mul(&acc, &base)?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        if self.pos - start > 10_000 {
            return Err(Error::Capacity("integer literal too long".into()));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse::<BigInt>().expect("digits parse"))
    }

    fn primary(&mut self, depth: usize) -> Result<Sparse> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr(depth + 1)?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.constant(n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let ident = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                let idx = self
                    .names
                    .iter()
                    .position(|n| *n == ident)
                    .ok_or_else(|| Error::parse(start, format!("unknown variable '{ident}'")))?;
                let mut m = vec![0; self.names.len()];
                m[idx] = 1;
                Ok(Sparse::from([(m, BigInt::one())]))
            }
            Some(c) => Err(Error::parse(self.pos, format!("unexpected character '{}'", c as char))),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

/// Parse a polynomial in the given variables into `(exponents, coefficient)` pairs.
pub fn parse_terms(s: &str, names: &[&str]) -> Result<Vec<(Vec<u32>, BigInt)>> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, names };
    let e = p.expr(0)?;
    if p.peek().is_some() {
        return Err(Error::parse(p.pos, "trailing input"));
    }
    Ok(e.into_iter().collect())
}

pub fn parse_bipoly(s: &str, names: [&str; 2]) -> Result<BiPoly<BigInt>> {
    let terms = parse_terms(s, &names)?;
    Ok(BiRing::new(ZZ).from_terms(terms.into_iter().map(|(m, c)| (Mono::new(m[0], m[1]), c))))
}

pub fn parse_unipoly(s: &str, name: &str) -> Result<UniPoly<BigInt>> {
    let terms = parse_terms(s, &[name])?;
    let n = terms.iter().map(|(m, _)| m[0] as usize + 1).max().unwrap_or(0);
    let mut c = vec![BigInt::zero(); n];
    for (m, v) in terms {
        c[m[0] as usize] = v;
    }
    Ok(PolyRing::new(ZZ).from_coeffs(c))
}
