use std::fmt;

use crate::error::{Error, Result};
use crate::trace::{Letter, Word};

use super::fraction::TwoBridgeFraction;

/// A one-relator group on `a`, `b` given by the relation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Presentation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Presentation { lhs, rhs }
    }

    /// `lhs · rhs⁻¹`, freely reduced.
    pub fn relator(&self) -> Word {
        self.lhs.concat(&self.rhs.inverse())
    }

    /// Sum of all exponents of the relator; zero when `a` and `b` can both be meridians.
    pub fn meridian_exponent_sum(&self) -> i64 {
        let (ea, eb) = self.relator().exponent_sums();
        ea + eb
    }

    pub fn check_knot_group(&self) -> Result<()> {
        let s = self.meridian_exponent_sum();
        if s != 0 {
            return Err(Error::NotKnotGroup(format!("relator {} has exponent sum {s} when a, b map to T", self.relator())));
        }
        Ok(())
    }

    /// `lhs = rhs` or a single relator word; whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (l, r) = match compact.split_once('=') {
            Some((l, r)) => (l, r),
            None => (compact.as_str(), ""),
        };
        if r.contains('=') {
            return Err(Error::parse(s.len(), "more than one '='"));
        }
        let word = |w: &str, offset: usize| -> Result<Word> {
            if w.is_empty() || w == "1" {
                return Ok(Word::empty());
            }
            Word::parse(w).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::parse(pos + offset, msg),
                other => other,
            })
        };
        Ok(Presentation::new(word(l, 0)?, word(r, l.len() + 1)?))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |w: &Word| if w.is_empty() { "1".to_string() } else { w.to_string() };
        write!(f, "{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

impl std::str::FromStr for Presentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Presentation::parse(s)
    }
}

/// Signs `ε_i = (−1)^{⌊iβ/α⌋}`, `i = 1..α−1`; an even `β` is first replaced by `β − α`.
pub fn schubert_signs(f: &TwoBridgeFraction) -> Vec<i8> {
    let alpha = f.alpha() as i64;
    let mut beta = f.beta() as i64;
    if beta % 2 == 0 {
        beta -= alpha;
    }
    (1..alpha).map(|i| if (i * beta).div_euclid(alpha) % 2 == 0 { 1 } else { -1 }).collect()
}

/// `⟨a, b | a w = w b⟩` with `w = b^{ε₁} a^{ε₂} b^{ε₃} ⋯`.
pub fn two_bridge_presentation(f: &TwoBridgeFraction) -> Presentation {
    let w = Word::new(schubert_signs(f).into_iter().enumerate().map(|(i, e)| {
        let l = if i % 2 == 0 { Letter::B } else { Letter::A };
        if e > 0 {
            l
        } else {
            l.inverse()
        }
    }));
    Presentation::new(Word::new(std::iter::once(Letter::A).chain(w.letters().iter().copied())), w.concat(&Word::parse("b").expect("letter")))
}
