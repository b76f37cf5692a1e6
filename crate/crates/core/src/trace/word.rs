use std::fmt;

use crate::error::{Error, Result};

/// A generator or its inverse: `a`, `A`, `b`, `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    pub fn is_inverse(self) -> bool {
        matches!(self, Letter::AInv | Letter::BInv)
    }

    /// The positive generator underlying this letter.
    pub fn generator(self) -> Letter {
        if self.is_inverse() {
            self.inverse()
        } else {
            self
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::B => 'b',
            Letter::BInv => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::AInv),
            'b' => Some(Letter::B),
            'B' => Some(Letter::BInv),
            _ => None,
        }
    }
}

/// A freely reduced word in the free group on `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for (i, c) in s.char_indices() {
            if c == '1' && s.len() == 1 {
                break;
            }
            letters.push(Letter::from_char(c).ok_or_else(|| Error::parse(i, format!("unexpected letter '{c}'")))?);
        }
        Ok(Word::new(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn pow(&self, n: usize) -> Word {
        Word::new(std::iter::repeat_n(self.letters.iter().copied(), n).flatten())
    }

    /// Rotation by `k` letters: `w[k..] w[..k]`, freely reduced.
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        Word::new(self.letters[k..].iter().chain(&self.letters[..k]).copied())
    }

    /// Remove inverse pairs across the ends.
    pub fn cyclically_reduce(&self) -> Word {
        let mut l = &self.letters[..];
        while l.len() >= 2 && l[0] == l[l.len() - 1].inverse() {
            l = &l[1..l.len() - 1];
        }
        Word { letters: l.to_vec() }
    }

    /// Sum of exponents of `a` and of `b`.
    pub fn exponent_sums(&self) -> (i64, i64) {
        let mut ea = 0;
        let mut eb = 0;
        for l in &self.letters {
            match l {
                Letter::A => ea += 1,
                Letter::AInv => ea -= 1,
                Letter::B => eb += 1,
                Letter::BInv => eb -= 1,
            }
        }
        (ea, eb)
    }

    /// Representative of the conjugacy class of `w` and `w⁻¹`: the least cyclic rotation of either.
    pub fn trace_class(&self) -> Word {
        let w = self.cyclically_reduce();
        let mut best = w.clone();
        for cand in [&w, &w.inverse()] {
            for k in 0..cand.len() {
                let r = Word { letters: cand.letters[k..].iter().chain(&cand.letters[..k]).copied().collect() };
                if r < best {
                    best = r;
                }
            }
        }
        best
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces_and_round_trips() {
        assert_eq!(Word::parse("abBA").unwrap(), Word::empty());
        let w = Word::parse("abAB").unwrap();
        assert_eq!(w.to_string(), "abAB");
        assert_eq!(w.inverse().to_string(), "baBA");
        assert!(Word::parse("abx").is_err());
    }

    #[test]
    fn trace_class_is_conjugation_and_inversion_invariant() {
        let w = Word::parse("abbAB").unwrap();
        let g = Word::parse("bA").unwrap();
        let conj = g.concat(&w).concat(&g.inverse());
        assert_eq!(conj.trace_class(), w.trace_class());
        assert_eq!(w.inverse().trace_class(), w.trace_class());
        assert_eq!(Word::parse("Aba").unwrap().trace_class(), Word::parse("b").unwrap());
    }
}
