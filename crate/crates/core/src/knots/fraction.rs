use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A two-bridge knot `β/α`: `α` odd and at least 3, `0 < β < α`, coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeFraction {
    alpha: u64,
    beta: u64,
}

impl TwoBridgeFraction {
    pub fn new(beta: u64, alpha: u64) -> Result<Self> {
        if alpha < 3 || alpha % 2 == 0 {
            return Err(Error::Fraction(format!("{beta}/{alpha}: denominator must be odd and at least 3")));
        }
        if beta == 0 || beta >= alpha {
            return Err(Error::Fraction(format!("{beta}/{alpha}: numerator must lie strictly between 0 and {alpha}")));
        }
        if beta.gcd(&alpha) != 1 {
            return Err(Error::Fraction(format!("{beta}/{alpha}: numerator and denominator share a factor")));
        }
        Ok(TwoBridgeFraction { alpha, beta })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    /// Parse `β/α`, surrounding whitespace allowed.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (b, a) = s.split_once('/').ok_or_else(|| Error::parse(0, "expected a fraction beta/alpha"))?;
        let num = |part: &str, offset: usize| {
            part.trim().parse::<u64>().map_err(|e| Error::parse(offset, format!("'{}': {e}", part.trim())))
        };
        TwoBridgeFraction::new(num(b, 0)?, num(a, b.len() + 1)?)
    }
}

impl fmt::Display for TwoBridgeFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

impl std::str::FromStr for TwoBridgeFraction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TwoBridgeFraction::parse(s)
    }
}
