use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::bipoly::BiPoly;
use crate::algebra::text::parse_bipoly;
use crate::error::{Error, Result};

use super::fraction::TwoBridgeFraction;
use super::presentation::{two_bridge_presentation, Presentation};

const BUILTIN: &str = include_str!("../../data/catalog.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub fraction: String,
    pub name: String,
    /// Explicit relation `lhs = rhs`; the Schubert word is used when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    #[serde(rename = "expected_P")]
    pub expected_p: String,
    pub expected_ramified_primes: Vec<u64>,
    /// Irreducible components of `P` over ℚ.
    pub components: usize,
    /// `"0"` for characteristic zero, otherwise the prime.
    #[serde(default)]
    pub expected_y_counts: BTreeMap<String, u64>,
    #[serde(default)]
    pub notes: String,
}

impl CatalogEntry {
    pub fn fraction(&self) -> Result<TwoBridgeFraction> {
        TwoBridgeFraction::parse(&self.fraction)
    }

    pub fn presentation(&self) -> Result<Presentation> {
        match &self.relation {
            Some(r) => Presentation::parse(r),
            None => Ok(two_bridge_presentation(&self.fraction()?)),
        }
    }

    pub fn expected_polynomial(&self) -> Result<BiPoly<BigInt>> {
        parse_bipoly(&self.expected_p, ["t", "x"])
    }

    pub fn expected_y_count(&self, p: u64) -> Option<u64> {
        self.expected_y_counts.get(&p.to_string()).copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn parse(json: &str) -> Result<Catalog> {
        let entries: Vec<CatalogEntry> = serde_json::from_str(json).map_err(|e| Error::parse(0, format!("catalog: {e}")))?;
        for e in &entries {
            e.fraction()?;
            e.presentation()?;
            e.expected_polynomial()?;
        }
        Ok(Catalog { entries })
    }

    pub fn load(path: &std::path::Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Catalog::parse(&text)
    }

    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::parse(BUILTIN).expect("bundled catalog is valid"))
    }

    /// Look up by fraction (`7/25`) or by name (`8_9`).
    pub fn find(&self, key: &str) -> Option<&CatalogEntry> {
        let key = key.trim();
        let frac = TwoBridgeFraction::parse(key).ok();
        self.entries.iter().find(|e| e.name == key || (frac.is_some() && e.fraction().ok() == frac))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.entries).expect("catalog serializes")
    }
}

/// The catalog presentation for a known fraction, else the Schubert presentation.
pub fn presentation_for(f: &TwoBridgeFraction) -> Presentation {
    Catalog::builtin()
        .entries
        .iter()
        .find(|e| e.fraction().ok().as_ref() == Some(f))
        .and_then(|e| e.presentation().ok())
        .unwrap_or_else(|| two_bridge_presentation(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_round_trips() {
        let c = Catalog::builtin();
        assert_eq!(c.entries.len(), 6);
        assert_eq!(Catalog::parse(&c.to_json()).unwrap(), *c);
        assert_eq!(c.find("8_9").unwrap().fraction, "7/25");
        assert_eq!(c.find("4/5").unwrap().name, "4_1");
        assert!(c.find("5/7").is_none());
    }

    #[test]
    fn malformed_catalogs_are_rejected() {
        assert!(Catalog::parse("{}").is_err());
        assert!(Catalog::parse(r#"[{"fraction": "2/4", "name": "x", "expected_P": "x", "expected_ramified_primes": [], "components": 1}]"#).is_err());
        assert!(Catalog::parse(r#"[{"fraction": "1/3", "name": "x", "expected_P": "x +", "expected_ramified_primes": [], "components": 1}]"#).is_err());
    }
}
