//! Primes at which the reduction of a character curve differs from the curve
//! over ℚ: component splitting, new singular points, collapse of abelian
//! points and tangency with the abelian line.

pub mod analysis;
pub mod candidates;
pub mod infinity;
pub mod report;
pub mod singular;

pub use analysis::{abelian_tangency, analyze_prime, y_decomposition_counts, Baseline, KnotContext, Phenomenon, PrimeReport, Tangency, YCounts};
pub use candidates::{candidate_primes, Candidates};
pub use infinity::{points_at_infinity, InfinityPoint};
pub use report::{ramify, PrimeSelection, RamificationReport};
pub use singular::{singular_points_mod_p, singular_points_q, ModPSingular, RationalSingular};

use serde::{Deserialize, Serialize};

use crate::algebra::primes::FactorBounds;
use crate::error::{Error, Result};

/// Work limits shared by the analysis, read from the `--config` file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Largest extension degree in which singular points and roots are listed.
    pub k_max: usize,
    /// Total-degree limit for bivariate factorization.
    pub degree_bound: u32,
    /// The elimination integer is computed when `deg_t · deg_x` is at most this.
    pub elimination_degree_bound: u32,
    pub trial_division_bound: u64,
    pub rho_iterations: u64,
    pub max_factor_bits: u64,
}

impl Default for Config {
    fn default() -> Self {
        let fb = FactorBounds::default();
        Config {
            k_max: 6,
            degree_bound: 64,
            elimination_degree_bound: 128,
            trial_division_bound: fb.trial,
            rho_iterations: fb.rho_iterations,
            max_factor_bits: fb.max_bits,
        }
    }
}

impl Config {
    pub fn from_json(s: &str) -> Result<Config> {
        let c: Config = serde_json::from_str(s).map_err(|e| Error::parse(0, format!("config: {e}")))?;
        if c.k_max == 0 || c.k_max > 64 {
            return Err(Error::Invalid(format!("k_max must be in 1..=64, got {}", c.k_max)));
        }
        if c.trial_division_bound > 100_000_000 {
            return Err(Error::Invalid("trial_division_bound above 10^8".into()));
        }
        Ok(c)
    }

    pub fn factor_bounds(&self) -> FactorBounds {
        FactorBounds { trial: self.trial_division_bound, rho_iterations: self.rho_iterations, max_bits: self.max_factor_bits }
    }
}
