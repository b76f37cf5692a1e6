//! SL2 character varieties of two-bridge and torus knots with exact arithmetic,
//! their reductions modulo odd primes, and the primes at which they ramify.

pub mod algebra;
pub mod chebyshev;
pub mod error;
pub mod io;
pub mod knots;
pub mod ramification;
pub mod torus;
pub mod trace;

pub use error::{Error, Result};
