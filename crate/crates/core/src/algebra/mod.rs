//! Exact arithmetic: integers, rationals, prime and extension fields, dense and
//! sparse polynomials, resultants and factorization over finite fields.

pub mod bifactor;
pub mod bipoly;
pub mod ext_field;
pub mod factor;
pub mod integers;
pub mod laurent;
pub mod mat2;
pub mod numfield;
pub mod poly;
pub mod prime_field;
pub mod primes;
pub mod resultant;
pub mod ring;
pub mod text;
pub mod zpoly;

pub use bipoly::{BiPoly, BiRing, Mono};
pub use ext_field::ExtField;
pub use integers::{QQ, ZZ};
pub use poly::{PolyRing, UniPoly};
pub use prime_field::PrimeField;
pub use ring::{Field, FiniteField, Ring};
pub use factor::ExtFieldElem;
pub use laurent::{LaurentRing, LaurentSym};
pub use numfield::NumberField;
pub use resultant::Var;
pub use zpoly::ZPoly;
pub use mat2::Mat2;
