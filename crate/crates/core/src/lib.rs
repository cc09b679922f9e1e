//! Amalgamated duplication of a commutative ring along an ideal.
//!
//! For a ring `R` and ideal `I`, `R ⋈ I = {(r, r+i) : r ∈ R, i ∈ I}` is a
//! subring of `R × R`. This crate builds these rings over finite and
//! infinite bases, computes their ideals and spectra, checks ring-theoretic
//! properties, and verifies homological statements about them.

pub mod duplication;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod properties;
pub mod ring;

pub use duplication::{DupElem, DupRing};
pub use error::{Error, Result};
pub use ideal::Ideal;
pub use ring::{AnyElem, AnyRing, CommRing, Integers, ModRing, Poly, PolyQuotient, PolyRing, ProductRing};

/// Integers with arbitrary-precision elements.
pub type Z = Integers<num_bigint::BigInt>;
/// Integers with machine-word elements.
pub type Z64 = Integers<i64>;
