//! Computable commutative rings with unit.
//!
//! Every ring is either *enumerable* (finite, all elements listable in a
//! fixed order) or *sampleable* (infinite, elements drawn from a seeded
//! source). Arithmetic always produces canonical forms, so element equality
//! is structural equality.

mod any;
mod integers;
mod modular;
mod poly;
pub(crate) mod product;
mod special;
mod spec;
mod table;

use std::fmt;
use std::hash::Hash;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub use any::{AnyElem, AnyRing};
pub use integers::Integers;
pub use modular::ModRing;
pub use poly::{Poly, PolyQuotient, PolyRing};
pub use product::ProductRing;
pub use special::{special_elements, SpecialElements};
pub use spec::{make_ring, parse_ideal_gens, split_top_level};
pub use table::FiniteTable;

/// Largest ring that `elements` will materialize.
pub const ENUMERATION_LIMIT: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    Enumerable,
    Sampleable,
}

pub trait CommRing: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Whether `a` is a canonical element of this ring.
    fn contains(&self, a: &Self::Elem) -> bool;

    /// Number of elements, `None` for infinite rings.
    fn cardinality(&self) -> Option<u128>;

    /// All elements in the ring's deterministic enumeration order.
    fn elements(&self) -> Result<Vec<Self::Elem>>;

    /// Draws an element. Finite rings sample uniformly and ignore `bound`;
    /// infinite rings keep absolute value or degree within `bound`.
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: u64) -> Self::Elem;

    /// Every element whose size parameter is at most `bound`. Finite rings
    /// return all elements.
    fn small_elements(&self, bound: u64) -> Result<Vec<Self::Elem>> {
        let _ = bound;
        self.elements()
    }

    /// Size parameter used for exhaustive sweeps over small representatives.
    fn sweep_bound(&self) -> u64 {
        8
    }

    /// Size parameter used when sampling without a caller-chosen bound.
    fn sample_bound(&self) -> u64 {
        100
    }

    /// Infinite rings known to be integral domains.
    fn is_known_domain(&self) -> bool {
        false
    }

    fn is_pid(&self) -> bool {
        false
    }

    /// Decides `a ∈ (gens)` symbolically, where supported.
    fn ideal_membership(&self, gens: &[Self::Elem], a: &Self::Elem) -> Option<bool> {
        let _ = (gens, a);
        None
    }

    /// Decides primality of `(gens)` symbolically, where supported.
    fn ideal_is_prime(&self, gens: &[Self::Elem]) -> Option<bool> {
        let _ = gens;
        None
    }

    /// Canonical ring-spec string.
    fn describe(&self) -> String;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn mode(&self) -> Mode {
        if self.cardinality().is_some() {
            Mode::Enumerable
        } else {
            Mode::Sampleable
        }
    }

    fn is_enumerable(&self) -> bool {
        self.mode() == Mode::Enumerable
    }

    fn check(&self, a: &Self::Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::OwnerMismatch(self.describe()))
        }
    }

    fn checked_add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    fn checked_sub(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub(a, b))
    }

    fn checked_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    fn checked_neg(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.check(a)?;
        Ok(self.neg(a))
    }
}

/// Errors with `NotEnumerable` or `CapExceeded` unless the ring has at most
/// `cap` elements; returns the cardinality.
pub fn require_enumerable<R: CommRing>(ring: &R, cap: u128) -> Result<u128> {
    match ring.cardinality() {
        None => Err(Error::NotEnumerable(ring.describe())),
        Some(n) if n > cap => Err(Error::CapExceeded { size: n, cap }),
        Some(n) => Ok(n),
    }
}

pub(crate) fn enumeration_guard<R: CommRing>(ring: &R) -> Result<u128> {
    require_enumerable(ring, ENUMERATION_LIMIT)
}
