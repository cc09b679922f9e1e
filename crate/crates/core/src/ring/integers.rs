use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};
use rand::Rng;

use super::CommRing;
use crate::error::{Error, Result};

/// Exact signed integer scalar usable as the carrier of `Z`.
pub trait IntegerScalar:
    Integer + Signed + Clone + Hash + Ord + fmt::Debug + fmt::Display + FromPrimitive + FromStr
{
}

impl<T> IntegerScalar for T where
    T: Integer + Signed + Clone + Hash + Ord + fmt::Debug + fmt::Display + FromPrimitive + FromStr
{
}

/// The ring of integers. Fixed-width carriers overflow like their primitive;
/// use `BigInt` for exact arithmetic.
pub struct Integers<T> {
    _scalar: PhantomData<T>,
}

impl<T> Integers<T> {
    pub fn new() -> Self {
        Integers {
            _scalar: PhantomData,
        }
    }
}

impl<T> Default for Integers<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for Integers<T> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<T> PartialEq for Integers<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T> fmt::Debug for Integers<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Z")
    }
}

fn gcd_all<T: IntegerScalar>(gens: &[T]) -> T {
    gens.iter().fold(T::zero(), |g, x| g.gcd(x))
}

fn is_prime_scalar<T: IntegerScalar>(n: &T) -> bool {
    let n = n.abs();
    let two = T::one() + T::one();
    if n < two {
        return false;
    }
    let mut d = two;
    while d.clone() * d.clone() <= n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d = d + T::one();
    }
    true
}

impl<T: IntegerScalar> CommRing for Integers<T> {
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }

    fn one(&self) -> T {
        T::one()
    }

    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }

    fn neg(&self, a: &T) -> T {
        -a.clone()
    }

    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }

    fn contains(&self, _: &T) -> bool {
        true
    }

    fn cardinality(&self) -> Option<u128> {
        None
    }

    fn elements(&self) -> Result<Vec<T>> {
        Err(Error::NotEnumerable(self.describe()))
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: u64) -> T {
        let b = bound.min(i64::MAX as u64) as i64;
        T::from_i64(rng.gen_range(-b..=b)).expect("i64 fits every integer scalar")
    }

    fn small_elements(&self, bound: u64) -> Result<Vec<T>> {
        let b = bound.min(i64::MAX as u64) as i64;
        Ok((-b..=b).filter_map(T::from_i64).collect())
    }

    fn is_known_domain(&self) -> bool {
        true
    }

    fn is_pid(&self) -> bool {
        true
    }

    fn ideal_membership(&self, gens: &[T], a: &T) -> Option<bool> {
        let g = gcd_all(gens);
        Some(if g.is_zero() {
            a.is_zero()
        } else {
            a.is_multiple_of(&g)
        })
    }

    fn ideal_is_prime(&self, gens: &[T]) -> Option<bool> {
        let g = gcd_all(gens);
        Some(g.is_zero() || is_prime_scalar(&g))
    }

    fn describe(&self) -> String {
        "Z".to_string()
    }

    fn format_elem(&self, a: &T) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<T> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    }
}
