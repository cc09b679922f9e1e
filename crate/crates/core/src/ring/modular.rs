use rand::Rng;

use super::{enumeration_guard, CommRing};
use crate::error::{Error, Result};

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residues modulo `n`, canonical in `[0, n)`. Also serves as the prime
/// field `GF(p)`, which differs only in how it is written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModRing {
    modulus: u64,
    field: bool,
}

impl ModRing {
    pub fn new(modulus: u64) -> Result<Self> {
        match modulus {
            0 => Err(Error::Parse("modulus must be at least 2".into())),
            1 => Err(Error::ZeroRing),
            _ => Ok(ModRing {
                modulus,
                field: false,
            }),
        }
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(ModRing {
            modulus: p,
            field: true,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_field_syntax(&self) -> bool {
        self.field
    }

    pub(crate) fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.modulus as i128) as u64
    }
}

impl CommRing for ModRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn contains(&self, a: &u64) -> bool {
        *a < self.modulus
    }

    fn cardinality(&self) -> Option<u128> {
        Some(self.modulus as u128)
    }

    fn elements(&self) -> Result<Vec<u64>> {
        enumeration_guard(self)?;
        Ok((0..self.modulus).collect())
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, _bound: u64) -> u64 {
        rng.gen_range(0..self.modulus)
    }

    fn describe(&self) -> String {
        if self.field {
            format!("GF({})", self.modulus)
        } else {
            format!("Z/{}", self.modulus)
        }
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<u64> {
        let v: i128 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))?;
        Ok(self.reduce_i128(v))
    }
}
