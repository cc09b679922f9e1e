//! Univariate polynomials over a prime field, and their quotients by a
//! monic modulus.

use std::fmt;

use rand::Rng;

use super::modular::is_prime_u64;
use super::{enumeration_guard, CommRing};
use crate::error::{Error, Result};

/// Coefficients in `[0, p)`, lowest degree first, with no trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly(Vec<u64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: u64, p: u64) -> Self {
        Self::from_coeffs(vec![c % p])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly(vec![0, 1])
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> u64 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly, p: u64) -> Poly {
        let n = self.0.len().max(other.0.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self.0.get(k).copied().unwrap_or(0);
                let b = other.0.get(k).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self, p: u64) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn sub(&self, other: &Poly, p: u64) -> Poly {
        self.add(&other.neg(p), p)
    }

    pub fn scale(&self, c: u64, p: u64) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&a| mul_mod(a, c, p)).collect())
    }

    pub fn mul(&self, other: &Poly, p: u64) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Poly::from_coeffs(out)
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Poly, p: u64) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = inv_mod(divisor.lead(), p);
        let mut rem = self.0.clone();
        let mut quot = vec![0u64; self.0.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = mul_mod(rem[k], inv, p);
            if c != 0 {
                quot[k - dd] = c;
                for (j, &b) in divisor.0.iter().enumerate() {
                    let t = mul_mod(c, b, p);
                    rem[k - dd + j] = (rem[k - dd + j] + p - t) % p;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Poly, p: u64) -> Poly {
        self.div_rem(divisor, p).1
    }

    pub fn monic(&self, p: u64) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(inv_mod(self.lead(), p), p)
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Poly, p: u64) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p)
    }

    pub fn is_irreducible(&self, p: u64) -> bool {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        (1..=d / 2).all(|k| monic_of_degree(k, p).all(|g| !self.rem(&g, p).is_zero()))
    }

    /// Parses a polynomial literal in `x`, reducing coefficients mod `p`.
    pub fn parse(s: &str, p: u64) -> Result<Poly> {
        let err = || Error::Parse(format!("bad polynomial literal {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (idx, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && idx > 0 {
                terms.push(&s[start..idx]);
                start = idx;
            }
        }
        terms.push(&s[start..]);

        let mut acc = Poly::zero();
        for term in terms {
            let (negative, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(term)),
            };
            if body.is_empty() {
                return Err(err());
            }
            let (coef, degree) = match body.find('x') {
                None => (body.parse::<u128>().map_err(|_| err())?, 0usize),
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    let coef = if c.is_empty() {
                        1
                    } else {
                        c.parse::<u128>().map_err(|_| err())?
                    };
                    let tail = &body[pos + 1..];
                    let degree = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .ok_or_else(err)?
                            .parse::<usize>()
                            .map_err(|_| err())?
                    };
                    (coef, degree)
                }
            };
            let mut c = (coef % p as u128) as u64;
            if negative {
                c = (p - c) % p;
            }
            let mut coeffs = vec![0u64; degree + 1];
            coeffs[degree] = c;
            acc = acc.add(&Poly::from_coeffs(coeffs), p);
        }
        Ok(acc)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime: a^(p-2)
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Coefficient vector of `index` read in base `p`, `len` digits.
fn digits(mut index: u128, p: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = (index % p as u128) as u64;
            index /= p as u128;
            d
        })
        .collect()
}

fn monic_of_degree(k: usize, p: u64) -> impl Iterator<Item = Poly> {
    let count = (p as u128).pow(k as u32);
    (0..count).map(move |idx| {
        let mut c = digits(idx, p, k);
        c.push(1);
        Poly::from_coeffs(c)
    })
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// The polynomial ring `GF(p)[x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    p: u64,
}

impl PolyRing {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(PolyRing { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn gcd_all(&self, gens: &[Poly]) -> Poly {
        gens.iter().fold(Poly::zero(), |g, x| g.gcd(x, self.p))
    }
}

impl CommRing for PolyRing {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }

    fn one(&self) -> Poly {
        Poly::constant(1, self.p)
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b, self.p)
    }

    fn neg(&self, a: &Poly) -> Poly {
        a.neg(self.p)
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b, self.p)
    }

    fn contains(&self, a: &Poly) -> bool {
        a.0.last() != Some(&0) && a.0.iter().all(|&c| c < self.p)
    }

    fn cardinality(&self) -> Option<u128> {
        None
    }

    fn elements(&self) -> Result<Vec<Poly>> {
        Err(Error::NotEnumerable(self.describe()))
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: u64) -> Poly {
        let len = bound as usize + 1;
        Poly::from_coeffs((0..len).map(|_| rng.gen_range(0..self.p)).collect())
    }

    fn small_elements(&self, bound: u64) -> Result<Vec<Poly>> {
        let len = bound as usize + 1;
        let count = (self.p as u128).pow(len as u32);
        Ok((0..count)
            .map(|idx| Poly::from_coeffs(digits(idx, self.p, len)))
            .collect())
    }

    fn sweep_bound(&self) -> u64 {
        4
    }

    fn sample_bound(&self) -> u64 {
        16
    }

    fn is_known_domain(&self) -> bool {
        true
    }

    fn is_pid(&self) -> bool {
        true
    }

    fn ideal_membership(&self, gens: &[Poly], a: &Poly) -> Option<bool> {
        let g = self.gcd_all(gens);
        Some(if g.is_zero() {
            a.is_zero()
        } else {
            a.rem(&g, self.p).is_zero()
        })
    }

    fn ideal_is_prime(&self, gens: &[Poly]) -> Option<bool> {
        let g = self.gcd_all(gens);
        Some(g.is_zero() || g.is_irreducible(self.p))
    }

    fn describe(&self) -> String {
        format!("GF({})[x]", self.p)
    }

    fn format_elem(&self, a: &Poly) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<Poly> {
        Poly::parse(s, self.p)
    }
}

/// The quotient `GF(p)[x]/(f)` by a monic `f` of degree at least one.
/// Canonical elements are remainders modulo `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyQuotient {
    p: u64,
    modulus: Poly,
}

impl PolyQuotient {
    pub fn new(p: u64, modulus: Poly) -> Result<Self> {
        check_prime(p)?;
        if modulus.0.iter().any(|&c| c >= p) {
            return Err(Error::Parse("modulus coefficients must be reduced".into()));
        }
        match modulus.degree() {
            Some(d) if d >= 1 && modulus.lead() == 1 => Ok(PolyQuotient { p, modulus }),
            _ => Err(Error::Parse(format!(
                "quotient polynomial {modulus} must be monic of degree at least 1"
            ))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }
}

impl CommRing for PolyQuotient {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }

    fn one(&self) -> Poly {
        Poly::constant(1, self.p).rem(&self.modulus, self.p)
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b, self.p)
    }

    fn neg(&self, a: &Poly) -> Poly {
        a.neg(self.p)
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b, self.p).rem(&self.modulus, self.p)
    }

    fn contains(&self, a: &Poly) -> bool {
        a.0.len() <= self.degree() && a.0.last() != Some(&0) && a.0.iter().all(|&c| c < self.p)
    }

    fn cardinality(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.degree() as u32)
    }

    fn elements(&self) -> Result<Vec<Poly>> {
        let n = enumeration_guard(self)?;
        let d = self.degree();
        Ok((0..n)
            .map(|idx| Poly::from_coeffs(digits(idx, self.p, d)))
            .collect())
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, _bound: u64) -> Poly {
        Poly::from_coeffs((0..self.degree()).map(|_| rng.gen_range(0..self.p)).collect())
    }

    fn describe(&self) -> String {
        format!("GF({})[x]/({})", self.p, self.modulus)
    }

    fn format_elem(&self, a: &Poly) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<Poly> {
        Ok(Poly::parse(s, self.p)?.rem(&self.modulus, self.p))
    }
}
