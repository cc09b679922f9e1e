use rand::Rng;

use super::spec::split_top_level;
use super::{enumeration_guard, CommRing};
use crate::error::{Error, Result};

/// Direct product with componentwise operations and unit `(1,1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductRing<A, B> {
    left: A,
    right: B,
}

impl<A: CommRing, B: CommRing> ProductRing<A, B> {
    pub fn new(left: A, right: B) -> Result<Self> {
        if left.mode() != right.mode() {
            return Err(Error::ModeMismatch);
        }
        Ok(ProductRing { left, right })
    }

    pub fn left(&self) -> &A {
        &self.left
    }

    pub fn right(&self) -> &B {
        &self.right
    }
}

impl<A: CommRing, B: CommRing> CommRing for ProductRing<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn zero(&self) -> Self::Elem {
        (self.left.zero(), self.right.zero())
    }

    fn one(&self) -> Self::Elem {
        (self.left.one(), self.right.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.add(&a.0, &b.0), self.right.add(&a.1, &b.1))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.left.neg(&a.0), self.right.neg(&a.1))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.mul(&a.0, &b.0), self.right.mul(&a.1, &b.1))
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        self.left.contains(&a.0) && self.right.contains(&a.1)
    }

    fn cardinality(&self) -> Option<u128> {
        self.left.cardinality()?.checked_mul(self.right.cardinality()?)
    }

    fn elements(&self) -> Result<Vec<Self::Elem>> {
        enumeration_guard(self)?;
        let rs = self.right.elements()?;
        Ok(self
            .left
            .elements()?
            .into_iter()
            .flat_map(|a| rs.iter().map(move |b| (a.clone(), b.clone())))
            .collect())
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: u64) -> Self::Elem {
        let a = self.left.sample(rng, bound);
        (a, self.right.sample(rng, bound))
    }

    fn small_elements(&self, bound: u64) -> Result<Vec<Self::Elem>> {
        let rs = self.right.small_elements(bound)?;
        Ok(self
            .left
            .small_elements(bound)?
            .into_iter()
            .flat_map(|a| rs.iter().map(move |b| (a.clone(), b.clone())))
            .collect())
    }

    fn sweep_bound(&self) -> u64 {
        self.left.sweep_bound().min(self.right.sweep_bound())
    }

    fn sample_bound(&self) -> u64 {
        self.left.sample_bound().min(self.right.sample_bound())
    }

    // (g_k) = (first components) x (second components), via the idempotents (1,0), (0,1).
    fn ideal_membership(&self, gens: &[Self::Elem], a: &Self::Elem) -> Option<bool> {
        let lg: Vec<_> = gens.iter().map(|g| g.0.clone()).collect();
        let rg: Vec<_> = gens.iter().map(|g| g.1.clone()).collect();
        Some(self.left.ideal_membership(&lg, &a.0)? && self.right.ideal_membership(&rg, &a.1)?)
    }

    fn describe(&self) -> String {
        let right = self.right.describe();
        if split_top_level(&right, " x ").len() > 1 {
            format!("{} x ({right})", self.left.describe())
        } else {
            format!("{} x {right}", self.left.describe())
        }
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        format!(
            "({},{})",
            self.left.format_elem(&a.0),
            self.right.format_elem(&a.1)
        )
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let (a, b) = parse_pair(s)?;
        Ok((self.left.parse_elem(a)?, self.right.parse_elem(b)?))
    }
}

/// Splits a literal `(a,b)` into its two top-level components.
pub(crate) fn parse_pair(s: &str) -> Result<(&str, &str)> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected a pair literal, got {s:?}")))?;
    match split_top_level(inner, ",").as_slice() {
        [a, b] => Ok((a, b)),
        _ => Err(Error::Parse(format!("expected two components in {s:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, ModRing};

    #[test]
    fn componentwise() {
        let z6 = ModRing::new(6).unwrap();
        let r = ProductRing::new(z6.clone(), z6).unwrap();
        assert_eq!(r.mul(&(1, 2), &(3, 4)), (3, 2));
        assert_eq!(r.one(), (1, 1));
        assert_eq!(r.parse_elem("(1, 5)").unwrap(), (1, 5));
    }

    #[test]
    fn cardinality_and_modes() {
        let r = ProductRing::new(ModRing::new(2).unwrap(), ModRing::new(3).unwrap()).unwrap();
        assert_eq!(r.cardinality(), Some(6));
        assert_eq!(r.elements().unwrap().len(), 6);
        assert_eq!(
            ProductRing::new(ModRing::new(2).unwrap(), Integers::<i64>::new()),
            Err(Error::ModeMismatch)
        );
    }
}
