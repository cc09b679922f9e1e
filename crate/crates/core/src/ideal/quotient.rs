use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;

use super::Ideal;
use crate::error::{Error, Result};
use crate::ring::CommRing;

/// `R/I` over a finite `R`, materialized on coset representatives. Each
/// coset is represented by its first member in `R`'s enumeration order.
#[derive(Debug, Clone)]
pub struct QuotientRing<R: CommRing> {
    base: R,
    ideal: Ideal<R>,
    reps: Arc<Vec<R::Elem>>,
    rep_of: Arc<HashMap<R::Elem, usize>>,
}

impl<R: CommRing> QuotientRing<R> {
    pub fn new(ideal: &Ideal<R>) -> Result<Self> {
        let base = ideal.ring().clone();
        let members = ideal
            .elements()
            .ok_or_else(|| Error::NotEnumerable(base.describe()))?;
        if !ideal.is_proper()? {
            return Err(Error::ImproperIdeal);
        }
        let mut reps = Vec::new();
        let mut rep_of = HashMap::new();
        for a in base.elements()? {
            if rep_of.contains_key(&a) {
                continue;
            }
            let k = reps.len();
            for i in members {
                rep_of.insert(base.add(&a, i), k);
            }
            reps.push(a);
        }
        Ok(QuotientRing {
            base,
            ideal: ideal.clone(),
            reps: Arc::new(reps),
            rep_of: Arc::new(rep_of),
        })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn ideal(&self) -> &Ideal<R> {
        &self.ideal
    }

    /// The representative of the coset `a + I`.
    pub fn reduce(&self, a: &R::Elem) -> R::Elem {
        self.reps[self.rep_of[a]].clone()
    }
}

impl<R: CommRing> PartialEq for QuotientRing<R> {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.ideal == other.ideal
    }
}

impl<R: CommRing> CommRing for QuotientRing<R> {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        self.reduce(&self.base.zero())
    }

    fn one(&self) -> R::Elem {
        self.reduce(&self.base.one())
    }

    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.reduce(&self.base.add(a, b))
    }

    fn neg(&self, a: &R::Elem) -> R::Elem {
        self.reduce(&self.base.neg(a))
    }

    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.reduce(&self.base.mul(a, b))
    }

    fn contains(&self, a: &R::Elem) -> bool {
        self.rep_of
            .get(a)
            .is_some_and(|&k| self.reps[k] == *a)
    }

    fn cardinality(&self) -> Option<u128> {
        Some(self.reps.len() as u128)
    }

    fn elements(&self) -> Result<Vec<R::Elem>> {
        Ok(self.reps.as_ref().clone())
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, _bound: u64) -> R::Elem {
        self.reps[rng.gen_range(0..self.reps.len())].clone()
    }

    fn describe(&self) -> String {
        format!("{}/{}", self.base.describe(), self.ideal.describe())
    }

    fn format_elem(&self, a: &R::Elem) -> String {
        self.base.format_elem(a)
    }

    fn parse_elem(&self, s: &str) -> Result<R::Elem> {
        Ok(self.reduce(&self.base.parse_elem(s)?))
    }
}
