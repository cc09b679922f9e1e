use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::{require_enumerable, CommRing};
use crate::error::Result;

/// Rings larger than this are not tabulated.
pub const TABLE_LIMIT: u128 = 1 << 12;

/// Addition and multiplication tables of a finite ring, indexed by
/// enumeration order. Subsets of the ring are bitsets over those indices.
#[derive(Debug, Clone)]
pub struct FiniteTable<R: CommRing> {
    ring: R,
    elems: Vec<R::Elem>,
    index: HashMap<R::Elem, usize>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
}

impl<R: CommRing> FiniteTable<R> {
    pub fn new(ring: &R) -> Result<Self> {
        require_enumerable(ring, TABLE_LIMIT)?;
        let elems = ring.elements()?;
        let n = elems.len();
        let index: HashMap<_, _> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let at = |e: &R::Elem| index[e] as u32;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                add.push(at(&ring.add(a, b)));
                mul.push(at(&ring.mul(a, b)));
            }
        }
        let neg = elems.iter().map(|a| at(&ring.neg(a))).collect();
        let zero = index[&ring.zero()];
        let one = index[&ring.one()];
        Ok(FiniteTable {
            ring: ring.clone(),
            elems,
            index,
            add,
            mul,
            neg,
            zero,
            one,
        })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[R::Elem] {
        &self.elems
    }

    pub fn elem(&self, i: usize) -> &R::Elem {
        &self.elems[i]
    }

    pub fn index_of(&self, e: &R::Elem) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.elems.len() + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elems.len() + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn singleton(&self, a: usize) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert(a);
        s
    }

    /// The principal ideal `R·a`.
    pub fn principal(&self, a: usize) -> FixedBitSet {
        let mut s = self.empty_set();
        for r in 0..self.len() {
            s.insert(self.mul(r, a));
        }
        s
    }

    /// `{x + y : x ∈ lhs, y ∈ rhs}`.
    pub fn sum(&self, lhs: &FixedBitSet, rhs: &FixedBitSet) -> FixedBitSet {
        let mut s = self.empty_set();
        for x in lhs.ones() {
            for y in rhs.ones() {
                s.insert(self.add(x, y));
            }
        }
        s
    }

    /// The ideal generated by `gens`: the sum of their principal ideals.
    pub fn closure(&self, gens: &[usize]) -> FixedBitSet {
        gens.iter()
            .fold(self.singleton(self.zero), |acc, &g| self.sum(&acc, &self.principal(g)))
    }

    /// Whether `set` is closed under addition and under multiplication by
    /// every ring element, and contains zero.
    pub fn is_ideal(&self, set: &FixedBitSet) -> bool {
        set.contains(self.zero)
            && set
                .ones()
                .all(|x| set.ones().all(|y| set.contains(self.add(x, y))))
            && set
                .ones()
                .all(|x| (0..self.len()).all(|r| set.contains(self.mul(r, x))))
    }

    /// A generating subset of the ideal `set`, chosen greedily in
    /// enumeration order, with redundant generators removed afterwards.
    pub fn generators_of(&self, set: &FixedBitSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.singleton(self.zero);
        for x in set.ones() {
            if !span.contains(x) {
                span = self.sum(&span, &self.principal(x));
                gens.push(x);
            }
        }
        let mut k = 0;
        while k < gens.len() {
            let others: Vec<usize> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &g)| g)
                .collect();
            if self.closure(&others).contains(gens[k]) {
                gens.remove(k);
            } else {
                k += 1;
            }
        }
        gens
    }

    pub fn to_elems(&self, set: &FixedBitSet) -> Vec<R::Elem> {
        set.ones().map(|i| self.elems[i].clone()).collect()
    }

    pub fn to_set<'a>(&self, elems: impl IntoIterator<Item = &'a R::Elem>) -> FixedBitSet
    where
        R::Elem: 'a,
    {
        let mut s = self.empty_set();
        for e in elems {
            if let Some(i) = self.index_of(e) {
                s.insert(i);
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ModRing;

    #[test]
    fn principal_ideals_of_z6() {
        let t = FiniteTable::new(&ModRing::new(6).unwrap()).unwrap();
        let two = t.principal(2);
        assert_eq!(two.ones().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert!(t.is_ideal(&two));
        let whole = t.closure(&[2, 3]);
        assert_eq!(whole.count_ones(..), 6);
        assert_eq!(t.generators_of(&whole), vec![1]);
    }

    #[test]
    fn non_ideal_detected() {
        let t = FiniteTable::new(&ModRing::new(6).unwrap()).unwrap();
        let mut s = t.singleton(0);
        s.insert(1);
        assert!(!t.is_ideal(&s));
    }
}
