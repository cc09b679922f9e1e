//! Ideals of computable rings.
//!
//! Over a finite ring an ideal is materialized as its full element set, and
//! two ideals are equal exactly when their element sets are. Over the
//! supported infinite rings only the generators are kept and membership is
//! decided by the ring (gcd and divisibility).

mod lattice;
mod quotient;

use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ring::{CommRing, FiniteTable};

pub use lattice::{
    all_ideals, annihilator, contains_regular_element, is_maximal, is_prime, spectrum,
    SpecPoint, DEFAULT_LATTICE_CAP,
};
pub use quotient::QuotientRing;

#[derive(Debug)]
struct Members<E> {
    ordered: Vec<E>,
    lookup: HashSet<E>,
}

#[derive(Debug, Clone)]
pub struct Ideal<R: CommRing> {
    ring: R,
    generators: Vec<R::Elem>,
    members: Option<Arc<Members<R::Elem>>>,
}

impl<R: CommRing> Ideal<R> {
    /// The ideal generated by `gens`. Finite owners get the element set
    /// materialized by closure.
    pub fn new(ring: &R, gens: Vec<R::Elem>) -> Result<Self> {
        for g in &gens {
            ring.check(g)?;
        }
        if ring.is_enumerable() {
            let table = FiniteTable::new(ring)?;
            let idx: Vec<usize> = gens.iter().map(|g| table.index_of(g).unwrap()).collect();
            let set = table.closure(&idx);
            debug_assert!(table.is_ideal(&set));
            Ok(Self::materialized(&table, gens, &set))
        } else {
            Ok(Ideal {
                ring: ring.clone(),
                generators: gens,
                members: None,
            })
        }
    }

    pub fn zero(ring: &R) -> Result<Self> {
        Self::new(ring, Vec::new())
    }

    pub fn whole(ring: &R) -> Result<Self> {
        Self::new(ring, vec![ring.one()])
    }

    /// Wraps an index set already known to be an ideal, choosing a small
    /// generating subset.
    pub fn from_set(table: &FiniteTable<R>, set: &FixedBitSet) -> Self {
        let gens = table
            .generators_of(set)
            .into_iter()
            .map(|i| table.elem(i).clone())
            .collect();
        Self::materialized(table, gens, set)
    }

    /// The ideal generated by the elements at `gens`.
    pub fn from_indices(table: &FiniteTable<R>, gens: &[usize]) -> Self {
        let set = table.closure(gens);
        let gens = gens.iter().map(|&i| table.elem(i).clone()).collect();
        Self::materialized(table, gens, &set)
    }

    fn materialized(table: &FiniteTable<R>, gens: Vec<R::Elem>, set: &FixedBitSet) -> Self {
        let ordered = table.to_elems(set);
        let lookup = ordered.iter().cloned().collect();
        Ideal {
            ring: table.ring().clone(),
            generators: gens,
            members: Some(Arc::new(Members { ordered, lookup })),
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn generators(&self) -> &[R::Elem] {
        &self.generators
    }

    /// Elements in the owner's enumeration order, when materialized.
    pub fn elements(&self) -> Option<&[R::Elem]> {
        self.members.as_ref().map(|m| m.ordered.as_slice())
    }

    pub fn is_materialized(&self) -> bool {
        self.members.is_some()
    }

    /// Number of elements, when materialized.
    pub fn size(&self) -> Option<usize> {
        self.members.as_ref().map(|m| m.ordered.len())
    }

    fn require_elements(&self) -> Result<&[R::Elem]> {
        self.elements()
            .ok_or_else(|| Error::NotEnumerable(self.ring.describe()))
    }

    pub fn contains(&self, a: &R::Elem) -> Result<bool> {
        self.ring.check(a)?;
        match &self.members {
            Some(m) => Ok(m.lookup.contains(a)),
            None => self
                .ring
                .ideal_membership(&self.generators, a)
                .ok_or_else(|| Error::UndecidableMembership(self.ring.describe())),
        }
    }

    pub fn is_proper(&self) -> Result<bool> {
        Ok(!self.contains(&self.ring.one())?)
    }

    pub fn is_zero(&self) -> Result<bool> {
        match self.elements() {
            Some(e) => Ok(e.len() == 1),
            None => {
                let zero = self.ring.zero();
                Ok(self.generators.iter().all(|g| *g == zero))
            }
        }
    }

    fn same_owner(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::OwnerMismatch(other.ring.describe()))
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.same_owner(other)?;
        match self.elements() {
            Some(elems) => elems.iter().try_fold(true, |acc, e| Ok(acc && other.contains(e)?)),
            None => self
                .generators
                .iter()
                .try_fold(true, |acc, g| Ok(acc && other.contains(g)?)),
        }
    }

    /// Element-set equality, decided through generators when not materialized.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        let gens = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect();
        Self::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        if !self.ring.is_enumerable() {
            return Err(Error::NotEnumerable(self.ring.describe()));
        }
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| self.ring.mul(a, b)))
            .collect();
        Self::new(&self.ring, gens)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        let table = FiniteTable::new(&self.ring)?;
        let mut set = table.to_set(self.require_elements()?);
        set.intersect_with(&table.to_set(other.require_elements()?));
        Ok(Self::from_set(&table, &set))
    }

    pub fn to_set(&self, table: &FiniteTable<R>) -> Result<FixedBitSet> {
        Ok(table.to_set(self.require_elements()?))
    }

    /// `(g1,g2,...)`, or `(0)` for the zero ideal with no generators.
    pub fn describe(&self) -> String {
        if self.generators.is_empty() {
            return "(0)".to_string();
        }
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| self.ring.format_elem(g))
            .collect();
        format!("({})", gens.join(","))
    }
}

impl<R: CommRing> PartialEq for Ideal<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.ring != other.ring {
            return false;
        }
        match (&self.members, &other.members) {
            (Some(a), Some(b)) => a.lookup == b.lookup,
            _ => self.equals(other).unwrap_or(self.generators == other.generators),
        }
    }
}
