//! The amalgamated duplication `R ⋈ I = {(r, r+i) : r ∈ R, i ∈ I}`.
//!
//! Elements are stored as `(r, i)` with `i ∈ I`, so every stored value is a
//! valid element; the pair view `(r, r+i)` is only used for input and output.

mod idealization;
mod primes;

use std::collections::HashSet;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, QuotientRing};
use crate::ring::{enumeration_guard, product::parse_pair, CommRing};

pub use idealization::{iso_dup_idealization, Idealization};
pub use primes::{descend_prime, lift_prime, Descent, DescentCase, LiftCase, PrimeLift};

/// Element `(r, r + offset)` of a duplication.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DupElem<E> {
    pub base: E,
    pub offset: E,
}

impl<E> DupElem<E> {
    pub fn new(base: E, offset: E) -> Self {
        DupElem { base, offset }
    }
}

/// Selects one of the two projections `R ⋈ I → R` and its kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Component {
    /// `π₁(r, s) = r`, kernel `O₁ = {(0, i)}`.
    First,
    /// `π₂(r, s) = s`, kernel `O₂ = {(i, 0)}`.
    Second,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DupRing<R: CommRing> {
    base: R,
    ideal: Ideal<R>,
}

impl<R: CommRing> DupRing<R> {
    /// `R ⋈ I`; `I` must be a proper ideal of `R` with decidable membership.
    pub fn new(base: &R, ideal: &Ideal<R>) -> Result<Self> {
        if ideal.ring() != base {
            return Err(Error::OwnerMismatch(base.describe()));
        }
        if !ideal.is_proper()? {
            return Err(Error::ImproperIdeal);
        }
        Ok(DupRing {
            base: base.clone(),
            ideal: ideal.clone(),
        })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn ideal(&self) -> &Ideal<R> {
        &self.ideal
    }

    /// `(r, s)` with `s - r ∈ I`.
    pub fn from_pair(&self, r: R::Elem, s: R::Elem) -> Result<DupElem<R::Elem>> {
        self.base.check(&r)?;
        self.base.check(&s)?;
        let offset = self.base.sub(&s, &r);
        if !self.ideal.contains(&offset)? {
            return Err(Error::OwnerMismatch(self.describe()));
        }
        Ok(DupElem::new(r, offset))
    }

    pub fn to_pair(&self, e: &DupElem<R::Elem>) -> (R::Elem, R::Elem) {
        (e.base.clone(), self.base.add(&e.base, &e.offset))
    }

    /// `(r, r)`.
    pub fn diagonal(&self, r: R::Elem) -> DupElem<R::Elem> {
        DupElem::new(r, self.base.zero())
    }

    /// `(0, i)`.
    pub fn o1_elem(&self, i: R::Elem) -> DupElem<R::Elem> {
        DupElem::new(self.base.zero(), i)
    }

    /// `(i, 0)`.
    pub fn o2_elem(&self, i: R::Elem) -> DupElem<R::Elem> {
        let neg = self.base.neg(&i);
        DupElem::new(i, neg)
    }

    pub fn project(&self, which: Component, e: &DupElem<R::Elem>) -> R::Elem {
        match which {
            Component::First => e.base.clone(),
            Component::Second => self.base.add(&e.base, &e.offset),
        }
    }

    /// `φ(r, r+i) = r`.
    pub fn retraction(&self, e: &DupElem<R::Elem>) -> R::Elem {
        e.base.clone()
    }

    /// `O₁ = {(0, i) : i ∈ I}`, generated by `(0, g)` for each generator `g` of `I`.
    pub fn o1(&self) -> Result<Ideal<Self>> {
        let gens = self
            .ideal
            .generators()
            .iter()
            .map(|g| self.o1_elem(g.clone()))
            .collect();
        Ideal::new(self, gens)
    }

    /// `O₂ = {(i, 0) : i ∈ I}`, generated by `(g, 0)` for each generator `g` of `I`.
    pub fn o2(&self) -> Result<Ideal<Self>> {
        let gens = self
            .ideal
            .generators()
            .iter()
            .map(|g| self.o2_elem(g.clone()))
            .collect();
        Ideal::new(self, gens)
    }

    pub fn kernel(&self, which: Component) -> Result<Ideal<Self>> {
        match which {
            Component::First => self.o1(),
            Component::Second => self.o2(),
        }
    }

    fn offsets(&self, elems: Vec<R::Elem>) -> Result<Vec<R::Elem>> {
        match self.ideal.elements() {
            Some(members) => Ok(members.to_vec()),
            None => elems
                .into_iter()
                .filter_map(|i| match self.ideal.contains(&i) {
                    Ok(true) => Some(Ok(i)),
                    Ok(false) => None,
                    Err(e) => Some(Err(e)),
                })
                .collect(),
        }
    }
}

impl<R: CommRing> CommRing for DupRing<R> {
    type Elem = DupElem<R::Elem>;

    fn zero(&self) -> Self::Elem {
        DupElem::new(self.base.zero(), self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        DupElem::new(self.base.one(), self.base.zero())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        DupElem::new(
            self.base.add(&a.base, &b.base),
            self.base.add(&a.offset, &b.offset),
        )
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        DupElem::new(self.base.neg(&a.base), self.base.neg(&a.offset))
    }

    // (r, r+i)(r', r'+i') = (rr', rr' + ri' + ir' + ii')
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        let offset = r.add(
            &r.add(&r.mul(&a.base, &b.offset), &r.mul(&a.offset, &b.base)),
            &r.mul(&a.offset, &b.offset),
        );
        DupElem::new(r.mul(&a.base, &b.base), offset)
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        self.base.contains(&a.base)
            && self.base.contains(&a.offset)
            && self.ideal.contains(&a.offset).unwrap_or(false)
    }

    fn cardinality(&self) -> Option<u128> {
        let n = self.base.cardinality()?;
        n.checked_mul(self.ideal.size()? as u128)
    }

    fn elements(&self) -> Result<Vec<Self::Elem>> {
        enumeration_guard(self)?;
        let members = self
            .ideal
            .elements()
            .ok_or_else(|| Error::NotEnumerable(self.describe()))?;
        Ok(self
            .base
            .elements()?
            .into_iter()
            .flat_map(|r| members.iter().map(move |i| DupElem::new(r.clone(), i.clone())))
            .collect())
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: u64) -> Self::Elem {
        let r = self.base.sample(rng, bound);
        let offset = match self.ideal.elements() {
            Some(members) => members[rng.gen_range(0..members.len())].clone(),
            None => self.ideal.generators().iter().fold(self.base.zero(), |acc, g| {
                let t = self.base.sample(rng, bound);
                self.base.add(&acc, &self.base.mul(&t, g))
            }),
        };
        DupElem::new(r, offset)
    }

    fn small_elements(&self, bound: u64) -> Result<Vec<Self::Elem>> {
        let small = self.base.small_elements(bound)?;
        let offsets = self.offsets(small.clone())?;
        Ok(small
            .into_iter()
            .flat_map(|r| offsets.iter().map(move |i| DupElem::new(r.clone(), i.clone())))
            .collect())
    }

    fn sweep_bound(&self) -> u64 {
        self.base.sweep_bound()
    }

    fn sample_bound(&self) -> u64 {
        self.base.sample_bound()
    }

    /// Decides membership for ideals generated by diagonal elements `(p, p)`
    /// together with elements of only one of `O₁`, `O₂`:
    ///
    /// - diagonal `P` and `O₁`-type `G`: `(r, r+i)` is a member iff
    ///   `r ∈ (P)` and `i ∈ I·(P) + (G)`;
    /// - diagonal `P` and `O₂`-type `G`: `(s+j, s)` is a member iff
    ///   `s ∈ (P)` and `j ∈ I·(P) + (G)`.
    fn ideal_membership(&self, gens: &[Self::Elem], a: &Self::Elem) -> Option<bool> {
        let r = &self.base;
        let zero = r.zero();
        let is_diag = |g: &Self::Elem| g.offset == zero;
        let is_o1 = |g: &Self::Elem| g.base == zero;
        let is_o2 = |g: &Self::Elem| r.add(&g.base, &g.offset) == zero;

        let diag: Vec<R::Elem> = gens.iter().filter(|g| is_diag(g)).map(|g| g.base.clone()).collect();
        let rest: Vec<&Self::Elem> = gens.iter().filter(|g| !is_diag(g)).collect();
        let mut widened: Vec<R::Elem> = diag
            .iter()
            .flat_map(|p| self.ideal.generators().iter().map(move |g| r.mul(p, g)))
            .collect();

        if rest.iter().all(|g| is_o1(g)) {
            widened.extend(rest.iter().map(|g| g.offset.clone()));
            Some(r.ideal_membership(&diag, &a.base)? && r.ideal_membership(&widened, &a.offset)?)
        } else if rest.iter().all(|g| is_o2(g)) {
            widened.extend(rest.iter().map(|g| g.base.clone()));
            let second = r.add(&a.base, &a.offset);
            Some(
                r.ideal_membership(&diag, &second)?
                    && r.ideal_membership(&widened, &r.neg(&a.offset))?,
            )
        } else {
            None
        }
    }

    fn describe(&self) -> String {
        let gens: Vec<String> = self
            .ideal
            .generators()
            .iter()
            .map(|g| self.base.format_elem(g))
            .collect();
        let gens = if gens.is_empty() {
            self.base.format_elem(&self.base.zero())
        } else {
            gens.join(",")
        };
        format!("dup({}; {gens})", self.base.describe())
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        let (r, s) = self.to_pair(a);
        format!("({},{})", self.base.format_elem(&r), self.base.format_elem(&s))
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let (a, b) = parse_pair(s)?;
        self.from_pair(self.base.parse_elem(a)?, self.base.parse_elem(b)?)
    }
}

/// Outcome of an exhaustive ring-isomorphism check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoCheck {
    pub holds: bool,
    pub pairs_checked: usize,
    pub counterexample: Option<String>,
}

/// Checks that `f` is a bijective, additive, multiplicative, unital map
/// between two finite rings, over all element pairs.
pub fn verify_isomorphism<S, T, F>(src: &S, dst: &T, f: F) -> Result<IsoCheck>
where
    S: CommRing,
    T: CommRing,
    F: Fn(&S::Elem) -> T::Elem,
{
    let elems = src.elements()?;
    let images: Vec<T::Elem> = elems.iter().map(&f).collect();
    let fail = |pairs, msg: String| {
        Ok(IsoCheck {
            holds: false,
            pairs_checked: pairs,
            counterexample: Some(msg),
        })
    };

    let distinct: HashSet<&T::Elem> = images.iter().collect();
    if distinct.len() != elems.len() {
        return fail(0, "map is not injective".into());
    }
    if dst.cardinality() != Some(elems.len() as u128) || !images.iter().all(|y| dst.contains(y)) {
        return fail(0, "map is not onto the target".into());
    }
    if f(&src.one()) != dst.one() {
        return fail(0, "map does not preserve 1".into());
    }
    let mut pairs = 0;
    for (a, fa) in elems.iter().zip(&images) {
        for (b, fb) in elems.iter().zip(&images) {
            pairs += 1;
            if f(&src.add(a, b)) != dst.add(fa, fb) {
                return fail(pairs, format!("f({0}+{1}) != f({0})+f({1})", src.format_elem(a), src.format_elem(b)));
            }
            if f(&src.mul(a, b)) != dst.mul(fa, fb) {
                return fail(pairs, format!("f({0}*{1}) != f({0})*f({1})", src.format_elem(a), src.format_elem(b)));
            }
        }
    }
    Ok(IsoCheck {
        holds: true,
        pairs_checked: pairs,
        counterexample: None,
    })
}

/// Builds `(R ⋈ I)/Oᵢ` and checks that the projection `πᵢ` induces a ring
/// isomorphism onto `R`.
pub fn quotient_by_oi<R: CommRing>(
    dup: &DupRing<R>,
    which: Component,
) -> Result<(QuotientRing<DupRing<R>>, IsoCheck)> {
    if !dup.is_enumerable() {
        return Err(Error::NotEnumerable(dup.describe()));
    }
    let kernel = dup.kernel(which)?;
    let quotient = QuotientRing::new(&kernel)?;
    for e in dup.elements()? {
        if dup.project(which, &e) != dup.project(which, &quotient.reduce(&e)) {
            let check = IsoCheck {
                holds: false,
                pairs_checked: 0,
                counterexample: Some(format!(
                    "projection not constant on the coset of {}",
                    dup.format_elem(&e)
                )),
            };
            return Ok((quotient, check));
        }
    }
    let check = verify_isomorphism(&quotient, dup.base(), |e| dup.project(which, e))?;
    Ok((quotient, check))
}
