//! Primes of `R ⋈ I` lying over primes of `R`.
//!
//! For a prime `P` of `R`:
//!
//! - `P₀ = {(p, p+i) : p ∈ P, i ∈ I ∩ P}`
//! - `P₁ = {(p, p+i) : p ∈ P, i ∈ I}`
//! - `P₂ = {(p+i, p) : p ∈ P, i ∈ I}`
//!
//! If `I ⊆ P` the three coincide and give the only prime over `P`;
//! otherwise `P₁ ≠ P₂` are the only primes over `P` and `P₁ ∩ P₂ = P₀`.

use serde::Serialize;

use super::{DupElem, DupRing};
use crate::error::{Error, Result};
use crate::ideal::{is_prime, Ideal};
use crate::ring::{CommRing, FiniteTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LiftCase {
    ContainsI,
    NotContainsI,
}

#[derive(Debug, Clone)]
pub struct PrimeLift<R: CommRing> {
    pub base_prime: Ideal<R>,
    pub case: LiftCase,
    /// Only materialized over finite rings, or when it coincides with `P₁`.
    pub p0: Option<Ideal<DupRing<R>>>,
    pub p1: Ideal<DupRing<R>>,
    pub p2: Ideal<DupRing<R>>,
}

impl<R: CommRing> PrimeLift<R> {
    /// The distinct primes lying over the base prime.
    pub fn lifts(&self) -> Vec<&Ideal<DupRing<R>>> {
        match self.case {
            LiftCase::ContainsI => vec![&self.p1],
            LiftCase::NotContainsI => vec![&self.p1, &self.p2],
        }
    }

    /// `P₀ = P₁ = P₂` in the first case; `P₁ ≠ P₂` and `P₁ ∩ P₂ = P₀` in
    /// the second.
    pub fn is_consistent(&self) -> Result<bool> {
        match self.case {
            LiftCase::ContainsI => {
                let p0_ok = match &self.p0 {
                    Some(p0) => p0.equals(&self.p1)?,
                    None => true,
                };
                Ok(p0_ok && self.p1.equals(&self.p2)?)
            }
            LiftCase::NotContainsI => {
                let distinct = !self.p1.equals(&self.p2)?;
                let meet = match &self.p0 {
                    Some(p0) => self.p1.intersection(&self.p2)?.equals(p0)?,
                    None => true,
                };
                Ok(distinct && meet)
            }
        }
    }
}

fn require_prime<R: CommRing>(p: &Ideal<R>) -> Result<()> {
    match is_prime(p) {
        Ok(true) => Ok(()),
        Ok(false) | Err(Error::ImproperIdeal) => Err(Error::NotPrimeIdeal),
        Err(e) => Err(e),
    }
}

pub fn lift_prime<R: CommRing>(dup: &DupRing<R>, prime: &Ideal<R>) -> Result<PrimeLift<R>> {
    if prime.ring() != dup.base() {
        return Err(Error::OwnerMismatch(dup.base().describe()));
    }
    require_prime(prime)?;
    let case = if dup.ideal().is_subset_of(prime)? {
        LiftCase::ContainsI
    } else {
        LiftCase::NotContainsI
    };
    if dup.is_enumerable() {
        materialized_lift(dup, prime, case)
    } else {
        symbolic_lift(dup, prime, case)
    }
}

fn materialized_lift<R: CommRing>(
    dup: &DupRing<R>,
    prime: &Ideal<R>,
    case: LiftCase,
) -> Result<PrimeLift<R>> {
    let base = dup.base();
    let table = FiniteTable::new(dup)?;
    let ps = prime.elements().expect("finite base");
    let is = dup.ideal().elements().expect("finite base");

    let mut p0 = table.empty_set();
    let mut p1 = table.empty_set();
    let mut p2 = table.empty_set();
    let at = |e: DupElem<R::Elem>| table.index_of(&e).expect("valid element");
    for p in ps {
        for i in is {
            p1.insert(at(DupElem::new(p.clone(), i.clone())));
            if prime.contains(i)? {
                p0.insert(at(DupElem::new(p.clone(), i.clone())));
            }
            // (p + i, p) has offset -i
            p2.insert(at(DupElem::new(base.add(p, i), base.neg(i))));
        }
    }
    Ok(PrimeLift {
        base_prime: prime.clone(),
        case,
        p0: Some(Ideal::from_set(&table, &p0)),
        p1: Ideal::from_set(&table, &p1),
        p2: Ideal::from_set(&table, &p2),
    })
}

fn symbolic_lift<R: CommRing>(
    dup: &DupRing<R>,
    prime: &Ideal<R>,
    case: LiftCase,
) -> Result<PrimeLift<R>> {
    let diag: Vec<_> = prime
        .generators()
        .iter()
        .map(|p| dup.diagonal(p.clone()))
        .collect();
    let with = |extra: Vec<DupElem<R::Elem>>| {
        let mut gens = diag.clone();
        gens.extend(extra);
        Ideal::new(dup, gens)
    };
    let ig = dup.ideal().generators();
    let p1 = with(ig.iter().map(|g| dup.o1_elem(g.clone())).collect())?;
    let p2 = with(ig.iter().map(|g| dup.o2_elem(g.clone())).collect())?;
    let p0 = match case {
        LiftCase::ContainsI => Some(p1.clone()),
        LiftCase::NotContainsI => None,
    };
    Ok(PrimeLift {
        base_prime: prime.clone(),
        case,
        p0,
        p1,
        p2,
    })
}

/// Which half of the classification a prime `Q` of `R ⋈ I` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DescentCase {
    /// `Q ⊉ O₁`, so `Q = P₂` with `I ⊄ P`.
    A,
    /// `Q ⊇ O₁`, so `Q = P₁`.
    B,
}

#[derive(Debug, Clone)]
pub struct Descent<R: CommRing> {
    pub prime: Ideal<R>,
    pub case: DescentCase,
    /// Whether `Q` equals the `P₁` (case B) or `P₂` (case A) built from
    /// the contracted prime.
    pub matches_lift: bool,
}

/// Contracts a prime `Q` of a finite `R ⋈ I` to `P = {r : (r, r) ∈ Q}`.
pub fn descend_prime<R: CommRing>(
    dup: &DupRing<R>,
    q: &Ideal<DupRing<R>>,
) -> Result<Descent<R>> {
    if !dup.is_enumerable() {
        return Err(Error::NotEnumerable(dup.describe()));
    }
    if q.ring() != dup {
        return Err(Error::OwnerMismatch(dup.describe()));
    }
    require_prime(q)?;
    let base_table = FiniteTable::new(dup.base())?;
    let mut set = base_table.empty_set();
    for (k, r) in base_table.elems().iter().enumerate() {
        if q.contains(&dup.diagonal(r.clone()))? {
            set.insert(k);
        }
    }
    let prime = Ideal::from_set(&base_table, &set);
    let case = if dup.o1()?.is_subset_of(q)? {
        DescentCase::B
    } else {
        DescentCase::A
    };
    let lift = lift_prime(dup, &prime)?;
    let target = match case {
        DescentCase::B => &lift.p1,
        DescentCase::A => &lift.p2,
    };
    let matches_lift = target.equals(q)?
        && (case == DescentCase::B || lift.case == super::LiftCase::NotContainsI);
    Ok(Descent {
        prime,
        case,
        matches_lift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{spectrum, DEFAULT_LATTICE_CAP};
    use crate::ring::{Integers, ModRing};

    fn dup_zn(n: u64, g: u64) -> DupRing<ModRing> {
        let r = ModRing::new(n).unwrap();
        DupRing::new(&r, &Ideal::new(&r, vec![g]).unwrap()).unwrap()
    }

    #[test]
    fn z6_dup_2_lifts() {
        let d = dup_zn(6, 2);
        let r = d.base().clone();
        let over2 = lift_prime(&d, &Ideal::new(&r, vec![2]).unwrap()).unwrap();
        assert_eq!(over2.case, LiftCase::ContainsI);
        assert_eq!(over2.lifts().len(), 1);
        assert!(over2.is_consistent().unwrap());

        let over3 = lift_prime(&d, &Ideal::new(&r, vec![3]).unwrap()).unwrap();
        assert_eq!(over3.case, LiftCase::NotContainsI);
        assert_eq!(over3.lifts().len(), 2);
        assert!(over3.is_consistent().unwrap());
        assert_ne!(over3.p1, over3.p2);
    }

    #[test]
    fn z4_dup_single_prime() {
        let d = dup_zn(4, 2);
        let sp = spectrum(&d, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(sp.len(), 1);
        let lift = lift_prime(&d, &Ideal::new(d.base(), vec![2]).unwrap()).unwrap();
        assert_eq!(lift.lifts().len(), 1);
        assert_eq!(*lift.lifts()[0], sp[0].ideal);
    }

    #[test]
    fn non_prime_rejected() {
        let d = dup_zn(6, 2);
        let zero = Ideal::zero(d.base()).unwrap();
        assert_eq!(lift_prime(&d, &zero).unwrap_err(), Error::NotPrimeIdeal);
        let whole = Ideal::whole(d.base()).unwrap();
        assert_eq!(lift_prime(&d, &whole).unwrap_err(), Error::NotPrimeIdeal);
    }

    #[test]
    fn descend_and_relift() {
        let d = dup_zn(6, 2);
        for q in spectrum(&d, DEFAULT_LATTICE_CAP).unwrap() {
            let desc = descend_prime(&d, &q.ideal).unwrap();
            let gen = desc.prime.generators().to_vec();
            assert!(gen == vec![2] || gen == vec![3], "{gen:?}");
            assert!(desc.matches_lift);
            let lift = lift_prime(&d, &desc.prime).unwrap();
            assert!(lift.lifts().iter().any(|l| **l == q.ideal));
            if desc.prime.generators() == [2] {
                assert_eq!(desc.case, DescentCase::B);
            }
        }
    }

    #[test]
    fn symbolic_lift_over_z() {
        let z = Integers::<i64>::new();
        let d = DupRing::new(&z, &Ideal::new(&z, vec![2]).unwrap()).unwrap();
        let over3 = lift_prime(&d, &Ideal::new(&z, vec![3]).unwrap()).unwrap();
        assert_eq!(over3.case, LiftCase::NotContainsI);
        assert!(over3.is_consistent().unwrap());
        let over2 = lift_prime(&d, &Ideal::new(&z, vec![2]).unwrap()).unwrap();
        assert_eq!(over2.case, LiftCase::ContainsI);
        assert!(over2.is_consistent().unwrap());
        assert!(lift_prime(&d, &Ideal::new(&z, vec![6]).unwrap()).is_err());
    }
}
