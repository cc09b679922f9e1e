use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::Ideal;
use crate::error::{Error, Result};
use crate::ring::{require_enumerable, CommRing, FiniteTable};

/// Largest ring whose full ideal lattice is enumerated by default.
pub const DEFAULT_LATTICE_CAP: u128 = 128;

/// A prime ideal together with whether it is maximal.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecPoint<R: CommRing> {
    pub ideal: Ideal<R>,
    pub maximal: bool,
}

/// Every ideal as an index set: principal ideals closed under pairwise sums,
/// ordered by size and then by membership bits.
pub(crate) fn ideal_sets<R: CommRing>(table: &FiniteTable<R>) -> Vec<FixedBitSet> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut all = Vec::new();
    for a in 0..table.len() {
        let p = table.principal(a);
        if seen.insert(p.clone()) {
            all.push(p);
        }
    }
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        let snapshot = all.clone();
        for f in &frontier {
            for other in &snapshot {
                let s = table.sum(f, other);
                if seen.insert(s.clone()) {
                    fresh.push(s);
                }
            }
        }
        all.extend(fresh.iter().cloned());
        frontier = fresh;
    }
    all.sort_by(|a, b| {
        a.count_ones(..)
            .cmp(&b.count_ones(..))
            .then_with(|| a.ones().cmp(b.ones()))
    });
    all
}

pub fn all_ideals<R: CommRing>(ring: &R, cap: u128) -> Result<Vec<Ideal<R>>> {
    require_enumerable(ring, cap)?;
    let table = FiniteTable::new(ring)?;
    Ok(ideal_sets(&table)
        .iter()
        .map(|s| Ideal::from_set(&table, s))
        .collect())
}

pub(crate) fn set_is_prime<R: CommRing>(table: &FiniteTable<R>, p: &FixedBitSet) -> bool {
    if p.contains(table.one()) {
        return false;
    }
    let outside: Vec<usize> = (0..table.len()).filter(|&a| !p.contains(a)).collect();
    outside
        .iter()
        .all(|&a| outside.iter().all(|&b| !p.contains(table.mul(a, b))))
}

/// Maximal iff `P + (a)` is the whole ring for every `a ∉ P`; any ideal
/// strictly above `P` contains one of these sums.
pub(crate) fn set_is_maximal<R: CommRing>(table: &FiniteTable<R>, p: &FixedBitSet) -> bool {
    if p.contains(table.one()) {
        return false;
    }
    (0..table.len())
        .filter(|&a| !p.contains(a))
        .all(|a| table.sum(p, &table.principal(a)).contains(table.one()))
}

pub fn is_prime<R: CommRing>(p: &Ideal<R>) -> Result<bool> {
    if !p.is_proper()? {
        return Err(Error::ImproperIdeal);
    }
    let ring = p.ring();
    if !ring.is_enumerable() {
        return ring
            .ideal_is_prime(p.generators())
            .ok_or_else(|| Error::UndecidableMembership(ring.describe()));
    }
    let table = FiniteTable::new(ring)?;
    Ok(set_is_prime(&table, &p.to_set(&table)?))
}

pub fn is_maximal<R: CommRing>(p: &Ideal<R>) -> Result<bool> {
    if !p.is_proper()? {
        return Err(Error::ImproperIdeal);
    }
    let table = FiniteTable::new(p.ring())?;
    Ok(set_is_maximal(&table, &p.to_set(&table)?))
}

/// The prime ideals, in lattice order.
pub fn spectrum<R: CommRing>(ring: &R, cap: u128) -> Result<Vec<SpecPoint<R>>> {
    require_enumerable(ring, cap)?;
    let table = FiniteTable::new(ring)?;
    Ok(ideal_sets(&table)
        .iter()
        .filter(|s| set_is_prime(&table, s))
        .map(|s| SpecPoint {
            ideal: Ideal::from_set(&table, s),
            maximal: set_is_maximal(&table, s),
        })
        .collect())
}

/// `(0 : a) = {r : r·a = 0}`.
pub fn annihilator<R: CommRing>(ring: &R, a: &R::Elem) -> Result<Ideal<R>> {
    ring.check(a)?;
    let table = FiniteTable::new(ring)?;
    let ai = table.index_of(a).expect("checked element");
    let mut set = table.empty_set();
    for r in 0..table.len() {
        if table.mul(r, ai) == table.zero() {
            set.insert(r);
        }
    }
    Ok(Ideal::from_set(&table, &set))
}

/// Whether some element of the ideal is a non-zero-divisor.
pub fn contains_regular_element<R: CommRing>(ideal: &Ideal<R>) -> Result<bool> {
    let ring = ideal.ring();
    if ring.is_enumerable() {
        let table = FiniteTable::new(ring)?;
        let set = ideal.to_set(&table)?;
        return Ok(set.ones().any(|x| {
            (0..table.len()).all(|r| r == table.zero() || table.mul(r, x) != table.zero())
        }));
    }
    if ring.is_known_domain() {
        return Ok(!ideal.is_zero()?);
    }
    Err(Error::UndecidableMembership(ring.describe()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::QuotientRing;
    use crate::ring::{Integers, ModRing, Poly, PolyQuotient, ProductRing};

    fn z(n: u64) -> ModRing {
        ModRing::new(n).unwrap()
    }

    // Oracle: an ideal of Z/n is dn for a divisor d of n, so the lattice has
    // one ideal per divisor.
    fn divisor_count(n: u64) -> usize {
        (1..=n).filter(|d| n.is_multiple_of(*d)).count()
    }

    #[test]
    fn ideal_counts_match_divisors() {
        for n in 2..=40 {
            assert_eq!(
                all_ideals(&z(n), DEFAULT_LATTICE_CAP).unwrap().len(),
                divisor_count(n),
                "Z/{n}"
            );
        }
        assert_eq!(all_ideals(&z(6), 128).unwrap().len(), 4);
        assert_eq!(all_ideals(&z(4), 128).unwrap().len(), 3);
        assert_eq!(all_ideals(&ModRing::prime_field(2).unwrap(), 128).unwrap().len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            all_ideals(&z(200), 128).unwrap_err(),
            Error::CapExceeded { size: 200, cap: 128 }
        );
        assert!(matches!(
            spectrum(&Integers::<i64>::new(), 128),
            Err(Error::NotEnumerable(_))
        ));
    }

    #[test]
    fn spectra() {
        let gens = |r: &ModRing| -> Vec<Vec<u64>> {
            spectrum(r, 128)
                .unwrap()
                .into_iter()
                .map(|p| p.ideal.elements().unwrap().to_vec())
                .collect()
        };
        assert_eq!(gens(&z(6)), vec![vec![0, 3], vec![0, 2, 4]]);
        assert_eq!(gens(&z(4)), vec![vec![0, 2]]);
        let dual = PolyQuotient::new(2, Poly::parse("x^2", 2).unwrap()).unwrap();
        let sp = spectrum(&dual, 128).unwrap();
        assert_eq!(sp.len(), 1);
        assert_eq!(sp[0].ideal.generators(), &[Poly::x()]);
    }

    #[test]
    fn primality_examples() {
        let two6 = Ideal::new(&z(6), vec![2]).unwrap();
        assert!(is_prime(&two6).unwrap());
        assert!(is_maximal(&two6).unwrap());
        assert!(is_prime(&Ideal::new(&z(4), vec![2]).unwrap()).unwrap());
        assert!(!is_prime(&Ideal::zero(&z(6)).unwrap()).unwrap());
        assert_eq!(
            is_prime(&Ideal::whole(&z(6)).unwrap()),
            Err(Error::ImproperIdeal)
        );
        let zz = Integers::<i64>::new();
        assert!(is_prime(&Ideal::new(&zz, vec![3]).unwrap()).unwrap());
        assert!(!is_prime(&Ideal::new(&zz, vec![4]).unwrap()).unwrap());
    }

    #[test]
    fn annihilators() {
        assert_eq!(annihilator(&z(6), &2).unwrap().elements().unwrap(), &[0, 3]);
        assert!(annihilator(&z(6), &1).unwrap().is_zero().unwrap());
        assert_eq!(annihilator(&z(6), &0).unwrap().size(), Some(6));
    }

    #[test]
    fn regular_elements() {
        let zz = Integers::<i64>::new();
        assert!(contains_regular_element(&Ideal::new(&zz, vec![2]).unwrap()).unwrap());
        assert!(!contains_regular_element(&Ideal::new(&z(6), vec![2]).unwrap()).unwrap());
        for n in 2..=30 {
            for p in all_ideals(&z(n), 128).unwrap() {
                if p.is_proper().unwrap() {
                    assert!(!contains_regular_element(&p).unwrap());
                }
            }
        }
    }

    #[test]
    fn prime_iff_quotient_is_a_domain() {
        let rings = [z(4), z(6), z(8), z(9), z(12), z(30)];
        for r in &rings {
            for p in all_ideals(r, 128).unwrap() {
                if !p.is_proper().unwrap() {
                    continue;
                }
                let q = QuotientRing::new(&p).unwrap();
                let t = FiniteTable::new(&q).unwrap();
                let domain = (0..t.len()).all(|a| {
                    (0..t.len()).all(|b| {
                        a == t.zero() || b == t.zero() || t.mul(a, b) != t.zero()
                    })
                });
                assert_eq!(is_prime(&p).unwrap(), domain, "{} in {}", p.describe(), r.describe());
            }
        }
    }

    #[test]
    fn lattice_closed_under_sum_and_intersection() {
        let r = ProductRing::new(z(2), z(4)).unwrap();
        let ideals = all_ideals(&r, 128).unwrap();
        for a in &ideals {
            for b in &ideals {
                let s = a.sum(b).unwrap();
                let i = a.intersection(b).unwrap();
                assert!(ideals.contains(&s));
                assert!(ideals.contains(&i));
            }
        }
    }

    #[test]
    fn annihilator_contains_a_iff_square_zero() {
        let r = z(12);
        for a in r.elements().unwrap() {
            let ann = annihilator(&r, &a).unwrap();
            assert_eq!(ann.contains(&a).unwrap(), r.mul(&a, &a) == 0);
        }
    }

    #[test]
    fn primes_of_finite_rings_are_maximal() {
        for n in 2..=40 {
            for p in spectrum(&z(n), 128).unwrap() {
                assert!(p.maximal);
            }
        }
    }
}
