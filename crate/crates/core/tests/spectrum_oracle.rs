use std::collections::{BTreeSet, HashSet};

use amalgam_core::duplication::{lift_prime, LiftCase};
use amalgam_core::ideal::{all_ideals, is_prime, spectrum, DEFAULT_LATTICE_CAP};
use amalgam_core::{CommRing, DupRing, Ideal, ModRing};

type Pair = (u64, u64);

/// `Z/n ⋈ (d)` as raw pairs `(r, s)` with `d | s − r`.
struct PairRing {
    n: u64,
    elems: Vec<Pair>,
}

impl PairRing {
    fn new(n: u64, d: u64) -> Self {
        let step = if d.is_multiple_of(n) { n } else { d };
        let mut elems = Vec::new();
        for r in 0..n {
            for s in 0..n {
                if (s + n - r).is_multiple_of(step) {
                    elems.push((r, s));
                }
            }
        }
        PairRing { n, elems }
    }

    fn add(&self, a: Pair, b: Pair) -> Pair {
        ((a.0 + b.0) % self.n, (a.1 + b.1) % self.n)
    }

    fn mul(&self, a: Pair, b: Pair) -> Pair {
        (a.0 * b.0 % self.n, a.1 * b.1 % self.n)
    }

    /// The ideal generated by `gens`: the additive subgroup generated by all `r·g`.
    fn ideal(&self, gens: &[Pair]) -> BTreeSet<Pair> {
        let steps: BTreeSet<Pair> = gens.iter().flat_map(|&g| self.elems.iter().map(move |&r| self.mul(r, g))).collect();
        let mut set = BTreeSet::from([(0, 0)]);
        let mut frontier = vec![(0, 0)];
        while let Some(x) = frontier.pop() {
            for &g in &steps {
                let y = self.add(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Additive subgroups of `(Z/n)²` are 2-generated, so every ideal is `(a) + (b)`.
    fn all_ideals(&self) -> HashSet<BTreeSet<Pair>> {
        let principal: Vec<BTreeSet<Pair>> = self.elems.iter().map(|&a| self.ideal(&[a])).collect::<HashSet<_>>().into_iter().collect();
        let mut out = HashSet::new();
        for a in &principal {
            for b in &principal {
                out.insert(a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| self.add(x, y)).collect());
            }
        }
        out
    }

    fn is_prime(&self, p: &BTreeSet<Pair>) -> bool {
        p.len() < self.elems.len()
            && self.elems.iter().all(|&a| {
                p.contains(&a) || self.elems.iter().all(|&b| !p.contains(&self.mul(a, b)) || p.contains(&b))
            })
    }
}

fn prime_factors(n: u64) -> Vec<u64> {
    (2..=n).filter(|p| n.is_multiple_of(*p) && (2..*p).all(|q| p % q != 0)).collect()
}

fn crate_dup(n: u64, d: u64) -> DupRing<ModRing> {
    let r = ModRing::new(n).unwrap();
    DupRing::new(&r, &Ideal::new(&r, vec![d % n]).unwrap()).unwrap()
}

fn as_pairs(dup: &DupRing<ModRing>, ideal: &Ideal<DupRing<ModRing>>) -> BTreeSet<Pair> {
    ideal.elements().unwrap().iter().map(|e| dup.to_pair(e)).collect()
}

fn cases() -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for n in 2..=12u64 {
        for d in (2..=n).filter(|d| n % d == 0) {
            out.push((n, d));
        }
    }
    out.extend([(30, 10), (30, 15), (18, 6), (20, 10)]);
    out
}

#[test]
fn ideal_lattice_matches_pair_oracle() {
    for (n, d) in cases() {
        let dup = crate_dup(n, d);
        let oracle = PairRing::new(n, d);
        assert_eq!(dup.cardinality(), Some(oracle.elems.len() as u128));
        let ours: HashSet<BTreeSet<Pair>> = all_ideals(&dup, DEFAULT_LATTICE_CAP).unwrap().iter().map(|i| as_pairs(&dup, i)).collect();
        assert_eq!(ours, oracle.all_ideals(), "Z/{n} ⋈ ({d})");
    }
}

#[test]
fn spectrum_matches_pair_oracle_and_count() {
    for (n, d) in cases() {
        let dup = crate_dup(n, d);
        let oracle = PairRing::new(n, d);
        let expected: HashSet<BTreeSet<Pair>> = oracle.all_ideals().into_iter().filter(|p| oracle.is_prime(p)).collect();
        let ours: HashSet<BTreeSet<Pair>> = spectrum(&dup, DEFAULT_LATTICE_CAP).unwrap().iter().map(|p| as_pairs(&dup, &p.ideal)).collect();
        assert_eq!(ours, expected, "Z/{n} ⋈ ({d})");

        let ps = prime_factors(n);
        let containing = ps.iter().filter(|p| (d % n) % *p == 0).count();
        assert_eq!(ours.len(), containing + 2 * (ps.len() - containing), "Z/{n} ⋈ ({d})");
    }
}

#[test]
fn lifts_partition_the_spectrum() {
    for (n, d) in cases() {
        let dup = crate_dup(n, d);
        let base = dup.base().clone();
        let oracle = PairRing::new(n, d);
        let mut lifted: Vec<BTreeSet<Pair>> = Vec::new();
        for p in prime_factors(n) {
            let prime = Ideal::new(&base, vec![p % n]).unwrap();
            let lift = lift_prime(&dup, &prime).unwrap();
            assert_eq!(lift.case == LiftCase::ContainsI, (d % n) % p == 0, "Z/{n} ⋈ ({d}) over ({p})");
            assert!(lift.is_consistent().unwrap());

            let p1: BTreeSet<Pair> = oracle.elems.iter().copied().filter(|(r, _)| r % p == 0).collect();
            let p2: BTreeSet<Pair> = oracle.elems.iter().copied().filter(|(_, s)| s % p == 0).collect();
            assert_eq!(as_pairs(&dup, &lift.p1), p1);
            assert_eq!(as_pairs(&dup, &lift.p2), p2);
            for q in lift.lifts() {
                assert!(is_prime(q).unwrap());
                lifted.push(as_pairs(&dup, q));
            }
        }
        let distinct: HashSet<_> = lifted.iter().cloned().collect();
        assert_eq!(distinct.len(), lifted.len(), "lifts are distinct");
        let spec: HashSet<BTreeSet<Pair>> = spectrum(&dup, DEFAULT_LATTICE_CAP).unwrap().iter().map(|p| as_pairs(&dup, &p.ideal)).collect();
        assert_eq!(distinct, spec, "Z/{n} ⋈ ({d})");
    }
}

#[test]
fn lifting_a_non_prime_is_rejected() {
    let dup = crate_dup(12, 2);
    let not_prime = Ideal::new(dup.base(), vec![4]).unwrap();
    assert!(lift_prime(&dup, &not_prime).is_err());
}

#[test]
fn cap_is_enforced() {
    let dup = crate_dup(30, 2);
    assert_eq!(dup.cardinality(), Some(450));
    assert!(spectrum(&dup, DEFAULT_LATTICE_CAP).is_err());
}
