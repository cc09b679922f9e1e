//! Kernels of maps between finite free modules, and the homological
//! identities of duplications: periodic resolutions, annihilators,
//! presentation kernels.

mod resolution;

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::duplication::{DupElem, DupRing};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{require_enumerable, special_elements, CommRing, FiniteTable};

pub use resolution::{
    annihilator_dup, verify_periodic_resolution, AnnihilatorResult, CheckStatus, Certificate,
    PdVerdict, ResolutionReport,
};

/// Largest domain `Rⁿ` that kernel enumeration will scan.
pub const DEFAULT_KERNEL_CAP: u128 = 1 << 16;

#[derive(Debug, Clone, PartialEq)]
pub enum Codomain<R: CommRing> {
    /// The ring itself, as a rank-1 free module.
    Free,
    /// An ideal, viewed as a submodule of the ring.
    Ideal(Ideal<R>),
}

/// The linear map `Rⁿ → R` sending the `j`-th basis vector to `images[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleMap<R: CommRing> {
    ring: R,
    images: Vec<R::Elem>,
    codomain: Codomain<R>,
}

impl<R: CommRing> ModuleMap<R> {
    pub fn new(ring: &R, images: Vec<R::Elem>, codomain: Codomain<R>) -> Result<Self> {
        for g in &images {
            ring.check(g)?;
            if let Codomain::Ideal(target) = &codomain {
                if target.ring() != ring {
                    return Err(Error::OwnerMismatch(ring.describe()));
                }
                if !target.contains(g)? {
                    return Err(Error::OwnerMismatch(target.describe()));
                }
            }
        }
        Ok(ModuleMap {
            ring: ring.clone(),
            images,
            codomain,
        })
    }

    /// The map onto the ideal generated by `images`.
    pub fn onto_span(ring: &R, images: Vec<R::Elem>) -> Result<Self> {
        let target = Ideal::new(ring, images.clone())?;
        Self::new(ring, images, Codomain::Ideal(target))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn domain_rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[R::Elem] {
        &self.images
    }

    pub fn codomain(&self) -> &Codomain<R> {
        &self.codomain
    }

    pub fn apply(&self, v: &[R::Elem]) -> Result<R::Elem> {
        if v.len() != self.images.len() {
            return Err(Error::Parse(format!(
                "expected a tuple of length {}, got {}",
                self.images.len(),
                v.len()
            )));
        }
        let r = &self.ring;
        v.iter().zip(&self.images).try_fold(r.zero(), |acc, (x, g)| {
            r.check(x)?;
            Ok(r.add(&acc, &r.mul(x, g)))
        })
    }
}

/// A submodule of `Rⁿ` over a finite ring, both as a full element list and
/// as a generating set.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel<E> {
    pub rank: usize,
    pub elements: Vec<Vec<E>>,
    pub generators: Vec<Vec<E>>,
}

/// Index arithmetic on `Rⁿ` for a tabulated ring, with tuples encoded in
/// base `|R|`, first coordinate least significant.
struct TupleSpace<'a, R: CommRing> {
    table: &'a FiniteTable<R>,
    rank: usize,
    size: usize,
}

impl<'a, R: CommRing> TupleSpace<'a, R> {
    fn new(table: &'a FiniteTable<R>, rank: usize, cap: u128) -> Result<Self> {
        let n = table.len() as u128;
        let size = (0..rank).try_fold(1u128, |acc, _| acc.checked_mul(n));
        match size {
            Some(s) if s <= cap => Ok(TupleSpace {
                table,
                rank,
                size: s as usize,
            }),
            Some(s) => Err(Error::CapExceeded { size: s, cap }),
            None => Err(Error::CapExceeded { size: u128::MAX, cap }),
        }
    }

    fn decode(&self, mut code: usize) -> Vec<usize> {
        let n = self.table.len();
        (0..self.rank)
            .map(|_| {
                let d = code % n;
                code /= n;
                d
            })
            .collect()
    }

    fn encode(&self, v: &[usize]) -> usize {
        let n = self.table.len();
        v.iter().rev().fold(0, |acc, &d| acc * n + d)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (a, b) = (self.decode(a), self.decode(b));
        let sum: Vec<usize> = a.iter().zip(&b).map(|(&x, &y)| self.table.add(x, y)).collect();
        self.encode(&sum)
    }

    fn scale(&self, c: usize, a: usize) -> usize {
        let v: Vec<usize> = self.decode(a).iter().map(|&x| self.table.mul(c, x)).collect();
        self.encode(&v)
    }

    /// Adds `R·g` to an existing submodule.
    fn extend_span(&self, span: &FixedBitSet, g: usize) -> FixedBitSet {
        let multiples: BTreeSet<usize> = (0..self.table.len()).map(|c| self.scale(c, g)).collect();
        let mut out = FixedBitSet::with_capacity(self.size);
        for s in span.ones() {
            for &m in &multiples {
                out.insert(self.add(s, m));
            }
        }
        out
    }

    fn span(&self, gens: &[usize]) -> FixedBitSet {
        let mut span = FixedBitSet::with_capacity(self.size);
        span.insert(self.encode(&vec![self.table.zero(); self.rank]));
        for &g in gens {
            span = self.extend_span(&span, g);
        }
        span
    }

    /// A generating set: greedily keep every element outside the span so
    /// far, then drop any generator the others already produce.
    fn generators_of(&self, set: &FixedBitSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.span(&[]);
        for x in set.ones() {
            if !span.contains(x) {
                gens.push(x);
                span = self.extend_span(&span, x);
            }
        }
        let mut k = 0;
        while k < gens.len() {
            let rest: Vec<usize> = gens.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &g)| g).collect();
            if self.span(&rest) == *set {
                gens = rest;
            } else {
                k += 1;
            }
        }
        gens
    }

    fn to_elems(&self, code: usize) -> Vec<R::Elem> {
        self.decode(code).iter().map(|&i| self.table.elem(i).clone()).collect()
    }
}

fn kernel_set<R: CommRing>(space: &TupleSpace<R>, images: &[usize]) -> FixedBitSet {
    let t = space.table;
    let mut set = FixedBitSet::with_capacity(space.size);
    for code in 0..space.size {
        let v = space.decode(code);
        let image = v.iter().zip(images).fold(t.zero(), |acc, (&x, &g)| t.add(acc, t.mul(x, g)));
        if image == t.zero() {
            set.insert(code);
        }
    }
    set
}

/// Enumerates `ker m` exhaustively and reduces it to a generating set.
pub fn kernel_generators<R: CommRing>(m: &ModuleMap<R>, cap: u128) -> Result<Kernel<R::Elem>> {
    require_enumerable(&m.ring, cap)?;
    let table = FiniteTable::new(&m.ring)?;
    let space = TupleSpace::new(&table, m.domain_rank(), cap)?;
    let images: Vec<usize> = m.images.iter().map(|g| table.index_of(g).unwrap()).collect();
    let set = kernel_set(&space, &images);
    Ok(Kernel {
        rank: m.domain_rank(),
        elements: set.ones().map(|c| space.to_elems(c)).collect(),
        generators: space.generators_of(&set).into_iter().map(|c| space.to_elems(c)).collect(),
    })
}

/// The submodule of `Rⁿ` generated by `gens`, as a sorted element list.
pub fn submodule_span<R: CommRing>(ring: &R, rank: usize, gens: &[Vec<R::Elem>], cap: u128) -> Result<Vec<Vec<R::Elem>>> {
    require_enumerable(ring, cap)?;
    let table = FiniteTable::new(ring)?;
    let space = TupleSpace::new(&table, rank, cap)?;
    let codes = gens
        .iter()
        .map(|g| {
            if g.len() != rank {
                return Err(Error::Parse(format!("expected a tuple of length {rank}")));
            }
            let idx: Option<Vec<usize>> = g.iter().map(|e| table.index_of(e)).collect();
            idx.map(|v| space.encode(&v)).ok_or_else(|| Error::OwnerMismatch(ring.describe()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(space.span(&codes).ones().map(|c| space.to_elems(c)).collect())
}

/// Whether `I = (e)` for some idempotent `e`.
pub fn is_idempotent_generated<R: CommRing>(ideal: &Ideal<R>) -> Result<bool> {
    let ring = ideal.ring();
    let members = ideal
        .elements()
        .ok_or_else(|| Error::NotEnumerable(ring.describe()))?;
    let table = FiniteTable::new(ring)?;
    let target = ideal.to_set(&table)?;
    let idempotents = special_elements(ring)?.idempotents;
    Ok(idempotents
        .iter()
        .filter(|e| members.contains(e))
        .any(|e| table.principal(table.index_of(e).unwrap()) == target))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationCheck {
    pub holds: bool,
    pub rank: usize,
    /// `|ker u|` for `u: (R ⋈ I)ⁿ → J`.
    pub kernel_size: usize,
    /// Size of `{(rⱼ, rⱼ+eⱼ) : r ∈ ker v, e ∈ Iⁿ ∩ ker v}`.
    pub characterization_size: usize,
    pub kernel_generators: usize,
}

/// For `J = Σ (R ⋈ I)(aⱼ, aⱼ)` and `L = Σ R aⱼ`, compares the kernel of
/// `u: (R ⋈ I)ⁿ → J` with the set built from the kernel of `v: Rⁿ → L`.
pub fn presentation_kernel_check<R: CommRing>(
    dup: &DupRing<R>,
    a: &[R::Elem],
    cap: u128,
) -> Result<PresentationCheck> {
    let base = dup.base();
    let diag: Vec<DupElem<R::Elem>> = a.iter().map(|x| dup.diagonal(x.clone())).collect();
    for x in a {
        base.check(x)?;
    }
    let u = ModuleMap::onto_span(dup, diag)?;
    let ker_u = kernel_generators(&u, cap)?;
    let v = ModuleMap::onto_span(base, a.to_vec())?;
    let ker_v = kernel_generators(&v, cap)?;

    let ideal = dup.ideal();
    let mut in_ideal = Vec::new();
    for e in &ker_v.elements {
        if e.iter().try_fold(true, |acc, x| Ok::<_, Error>(acc && ideal.contains(x)?))? {
            in_ideal.push(e);
        }
    }
    let characterization: BTreeSet<Vec<DupElem<R::Elem>>> = ker_v
        .elements
        .iter()
        .flat_map(|r| {
            in_ideal.iter().map(move |e| {
                r.iter()
                    .zip(e.iter())
                    .map(|(rj, ej)| DupElem::new(rj.clone(), ej.clone()))
                    .collect()
            })
        })
        .collect();
    let kernel: BTreeSet<Vec<DupElem<R::Elem>>> = ker_u.elements.iter().cloned().collect();
    Ok(PresentationCheck {
        holds: kernel == characterization,
        rank: a.len(),
        kernel_size: kernel.len(),
        characterization_size: characterization.len(),
        kernel_generators: ker_u.generators.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProbeResult {
    pub stabilizes: bool,
    /// Largest `k`, over all `a`, at which `(aᵏ) = (aᵏ⁺¹)` first holds.
    pub depth: usize,
}

/// Checks that every chain `(a) ⊇ (a²) ⊇ …` becomes constant within
/// `|R|` steps.
pub fn perfect_probe<R: CommRing>(ring: &R) -> Result<ProbeResult> {
    let table = FiniteTable::new(ring)?;
    let n = table.len();
    let mut depth = 0;
    for a in 0..n {
        let mut power = a;
        let mut current = table.principal(power);
        let mut stable = None;
        for k in 1..=n {
            power = table.mul(power, a);
            let next = table.principal(power);
            if next == current {
                stable = Some(k);
                break;
            }
            current = next;
        }
        match stable {
            Some(k) => depth = depth.max(k),
            None => return Ok(ProbeResult { stabilizes: false, depth: n }),
        }
    }
    Ok(ProbeResult { stabilizes: true, depth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duplication::Component;
    use crate::ideal::annihilator;
    use crate::ring::{ModRing, Poly, PolyQuotient};

    fn z(n: u64) -> ModRing {
        ModRing::new(n).unwrap()
    }

    fn dup_zn(n: u64, g: u64) -> DupRing<ModRing> {
        let r = z(n);
        DupRing::new(&r, &Ideal::new(&r, vec![g]).unwrap()).unwrap()
    }

    /// Every tuple of `Rⁿ` mapping to zero, by nested loops.
    fn brute_kernel(r: &ModRing, images: &[u64]) -> BTreeSet<Vec<u64>> {
        let elems = r.elements().unwrap();
        let mut tuples: Vec<Vec<u64>> = vec![vec![]];
        for _ in images {
            tuples = tuples
                .into_iter()
                .flat_map(|t| elems.iter().map(move |&x| [t.clone(), vec![x]].concat()))
                .collect();
        }
        tuples
            .into_iter()
            .filter(|t| {
                let s = t.iter().zip(images).fold(0, |acc, (x, g)| r.add(&acc, &r.mul(x, g)));
                s == 0
            })
            .collect()
    }

    #[test]
    fn kernel_of_doubling_on_z4() {
        let r = z(4);
        let m = ModuleMap::new(&r, vec![2], Codomain::Free).unwrap();
        let k = kernel_generators(&m, DEFAULT_KERNEL_CAP).unwrap();
        assert_eq!(k.elements, vec![vec![0], vec![2]]);
        assert_eq!(k.generators, vec![vec![2]]);
    }

    #[test]
    fn identity_and_zero_maps() {
        let r = z(4);
        let id = ModuleMap::new(&r, vec![1], Codomain::Free).unwrap();
        assert_eq!(kernel_generators(&id, DEFAULT_KERNEL_CAP).unwrap().elements, vec![vec![0]]);
        assert!(kernel_generators(&id, DEFAULT_KERNEL_CAP).unwrap().generators.is_empty());
        let zero = ModuleMap::new(&r, vec![0], Codomain::Free).unwrap();
        assert_eq!(kernel_generators(&zero, DEFAULT_KERNEL_CAP).unwrap().elements.len(), 4);
    }

    #[test]
    fn codomain_is_enforced() {
        let r = z(6);
        let target = Ideal::new(&r, vec![2]).unwrap();
        assert!(ModuleMap::new(&r, vec![3], Codomain::Ideal(target.clone())).is_err());
        assert!(ModuleMap::new(&r, vec![4], Codomain::Ideal(target)).is_ok());
    }

    #[test]
    fn kernels_match_brute_force_and_generators_span() {
        for (n, images) in [(6, vec![2, 3]), (8, vec![4, 2]), (12, vec![2, 3]), (4, vec![2, 2, 0]), (9, vec![3])] {
            let r = z(n);
            let m = ModuleMap::new(&r, images.clone(), Codomain::Free).unwrap();
            let k = kernel_generators(&m, DEFAULT_KERNEL_CAP).unwrap();
            let got: BTreeSet<Vec<u64>> = k.elements.iter().cloned().collect();
            assert_eq!(got, brute_kernel(&r, &images), "Z/{n} {images:?}");
            let span: BTreeSet<Vec<u64>> = submodule_span(&r, images.len(), &k.generators, DEFAULT_KERNEL_CAP)
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(span, got);
        }
    }

    #[test]
    fn kernel_cap() {
        let r = z(64);
        let m = ModuleMap::new(&r, vec![1, 1, 1], Codomain::Free).unwrap();
        assert_eq!(
            kernel_generators(&m, DEFAULT_KERNEL_CAP).unwrap_err(),
            Error::CapExceeded { size: 1 << 18, cap: 1 << 16 }
        );
    }

    #[test]
    fn multiplication_kernels() {
        // u = ·(0, a) kills exactly the (r, s) with s·a = 0, and v = ·(a, 0)
        // the (r, s) with r·a = 0; these are O₂ and O₁ precisely when a is
        // regular, which never happens for a nonzero proper a in a finite ring
        for (n, g) in [(4, 2), (6, 2), (6, 3), (8, 2), (8, 4), (9, 3), (12, 6), (5, 0)] {
            let r = z(n);
            let d = dup_zn(n, g);
            let ann: BTreeSet<u64> = annihilator(&r, &g).unwrap().elements().unwrap().iter().copied().collect();
            let u = ModuleMap::new(&d, vec![d.o1_elem(g)], Codomain::Free).unwrap();
            let v = ModuleMap::new(&d, vec![d.o2_elem(g)], Codomain::Free).unwrap();
            let ker_u = kernel_generators(&u, DEFAULT_KERNEL_CAP).unwrap().elements.concat();
            let ker_v = kernel_generators(&v, DEFAULT_KERNEL_CAP).unwrap().elements.concat();
            let expect_u: Vec<_> = d.elements().unwrap().into_iter().filter(|e| ann.contains(&d.to_pair(e).1)).collect();
            let expect_v: Vec<_> = d.elements().unwrap().into_iter().filter(|e| ann.contains(&e.base)).collect();
            assert_eq!(ker_u, expect_u, "Z/{n} ({g})");
            assert_eq!(ker_v, expect_v, "Z/{n} ({g})");

            let regular = ann.len() == 1;
            let o2 = d.kernel(Component::Second).unwrap();
            let o1 = d.kernel(Component::First).unwrap();
            assert_eq!(ker_u == o2.elements().unwrap(), regular);
            assert_eq!(ker_v == o1.elements().unwrap(), regular);
        }
    }

    #[test]
    fn exact_at_the_middle_term() {
        for (n, g) in [(4, 2), (8, 2), (9, 3), (12, 2)] {
            let d = dup_zn(n, g);
            let u = ModuleMap::new(&d, vec![d.o1_elem(g)], Codomain::Free).unwrap();
            let v = ModuleMap::new(&d, vec![d.o2_elem(g)], Codomain::Free).unwrap();
            for e in d.o2().unwrap().elements().unwrap() {
                assert!(d.is_zero(&u.apply(std::slice::from_ref(e)).unwrap()));
            }
            for e in d.o1().unwrap().elements().unwrap() {
                assert!(d.is_zero(&v.apply(std::slice::from_ref(e)).unwrap()));
            }
        }
    }

    #[test]
    fn idempotent_generation() {
        let r = z(6);
        assert!(is_idempotent_generated(&Ideal::new(&r, vec![3]).unwrap()).unwrap());
        let r4 = z(4);
        assert!(!is_idempotent_generated(&Ideal::new(&r4, vec![2]).unwrap()).unwrap());
        assert!(is_idempotent_generated(&Ideal::zero(&r4).unwrap()).unwrap());
        assert!(is_idempotent_generated(&Ideal::whole(&r4).unwrap()).unwrap());
    }

    #[test]
    fn presentation_kernels() {
        for (n, g, a) in [(8, 2, vec![2]), (6, 2, vec![3]), (12, 2, vec![2, 3]), (6, 2, vec![1])] {
            let d = dup_zn(n, g);
            let check = presentation_kernel_check(&d, &a, DEFAULT_KERNEL_CAP).unwrap();
            assert!(check.holds, "Z/{n} ⋈ ({g}), a = {a:?}: {check:?}");
        }
        let trivial = presentation_kernel_check(&dup_zn(6, 2), &[1], DEFAULT_KERNEL_CAP).unwrap();
        assert_eq!(trivial.kernel_size, 1);
    }

    #[test]
    fn probe_depths() {
        assert_eq!(perfect_probe(&z(4)).unwrap(), ProbeResult { stabilizes: true, depth: 2 });
        assert_eq!(perfect_probe(&ModRing::prime_field(2).unwrap()).unwrap().depth, 1);
        assert!(perfect_probe(&z(6)).unwrap().stabilizes);
        let x3 = PolyQuotient::new(2, Poly::parse("x^3", 2).unwrap()).unwrap();
        assert_eq!(perfect_probe(&x3).unwrap().depth, 3);
    }
}
