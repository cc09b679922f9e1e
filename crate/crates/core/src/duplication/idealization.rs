use rand::Rng;

use super::{verify_isomorphism, DupRing, IsoCheck};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{enumeration_guard, product::parse_pair, CommRing};

/// The trivial extension `R ∝ I` on `R ⊕ I` with
/// `(r, m)(s, n) = (rs, rn + sm)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Idealization<R: CommRing> {
    base: R,
    module: Ideal<R>,
}

impl<R: CommRing> Idealization<R> {
    pub fn new(base: &R, module: &Ideal<R>) -> Result<Self> {
        if module.ring() != base {
            return Err(Error::OwnerMismatch(base.describe()));
        }
        module.contains(&base.zero())?;
        Ok(Idealization {
            base: base.clone(),
            module: module.clone(),
        })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn module(&self) -> &Ideal<R> {
        &self.module
    }
}

impl<R: CommRing> CommRing for Idealization<R> {
    type Elem = (R::Elem, R::Elem);

    fn zero(&self) -> Self::Elem {
        (self.base.zero(), self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        (self.base.one(), self.base.zero())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        (
            r.mul(&a.0, &b.0),
            r.add(&r.mul(&a.0, &b.1), &r.mul(&b.0, &a.1)),
        )
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        self.base.contains(&a.0) && self.module.contains(&a.1).unwrap_or(false)
    }

    fn cardinality(&self) -> Option<u128> {
        self.base
            .cardinality()?
            .checked_mul(self.module.size()? as u128)
    }

    fn elements(&self) -> Result<Vec<Self::Elem>> {
        enumeration_guard(self)?;
        let members = self.module.elements().expect("finite module");
        Ok(self
            .base
            .elements()?
            .into_iter()
            .flat_map(|r| members.iter().map(move |m| (r.clone(), m.clone())))
            .collect())
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: u64) -> Self::Elem {
        let r = self.base.sample(rng, bound);
        let m = match self.module.elements() {
            Some(members) => members[rng.gen_range(0..members.len())].clone(),
            None => self.module.generators().iter().fold(self.base.zero(), |acc, g| {
                let t = self.base.sample(rng, bound);
                self.base.add(&acc, &self.base.mul(&t, g))
            }),
        };
        (r, m)
    }

    fn describe(&self) -> String {
        let gens: Vec<String> = self
            .module
            .generators()
            .iter()
            .map(|g| self.base.format_elem(g))
            .collect();
        format!("idealization({}; {})", self.base.describe(), gens.join(","))
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        format!(
            "({},{})",
            self.base.format_elem(&a.0),
            self.base.format_elem(&a.1)
        )
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let (a, b) = parse_pair(s)?;
        let e = (self.base.parse_elem(a)?, self.base.parse_elem(b)?);
        self.check(&e)?;
        Ok(e)
    }
}

/// When `I² = 0`, checks that `(r, r+i) ↦ (r, i)` is a ring isomorphism
/// `R ⋈ I → R ∝ I`.
pub fn iso_dup_idealization<R: CommRing>(base: &R, ideal: &Ideal<R>) -> Result<IsoCheck> {
    let members = ideal
        .elements()
        .ok_or_else(|| Error::NotEnumerable(base.describe()))?;
    let square_zero = members
        .iter()
        .all(|a| members.iter().all(|b| base.is_zero(&base.mul(a, b))));
    if !square_zero {
        return Err(Error::SquareNotZero);
    }
    let dup = DupRing::new(base, ideal)?;
    let ext = Idealization::new(base, ideal)?;
    verify_isomorphism(&dup, &ext, |e| (e.base.clone(), e.offset.clone()))
}
