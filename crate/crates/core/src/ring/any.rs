//! A single ring type covering everything the ring-spec language can
//! describe, so that rings chosen at run time can be fed to the generic
//! algorithms.

use num_bigint::BigInt;
use rand::Rng;

use super::{CommRing, Integers, ModRing, Poly, PolyQuotient, PolyRing, ProductRing};
use crate::duplication::{DupElem, DupRing};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub enum AnyRing {
    Integers(Integers<BigInt>),
    Mod(ModRing),
    Poly(PolyRing),
    PolyQuotient(PolyQuotient),
    Product(Box<ProductRing<AnyRing, AnyRing>>),
    Dup(Box<DupRing<AnyRing>>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnyElem {
    Int(BigInt),
    Residue(u64),
    Poly(Poly),
    Pair(Box<(AnyElem, AnyElem)>),
    Dup(Box<DupElem<AnyElem>>),
}

impl From<ModRing> for AnyRing {
    fn from(r: ModRing) -> Self {
        AnyRing::Mod(r)
    }
}

impl From<PolyRing> for AnyRing {
    fn from(r: PolyRing) -> Self {
        AnyRing::Poly(r)
    }
}

impl From<PolyQuotient> for AnyRing {
    fn from(r: PolyQuotient) -> Self {
        AnyRing::PolyQuotient(r)
    }
}

impl From<Integers<BigInt>> for AnyRing {
    fn from(r: Integers<BigInt>) -> Self {
        AnyRing::Integers(r)
    }
}

impl From<ProductRing<AnyRing, AnyRing>> for AnyRing {
    fn from(r: ProductRing<AnyRing, AnyRing>) -> Self {
        AnyRing::Product(Box::new(r))
    }
}

impl From<DupRing<AnyRing>> for AnyRing {
    fn from(r: DupRing<AnyRing>) -> Self {
        AnyRing::Dup(Box::new(r))
    }
}

/// Conversion between a concrete ring's elements and `AnyElem`.
trait Wrap: CommRing {
    fn wrap(e: Self::Elem) -> AnyElem;
    fn peek(e: &AnyElem) -> Option<&Self::Elem>;
}

impl Wrap for Integers<BigInt> {
    fn wrap(e: BigInt) -> AnyElem {
        AnyElem::Int(e)
    }
    fn peek(e: &AnyElem) -> Option<&BigInt> {
        match e {
            AnyElem::Int(v) => Some(v),
            _ => None,
        }
    }
}

impl Wrap for ModRing {
    fn wrap(e: u64) -> AnyElem {
        AnyElem::Residue(e)
    }
    fn peek(e: &AnyElem) -> Option<&u64> {
        match e {
            AnyElem::Residue(v) => Some(v),
            _ => None,
        }
    }
}

impl Wrap for PolyRing {
    fn wrap(e: Poly) -> AnyElem {
        AnyElem::Poly(e)
    }
    fn peek(e: &AnyElem) -> Option<&Poly> {
        match e {
            AnyElem::Poly(v) => Some(v),
            _ => None,
        }
    }
}

impl Wrap for PolyQuotient {
    fn wrap(e: Poly) -> AnyElem {
        AnyElem::Poly(e)
    }
    fn peek(e: &AnyElem) -> Option<&Poly> {
        match e {
            AnyElem::Poly(v) => Some(v),
            _ => None,
        }
    }
}

impl Wrap for ProductRing<AnyRing, AnyRing> {
    fn wrap(e: (AnyElem, AnyElem)) -> AnyElem {
        AnyElem::Pair(Box::new(e))
    }
    fn peek(e: &AnyElem) -> Option<&(AnyElem, AnyElem)> {
        match e {
            AnyElem::Pair(v) => Some(v),
            _ => None,
        }
    }
}

impl Wrap for DupRing<AnyRing> {
    fn wrap(e: DupElem<AnyElem>) -> AnyElem {
        AnyElem::Dup(Box::new(e))
    }
    fn peek(e: &AnyElem) -> Option<&DupElem<AnyElem>> {
        match e {
            AnyElem::Dup(v) => Some(v),
            _ => None,
        }
    }
}

fn wr<W: Wrap>(_: &W, e: W::Elem) -> AnyElem {
    W::wrap(e)
}

fn peek<'a, W: Wrap>(_: &W, e: &'a AnyElem) -> Option<&'a W::Elem> {
    W::peek(e)
}

fn un<'a, W: Wrap>(r: &W, e: &'a AnyElem) -> &'a W::Elem {
    W::peek(e).unwrap_or_else(|| panic!("{e:?} is not an element of {}", r.describe()))
}

fn peek_all<W: Wrap>(_: &W, es: &[AnyElem]) -> Option<Vec<W::Elem>> {
    es.iter().map(|e| W::peek(e).cloned()).collect()
}

macro_rules! with_ring {
    ($self:expr, $r:ident => $body:expr) => {
        match $self {
            AnyRing::Integers($r) => $body,
            AnyRing::Mod($r) => $body,
            AnyRing::Poly($r) => $body,
            AnyRing::PolyQuotient($r) => $body,
            AnyRing::Product(boxed) => {
                let $r = &**boxed;
                $body
            }
            AnyRing::Dup(boxed) => {
                let $r = &**boxed;
                $body
            }
        }
    };
}

impl CommRing for AnyRing {
    type Elem = AnyElem;

    fn zero(&self) -> AnyElem {
        with_ring!(self, r => wr(r, r.zero()))
    }

    fn one(&self) -> AnyElem {
        with_ring!(self, r => wr(r, r.one()))
    }

    fn add(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        with_ring!(self, r => wr(r, r.add(un(r, a), un(r, b))))
    }

    fn neg(&self, a: &AnyElem) -> AnyElem {
        with_ring!(self, r => wr(r, r.neg(un(r, a))))
    }

    fn mul(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        with_ring!(self, r => wr(r, r.mul(un(r, a), un(r, b))))
    }

    fn contains(&self, a: &AnyElem) -> bool {
        with_ring!(self, r => peek(r, a).is_some_and(|e| r.contains(e)))
    }

    fn cardinality(&self) -> Option<u128> {
        with_ring!(self, r => r.cardinality())
    }

    fn elements(&self) -> Result<Vec<AnyElem>> {
        with_ring!(self, r => Ok(r.elements()?.into_iter().map(|e| wr(r, e)).collect()))
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: u64) -> AnyElem {
        with_ring!(self, r => wr(r, r.sample(rng, bound)))
    }

    fn small_elements(&self, bound: u64) -> Result<Vec<AnyElem>> {
        with_ring!(self, r => Ok(r.small_elements(bound)?.into_iter().map(|e| wr(r, e)).collect()))
    }

    fn sweep_bound(&self) -> u64 {
        with_ring!(self, r => r.sweep_bound())
    }

    fn sample_bound(&self) -> u64 {
        with_ring!(self, r => r.sample_bound())
    }

    fn is_known_domain(&self) -> bool {
        with_ring!(self, r => r.is_known_domain())
    }

    fn is_pid(&self) -> bool {
        with_ring!(self, r => r.is_pid())
    }

    fn ideal_membership(&self, gens: &[AnyElem], a: &AnyElem) -> Option<bool> {
        with_ring!(self, r => r.ideal_membership(&peek_all(r, gens)?, peek(r, a)?))
    }

    fn ideal_is_prime(&self, gens: &[AnyElem]) -> Option<bool> {
        with_ring!(self, r => r.ideal_is_prime(&peek_all(r, gens)?))
    }

    fn describe(&self) -> String {
        with_ring!(self, r => r.describe())
    }

    fn format_elem(&self, a: &AnyElem) -> String {
        with_ring!(self, r => r.format_elem(un(r, a)))
    }

    fn parse_elem(&self, s: &str) -> Result<AnyElem> {
        with_ring!(self, r => Ok(wr(r, r.parse_elem(s)?)))
    }
}

impl AnyRing {
    pub fn as_dup(&self) -> Option<&DupRing<AnyRing>> {
        match self {
            AnyRing::Dup(d) => Some(d),
            _ => None,
        }
    }
}
