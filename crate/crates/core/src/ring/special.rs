use super::{CommRing, FiniteTable};
use crate::error::Result;

/// Units, idempotents and nilpotents of a finite ring, each in enumeration
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialElements<E> {
    pub units: Vec<E>,
    pub idempotents: Vec<E>,
    pub nilpotents: Vec<E>,
}

pub fn special_elements<R: CommRing>(ring: &R) -> Result<SpecialElements<R::Elem>> {
    let t = FiniteTable::new(ring)?;
    let n = t.len();
    let units = (0..n)
        .filter(|&u| (0..n).any(|v| t.mul(u, v) == t.one()))
        .collect::<Vec<_>>();
    let idempotents = (0..n).filter(|&e| t.mul(e, e) == e).collect::<Vec<_>>();
    let nilpotents = (0..n).filter(|&a| nilpotent(&t, a)).collect::<Vec<_>>();
    let pick = |v: Vec<usize>| v.into_iter().map(|i| t.elem(i).clone()).collect();
    Ok(SpecialElements {
        units: pick(units),
        idempotents: pick(idempotents),
        nilpotents: pick(nilpotents),
    })
}

/// `a^k = 0` for some `k ≤ |R|`.
pub(crate) fn nilpotent<R: CommRing>(t: &FiniteTable<R>, a: usize) -> bool {
    let mut power = a;
    for _ in 0..t.len() {
        if power == t.zero() {
            return true;
        }
        power = t.mul(power, a);
    }
    power == t.zero()
}
