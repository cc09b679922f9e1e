//! Sampled verification over the infinite domains `Z` and `GF(p)[x]`, for
//! `I = (a)`:
//!
//! ```text
//! 0 → O₂ → R ⋈ I --u--> O₁ → 0,   u(e) = e·(0, a)
//! 0 → O₁ → R ⋈ I --v--> O₂ → 0,   v(e) = e·(a, 0)
//! ```
//!
//! Splicing the two sequences gives a periodic resolution of `O₁`, which is
//! infinite as long as neither `O₁` nor `O₂` is projective, i.e. generated
//! by an idempotent.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::duplication::{Component, DupElem, DupRing};
use crate::error::{Error, Result};
use crate::ideal::{annihilator, Ideal};
use crate::ring::CommRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PdVerdict {
    #[serde(rename = "Infinite-Periodic")]
    InfinitePeriodic,
    Inconclusive,
}

/// Agreement of two membership predicates on seeded samples and on every
/// small representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub status: CheckStatus,
    pub samples: usize,
    pub sweep: usize,
    pub disagreements: usize,
    pub first_disagreement: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionReport {
    /// The duplication the verdicts are about.
    pub dup: String,
    pub generator: String,
    pub ker_u_equals_o2: Certificate,
    pub ker_v_equals_o1: Certificate,
    pub o1_idempotent_generated: bool,
    pub o2_idempotent_generated: bool,
    pub pd_verdict: PdVerdict,
    pub samples_checked: usize,
}

#[derive(Clone, Copy)]
enum Draw {
    General,
    InO1,
    InO2,
}

fn draw<R: CommRing>(dup: &DupRing<R>, a: &R::Elem, kind: Draw, rng: &mut ChaCha8Rng) -> DupElem<R::Elem> {
    let base = dup.base();
    match kind {
        Draw::General => dup.sample(rng, dup.sample_bound()),
        Draw::InO1 => dup.o1_elem(base.mul(&base.sample(rng, base.sample_bound()), a)),
        Draw::InO2 => dup.o2_elem(base.mul(&base.sample(rng, base.sample_bound()), a)),
    }
}

fn certify<R, L, M>(
    dup: &DupRing<R>,
    a: &R::Elem,
    kinds: &[Draw],
    samples: usize,
    seed: u64,
    lhs: L,
    rhs: M,
) -> Result<Certificate>
where
    R: CommRing,
    L: Fn(&DupElem<R::Elem>) -> bool,
    M: Fn(&DupElem<R::Elem>) -> Result<bool>,
{
    if samples == 0 {
        return Ok(Certificate {
            status: CheckStatus::Skipped,
            samples: 0,
            sweep: 0,
            disagreements: 0,
            first_disagreement: None,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let drawn: Vec<_> = (0..samples)
        .map(|k| draw(dup, a, kinds[k % kinds.len()], &mut rng))
        .collect();
    let sweep = dup.small_elements(dup.sweep_bound())?;
    let mut disagreements = 0;
    let mut first = None;
    for e in drawn.iter().chain(&sweep) {
        if lhs(e) != rhs(e)? {
            disagreements += 1;
            first.get_or_insert_with(|| dup.format_elem(e));
        }
    }
    Ok(Certificate {
        status: if disagreements == 0 { CheckStatus::Passed } else { CheckStatus::Failed },
        samples,
        sweep: sweep.len(),
        disagreements,
        first_disagreement: first,
    })
}

fn require_domain<R: CommRing>(base: &R) -> Result<()> {
    if base.is_enumerable() || !base.is_known_domain() {
        return Err(Error::NotADomainHandle(base.describe()));
    }
    Ok(())
}

/// Whether `Oₖ` might be generated by an idempotent. In a domain the only
/// idempotents are 0 and 1, so an idempotent `(i, 0)` or `(0, i)` has
/// `i ∈ {0, 1}`; `1 ∉ I` and `Oₖ ≠ 0`, so none generates `Oₖ`. The domain
/// lemma is re-checked on the sweep.
fn idempotent_generated<R: CommRing>(dup: &DupRing<R>, which: Component) -> Result<bool> {
    let base = dup.base();
    let small = base.small_elements(base.sweep_bound())?;
    let lemma = small
        .iter()
        .all(|x| base.mul(x, x) != *x || base.is_zero(x) || *x == base.one());
    let kernel = dup.kernel(which)?;
    let mut only_zero = true;
    for e in dup.small_elements(dup.sweep_bound())? {
        if kernel.contains(&e)? && dup.mul(&e, &e) == e && !dup.is_zero(&e) {
            only_zero = false;
        }
    }
    let ideal = dup.ideal();
    let excluded = base.is_known_domain() && lemma && only_zero && !ideal.is_zero()? && ideal.is_proper()?;
    Ok(!excluded)
}

/// Verifies the kernel identities `ker u = O₂`, `ker v = O₁` of the two
/// exact sequences over `R ⋈ (a)` and the idempotent obstructions.
pub fn verify_periodic_resolution<R: CommRing>(
    base: &R,
    a: &R::Elem,
    samples: usize,
    seed: u64,
) -> Result<ResolutionReport> {
    require_domain(base)?;
    base.check(a)?;
    if base.is_zero(a) {
        return Err(Error::ZeroGenerator);
    }
    let ideal = Ideal::new(base, vec![a.clone()])?;
    if !ideal.is_proper()? {
        return Err(Error::ImproperIdeal);
    }
    let dup = DupRing::new(base, &ideal)?;
    let (o1, o2) = (dup.o1()?, dup.o2()?);
    let (u_gen, v_gen) = (dup.o1_elem(a.clone()), dup.o2_elem(a.clone()));
    let kinds = [Draw::General, Draw::InO1, Draw::InO2];

    let ker_u = certify(&dup, a, &kinds, samples, seed, |e| dup.is_zero(&dup.mul(e, &u_gen)), |e| o2.contains(e))?;
    let ker_v = certify(&dup, a, &kinds, samples, seed, |e| dup.is_zero(&dup.mul(e, &v_gen)), |e| o1.contains(e))?;
    let o1_idem = idempotent_generated(&dup, Component::First)?;
    let o2_idem = idempotent_generated(&dup, Component::Second)?;

    let periodic = ker_u.status == CheckStatus::Passed
        && ker_v.status == CheckStatus::Passed
        && !o1_idem
        && !o2_idem;
    Ok(ResolutionReport {
        dup: dup.describe(),
        generator: base.format_elem(a),
        ker_u_equals_o2: ker_u,
        ker_v_equals_o1: ker_v,
        o1_idempotent_generated: o1_idem,
        o2_idempotent_generated: o2_idem,
        pd_verdict: if periodic { PdVerdict::InfinitePeriodic } else { PdVerdict::Inconclusive },
        samples_checked: samples,
    })
}

#[derive(Debug, Clone)]
pub struct AnnihilatorResult<R: CommRing> {
    /// `(0 : c)`: materialized over finite rings, the symbolic `O₁` otherwise.
    pub ideal: Ideal<DupRing<R>>,
    pub equals_o1: CheckStatus,
    /// Sampled evidence for the symbolic answer.
    pub certificate: Option<Certificate>,
}

/// `(0 : c)` in `R ⋈ I`. Over infinite domains only `c = (m, 0)` with
/// `m ≠ 0` and principal `I` is supported; the answer is then `O₁`, backed
/// by a certificate on `samples` seeded elements plus the sweep.
pub fn annihilator_dup<R: CommRing>(
    dup: &DupRing<R>,
    c: &DupElem<R::Elem>,
    samples: usize,
    seed: u64,
) -> Result<AnnihilatorResult<R>> {
    dup.check(c)?;
    let o1 = dup.o1()?;
    if dup.is_enumerable() {
        let ideal = annihilator(dup, c)?;
        let equals_o1 = if ideal.equals(&o1)? { CheckStatus::Passed } else { CheckStatus::Failed };
        return Ok(AnnihilatorResult { ideal, equals_o1, certificate: None });
    }
    let base = dup.base();
    let undecidable = || Error::UndecidableMembership(dup.describe());
    let second = dup.project(Component::Second, c);
    let gens = dup.ideal().generators();
    if !base.is_known_domain() || gens.len() != 1 || !base.is_zero(&second) || base.is_zero(&c.base) {
        return Err(undecidable());
    }
    let a = gens[0].clone();
    let certificate = certify(
        dup,
        &a,
        &[Draw::General, Draw::InO1],
        samples,
        seed,
        |e| dup.is_zero(&dup.mul(e, c)),
        |e| o1.contains(e),
    )?;
    Ok(AnnihilatorResult {
        ideal: o1,
        equals_o1: certificate.status,
        certificate: Some(certificate),
    })
}
