//! Decidable ring properties, and transfer checks that run a property on
//! `R` and on `R ⋈ I` side by side.
//!
//! Properties whose definitions quantify over all modules (semisimple,
//! perfect, Steinitz, coherent, Noetherian) are reduced to decidable
//! equivalents valid for finite rings, and their reports say so.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::duplication::DupRing;
use crate::error::{Error, Result};
use crate::homology::{kernel_generators, perfect_probe, ModuleMap, DEFAULT_KERNEL_CAP};
use crate::ideal::{spectrum, Ideal, DEFAULT_LATTICE_CAP};
use crate::ring::{special_elements, CommRing, FiniteTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Reduced,
    Vnr,
    Local,
    Semisimple,
    Perfect,
    Steinitz,
    Coherent,
    Noetherian,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::Reduced,
        Property::Vnr,
        Property::Local,
        Property::Semisimple,
        Property::Perfect,
        Property::Steinitz,
        Property::Coherent,
        Property::Noetherian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Reduced => "reduced",
            Property::Vnr => "vnr",
            Property::Local => "local",
            Property::Semisimple => "semisimple",
            Property::Perfect => "perfect",
            Property::Steinitz => "steinitz",
            Property::Coherent => "coherent",
            Property::Noetherian => "noetherian",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown property {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Method {
    Exhaustive,
    Sampled,
    /// A cited fact stands in for the computation.
    TheoremBacked(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub ring: String,
    pub property: Property,
    pub verdict: bool,
    /// First counterexample in enumeration order.
    pub witness: Option<String>,
    pub method: Method,
    pub evidence: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Largest ring whose ideal lattice is enumerated.
    pub cap: u128,
    /// Sample count for checks on infinite rings.
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            cap: DEFAULT_LATTICE_CAP,
            samples: 1000,
            seed: 42,
        }
    }
}

fn report<R: CommRing>(ring: &R, property: Property, verdict: bool, witness: Option<String>, method: Method) -> PropertyReport {
    PropertyReport {
        ring: ring.describe(),
        property,
        verdict,
        witness,
        method,
        evidence: Vec::new(),
    }
}

fn finite_table<R: CommRing>(ring: &R) -> Result<FiniteTable<R>> {
    if !ring.is_enumerable() {
        return Err(Error::NotEnumerable(ring.describe()));
    }
    FiniteTable::new(ring)
}

/// No nonzero nilpotents. Infinite rings: domains are reduced outright;
/// otherwise `a² = 0 ⟹ a = 0` is tested on samples and small elements.
pub fn is_reduced<R: CommRing>(ring: &R, opts: &CheckOptions) -> Result<PropertyReport> {
    if ring.is_enumerable() {
        let nil = special_elements(ring)?.nilpotents;
        let witness = nil.iter().find(|a| !ring.is_zero(a)).map(|a| ring.format_elem(a));
        return Ok(report(ring, Property::Reduced, witness.is_none(), witness, Method::Exhaustive));
    }
    if ring.is_known_domain() {
        let method = Method::TheoremBacked("integral domain".into());
        return Ok(report(ring, Property::Reduced, true, None, method));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut candidates: Vec<R::Elem> = (0..opts.samples).map(|_| ring.sample(&mut rng, ring.sample_bound())).collect();
    candidates.extend(ring.small_elements(ring.sweep_bound())?);
    let witness = candidates
        .iter()
        .find(|a| !ring.is_zero(a) && ring.is_zero(&ring.mul(a, a)))
        .map(|a| ring.format_elem(a));
    let mut r = report(ring, Property::Reduced, witness.is_none(), witness, Method::Sampled);
    r.evidence.push(format!("{} elements with a² = 0 ⟹ a = 0 tested", candidates.len()));
    Ok(r)
}

/// Every `a` has some `b` with `a = a²b`.
pub fn is_vnr<R: CommRing>(ring: &R, _opts: &CheckOptions) -> Result<PropertyReport> {
    let t = finite_table(ring)?;
    let n = t.len();
    let witness = (0..n)
        .find(|&a| {
            let sq = t.mul(a, a);
            !(0..n).any(|b| t.mul(sq, b) == a)
        })
        .map(|a| ring.format_elem(t.elem(a)));
    Ok(report(ring, Property::Vnr, witness.is_none(), witness, Method::Exhaustive))
}

/// Both sides of "VNR ⟺ reduced and every prime maximal".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VnrCrosscheck {
    pub vnr: bool,
    pub reduced: bool,
    pub dimension_zero: bool,
    pub agrees: bool,
}

pub fn vnr_characterization_crosscheck<R: CommRing>(ring: &R, opts: &CheckOptions) -> Result<VnrCrosscheck> {
    let vnr = is_vnr(ring, opts)?.verdict;
    let reduced = is_reduced(ring, opts)?.verdict;
    let dimension_zero = spectrum(ring, opts.cap)?.iter().all(|p| p.maximal);
    Ok(VnrCrosscheck {
        vnr,
        reduced,
        dimension_zero,
        agrees: vnr == (reduced && dimension_zero),
    })
}

/// Exactly one maximal ideal.
pub fn is_local<R: CommRing>(ring: &R, opts: &CheckOptions) -> Result<PropertyReport> {
    finite_table(ring)?;
    let maximal: Vec<String> = spectrum(ring, opts.cap)?
        .into_iter()
        .filter(|p| p.maximal)
        .map(|p| p.ideal.describe())
        .collect();
    let verdict = maximal.len() == 1;
    let witness = (!verdict).then(|| maximal.join(" "));
    let mut r = report(ring, Property::Local, verdict, witness, Method::Exhaustive);
    r.evidence.push(format!("maximal ideals: {}", maximal.join(" ")));
    Ok(r)
}

/// Finite rings are Noetherian, and a Noetherian ring is semisimple iff it
/// is von Neumann regular.
pub fn is_semisimple<R: CommRing>(ring: &R, opts: &CheckOptions) -> Result<PropertyReport> {
    let vnr = is_vnr(ring, opts)?;
    let method = Method::TheoremBacked("finite ⟹ Noetherian; Noetherian and von Neumann regular ⟺ semisimple".into());
    Ok(report(ring, Property::Semisimple, vnr.verdict, vnr.witness, method))
}

/// Finite rings are artinian, hence perfect; the principal-chain probe is
/// attached as corroboration.
pub fn is_perfect<R: CommRing>(ring: &R, _opts: &CheckOptions) -> Result<PropertyReport> {
    finite_table(ring)?;
    let probe = perfect_probe(ring)?;
    let method = Method::TheoremBacked("finite ⟹ artinian ⟹ perfect".into());
    let mut r = report(ring, Property::Perfect, probe.stabilizes, None, method);
    r.evidence.push(format!("principal chains (a) ⊇ (a²) ⊇ … stabilize by depth {}", probe.depth));
    Ok(r)
}

/// Steinitz rings are exactly the perfect local rings.
pub fn is_steinitz<R: CommRing>(ring: &R, opts: &CheckOptions) -> Result<PropertyReport> {
    let perfect = is_perfect(ring, opts)?;
    let local = is_local(ring, opts)?;
    let method = Method::TheoremBacked("Steinitz ⟺ perfect and local".into());
    let witness = if !local.verdict { local.witness.clone() } else { perfect.witness.clone() };
    let mut r = report(ring, Property::Steinitz, perfect.verdict && local.verdict, witness, method);
    r.evidence.push(format!("perfect: {}", perfect.verdict));
    r.evidence.push(format!("local: {}", local.verdict));
    r.evidence.extend(perfect.evidence);
    r.evidence.extend(local.evidence);
    Ok(r)
}

/// Up to three generator lists `[x₁]`, `[x₁, x₂]`, `[x₁, x₂, x₃]` drawn
/// from the nonzero non-units, shortened when `|R|ⁿ` exceeds the kernel cap.
fn sample_generator_sets<R: CommRing>(ring: &R) -> Result<Vec<Vec<R::Elem>>> {
    let n = ring.cardinality().expect("finite ring");
    let units = special_elements(ring)?.units;
    let mut pool: Vec<R::Elem> = ring
        .elements()?
        .into_iter()
        .filter(|a| !ring.is_zero(a) && !units.contains(a))
        .collect();
    if pool.is_empty() {
        pool.push(ring.one());
    }
    let max_rank = (1..=3usize)
        .take_while(|&k| n.checked_pow(k as u32).is_some_and(|s| s <= DEFAULT_KERNEL_CAP))
        .last()
        .unwrap_or(1);
    Ok((1..=3usize)
        .map(|k| {
            let rank = k.min(max_rank);
            let start = k - rank;
            (0..rank).map(|j| pool[(start + j) % pool.len()].clone()).collect()
        })
        .collect())
}

fn noetherian_like<R: CommRing>(ring: &R, property: Property) -> Result<PropertyReport> {
    if !ring.is_enumerable() {
        if ring.is_pid() {
            let method = Method::TheoremBacked("principal ideal domain".into());
            return Ok(report(ring, property, true, None, method));
        }
        return Err(Error::NotEnumerable(ring.describe()));
    }
    let justification = match property {
        Property::Coherent => "finite ⟹ Noetherian ⟹ coherent",
        _ => "finite ⟹ Noetherian",
    };
    let mut r = report(ring, property, true, None, Method::TheoremBacked(justification.into()));
    for gens in sample_generator_sets(ring)? {
        let names: Vec<String> = gens.iter().map(|g| ring.format_elem(g)).collect();
        let map = ModuleMap::onto_span(ring, gens)?;
        let kernel = kernel_generators(&map, DEFAULT_KERNEL_CAP)?;
        let kernel_gens: Vec<String> = kernel
            .generators
            .iter()
            .map(|t| format!("({})", t.iter().map(|x| ring.format_elem(x)).collect::<Vec<_>>().join(",")))
            .collect();
        r.evidence.push(format!(
            "presentation kernel of ({}) generated by [{}]",
            names.join(","),
            kernel_gens.join(", ")
        ));
    }
    Ok(r)
}

pub fn is_coherent<R: CommRing>(ring: &R, _opts: &CheckOptions) -> Result<PropertyReport> {
    noetherian_like(ring, Property::Coherent)
}

pub fn is_noetherian<R: CommRing>(ring: &R, _opts: &CheckOptions) -> Result<PropertyReport> {
    noetherian_like(ring, Property::Noetherian)
}

pub fn check_property<R: CommRing>(ring: &R, property: Property, opts: &CheckOptions) -> Result<PropertyReport> {
    match property {
        Property::Reduced => is_reduced(ring, opts),
        Property::Vnr => is_vnr(ring, opts),
        Property::Local => is_local(ring, opts),
        Property::Semisimple => is_semisimple(ring, opts),
        Property::Perfect => is_perfect(ring, opts),
        Property::Steinitz => is_steinitz(ring, opts),
        Property::Coherent => is_coherent(ring, opts),
        Property::Noetherian => is_noetherian(ring, opts),
    }
}

/// Biconditional transfer statements `R has P ⟺ R ⋈ I has P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Theorem {
    #[serde(rename = "vnr-transfer")]
    Vnr,
    #[serde(rename = "semisimple-transfer")]
    Semisimple,
    #[serde(rename = "perfect-transfer")]
    Perfect,
    #[serde(rename = "local-transfer")]
    Local,
    #[serde(rename = "steinitz-transfer")]
    Steinitz,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [
        Theorem::Vnr,
        Theorem::Semisimple,
        Theorem::Perfect,
        Theorem::Local,
        Theorem::Steinitz,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Vnr => "vnr-transfer",
            Theorem::Semisimple => "semisimple-transfer",
            Theorem::Perfect => "perfect-transfer",
            Theorem::Local => "local-transfer",
            Theorem::Steinitz => "steinitz-transfer",
        }
    }

    pub fn property(self) -> Property {
        match self {
            Theorem::Vnr => Property::Vnr,
            Theorem::Semisimple => Property::Semisimple,
            Theorem::Perfect => Property::Perfect,
            Theorem::Local => Property::Local,
            Theorem::Steinitz => Property::Steinitz,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferRecord {
    pub theorem: Theorem,
    pub base: PropertyReport,
    pub dup: PropertyReport,
    pub agreement: bool,
    /// Set when the statement rests on a fact verified only on examples.
    pub note: Option<String>,
}

pub fn verify_transfer<R: CommRing>(
    theorem: Theorem,
    base: &R,
    ideal: &Ideal<R>,
    opts: &CheckOptions,
) -> Result<TransferRecord> {
    let dup = DupRing::new(base, ideal)?;
    let property = theorem.property();
    let b = check_property(base, property, opts)?;
    let d = check_property(&dup, property, opts)?;
    let note = matches!(theorem, Theorem::Local | Theorem::Steinitz)
        .then(|| "depends on local transfer, checked on examples only".to_string());
    Ok(TransferRecord {
        theorem,
        agreement: b.verdict == d.verdict,
        base: b,
        dup: d,
        note,
    })
}
