//! The suite behind `verify --suite paper`: every transfer statement,
//! identity and worked example, run over the built-in corpus.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use amalgam_core::duplication::{
    descend_prime, iso_dup_idealization, lift_prime, quotient_by_oi, Component, DupElem, LiftCase,
};
use amalgam_core::homology::{
    annihilator_dup, presentation_kernel_check, verify_periodic_resolution, CheckStatus,
    ResolutionReport, DEFAULT_KERNEL_CAP,
};
use amalgam_core::ideal::{annihilator, spectrum, Ideal};
use amalgam_core::properties::{
    is_local, is_perfect, is_steinitz, is_vnr, vnr_characterization_crosscheck, verify_transfer,
    CheckOptions, Theorem, TransferRecord,
};
use amalgam_core::ring::{make_ring, parse_ideal_gens, ModRing};
use amalgam_core::{AnyElem, AnyRing, CommRing, DupRing, Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::corpus::{builtin_corpus, Instance, MAX_DUP_SIZE};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 1000;
/// Rings up to this size get exhaustive axiom checks over all triples.
pub const EXHAUSTIVE_AXIOM_LIMIT: u128 = 16;
/// Sampled triples per ring above that size.
pub const AXIOM_TRIPLES: usize = 10_000;
/// Largest `n` for the `Z/n` oracle sweep.
pub const ORACLE_MODULUS_LIMIT: u64 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

/// One verdict. `criterion` groups checks into the suite's ten headings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub subject: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumRow {
    pub prime: String,
    pub case: LiftCase,
    pub lifts: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumCorrespondence {
    pub entry: String,
    pub dup: String,
    pub rows: Vec<SpectrumRow>,
    pub dup_primes: usize,
    /// `#{I ⊆ P} + 2·#{I ⊄ P}`.
    pub expected_primes: usize,
    pub sets_equal: bool,
    pub descent_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferEntry {
    pub entry: String,
    pub records: Vec<TransferRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionEntry {
    pub entry: String,
    pub report: ResolutionReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub tool: String,
    pub version: String,
    pub schema_version: u32,
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub transfers: Vec<TransferEntry>,
    pub spectra: Vec<SpectrumCorrespondence>,
    pub resolutions: Vec<ResolutionEntry>,
    pub checks: Vec<Check>,
    pub summary: Summary,
    /// Wall-clock time per criterion; kept out of the JSON document so that
    /// reports are reproducible byte for byte.
    #[serde(skip)]
    pub elapsed: Vec<(u8, Duration)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn checks_for(&self, criterion: u8) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.criterion == criterion)
    }
}

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "von Neumann regularity transfers"),
    (2, "primes of R ⋈ I are the lifts of primes of R"),
    (3, "periodic resolution over infinite domains"),
    (4, "annihilator (0 : (m,0)) = O₁"),
    (5, "duplication along a square-zero ideal is the idealization"),
    (6, "(R ⋈ I)/Oᵢ ≅ R and O₁ ∩ O₂ = 0"),
    (7, "GF(2)[x]/(x²) ⋈ (x) is Steinitz"),
    (8, "presentation kernels"),
    (9, "cross-oracle coherence"),
    (10, "determinism"),
];

struct Collector {
    checks: Vec<Check>,
}

impl Collector {
    fn push(&mut self, criterion: u8, name: &str, subject: &str, status: CheckStatus, detail: impl Into<String>) {
        self.checks.push(Check {
            criterion,
            name: name.into(),
            subject: subject.into(),
            status,
            detail: detail.into(),
        });
    }

    fn verdict(&mut self, criterion: u8, name: &str, subject: &str, ok: bool, detail: impl Into<String>) {
        let status = if ok { CheckStatus::Passed } else { CheckStatus::Failed };
        self.push(criterion, name, subject, status, detail);
    }

    fn error(&mut self, criterion: u8, name: &str, subject: &str, err: &Error) {
        self.push(criterion, name, subject, CheckStatus::Failed, format!("error: {err}"));
    }

    /// Records `Err` as a failed check and passes `Ok` through.
    fn guard<T>(&mut self, criterion: u8, name: &str, subject: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.error(criterion, name, subject, &e);
                None
            }
        }
    }
}

fn finite(instances: &[Instance]) -> impl Iterator<Item = &Instance> {
    instances.iter().filter(|i| i.dup.is_enumerable())
}

fn infinite(instances: &[Instance]) -> impl Iterator<Item = &Instance> {
    instances.iter().filter(|i| !i.dup.is_enumerable())
}

fn transfers(instances: &[Instance], col: &mut Collector) -> Vec<TransferEntry> {
    let opts = CheckOptions::default();
    let mut out = Vec::new();
    for inst in finite(instances) {
        let id = &inst.entry.id;
        let mut records = Vec::new();
        for theorem in Theorem::ALL {
            let criterion = if theorem == Theorem::Vnr { 1 } else { 9 };
            let name = theorem.id();
            if let Some(rec) = col.guard(criterion, name, id, verify_transfer(theorem, &inst.base, &inst.ideal, &opts)) {
                let detail = format!("R: {}, R ⋈ I: {}", rec.base.verdict, rec.dup.verdict);
                col.verdict(criterion, name, id, rec.agreement, detail);
                records.push(rec);
            }
        }
        out.push(TransferEntry {
            entry: id.clone(),
            records,
        });
    }
    out
}

fn element_sets(ideals: &[&Ideal<DupRing<AnyRing>>]) -> BTreeSet<Vec<DupElem<AnyElem>>> {
    ideals
        .iter()
        .map(|p| p.elements().expect("finite ideal").to_vec())
        .collect()
}

/// Lifts every prime of `R` and compares the lifts with an independent
/// enumeration of `Spec(R ⋈ I)`.
pub fn spectrum_correspondence(inst: &Instance, cap: u128) -> Result<SpectrumCorrespondence> {
    let base_primes = spectrum(&inst.base, cap)?;
    let mut rows = Vec::new();
    let mut lifted = Vec::new();
    for point in &base_primes {
        lifted.push(lift_prime(&inst.dup, &point.ideal)?);
    }
    let mut expected = 0;
    for lift in &lifted {
        let lifts = lift.lifts();
        expected += match lift.case {
            LiftCase::ContainsI => 1,
            LiftCase::NotContainsI => 2,
        };
        rows.push(SpectrumRow {
            prime: lift.base_prime.describe(),
            case: lift.case,
            lifts: lifts.iter().map(|q| q.describe()).collect(),
        });
    }
    let all_lifts: Vec<&Ideal<DupRing<AnyRing>>> = lifted.iter().flat_map(|l| l.lifts()).collect();
    let dup_primes = spectrum(&inst.dup, cap)?;
    let found: Vec<&Ideal<DupRing<AnyRing>>> = dup_primes.iter().map(|p| &p.ideal).collect();
    let mut descent_matches = true;
    for q in &found {
        descent_matches &= descend_prime(&inst.dup, q)?.matches_lift;
    }
    Ok(SpectrumCorrespondence {
        entry: inst.entry.id.clone(),
        dup: inst.dup.describe(),
        rows,
        dup_primes: found.len(),
        expected_primes: expected,
        sets_equal: element_sets(&all_lifts) == element_sets(&found),
        descent_matches,
    })
}

fn spectra(instances: &[Instance], col: &mut Collector) -> Vec<SpectrumCorrespondence> {
    let mut out = Vec::new();
    for inst in finite(instances) {
        let id = &inst.entry.id;
        if let Some(sc) = col.guard(2, "spectrum-lifting", id, spectrum_correspondence(inst, MAX_DUP_SIZE)) {
            let detail = format!("|Spec(R ⋈ I)| = {}, lifts give {}", sc.dup_primes, sc.expected_primes);
            col.verdict(2, "spectrum-lifting", id, sc.sets_equal, detail.clone());
            col.verdict(2, "spectrum-count", id, sc.dup_primes == sc.expected_primes, detail);
            col.verdict(2, "prime-descent", id, sc.descent_matches, "every prime contracts and re-lifts to itself");
            out.push(sc);
        }
    }
    out
}

fn generator(inst: &Instance) -> Result<AnyElem> {
    match inst.ideal.generators() {
        [a] => Ok(a.clone()),
        _ => Err(Error::Parse(format!("{} is not principal", inst.entry.ideal))),
    }
}

fn status_detail(status: CheckStatus, samples: usize, sweep: usize, disagreements: usize) -> String {
    match status {
        CheckStatus::Skipped => "skipped: no samples requested".into(),
        _ => format!("{samples} samples + {sweep} sweep elements, {disagreements} disagreements"),
    }
}

fn resolutions(instances: &[Instance], opts: &SuiteOptions, col: &mut Collector) -> Vec<ResolutionEntry> {
    let mut out = Vec::new();
    for inst in infinite(instances) {
        let id = &inst.entry.id;
        let report = generator(inst).and_then(|a| verify_periodic_resolution(&inst.base, &a, opts.samples, opts.seed));
        let Some(report) = col.guard(3, "periodic-resolution", id, report) else {
            continue;
        };
        for (name, cert) in [("ker-u-equals-O2", &report.ker_u_equals_o2), ("ker-v-equals-O1", &report.ker_v_equals_o1)] {
            col.push(3, name, id, cert.status, status_detail(cert.status, cert.samples, cert.sweep, cert.disagreements));
        }
        col.verdict(3, "O1-not-idempotent-generated", id, !report.o1_idempotent_generated, "domain idempotent lemma");
        col.verdict(3, "O2-not-idempotent-generated", id, !report.o2_idempotent_generated, "domain idempotent lemma");
        let pd = format!("{:?}", report.pd_verdict);
        if opts.samples == 0 {
            col.push(3, "pd-verdict", id, CheckStatus::Skipped, pd);
        } else {
            let periodic = report.pd_verdict == amalgam_core::homology::PdVerdict::InfinitePeriodic;
            col.verdict(3, "pd-verdict", id, periodic, pd);
        }
        out.push(ResolutionEntry {
            entry: id.clone(),
            report,
        });
    }
    out
}

fn is_regular(ring: &AnyRing, m: &AnyElem) -> Result<bool> {
    Ok(ring.elements()?.iter().all(|r| ring.is_zero(r) || !ring.is_zero(&ring.mul(r, m))))
}

fn annihilators(instances: &[Instance], opts: &SuiteOptions, col: &mut Collector) {
    let samples = opts.samples / 2;
    for inst in infinite(instances) {
        let id = &inst.entry.id;
        let result = generator(inst).and_then(|a| annihilator_dup(&inst.dup, &inst.dup.o2_elem(a), samples, opts.seed));
        if let Some(res) = col.guard(4, "annihilator-equals-O1", id, result) {
            let cert = res.certificate.expect("sampled certificate");
            col.push(4, "annihilator-equals-O1", id, res.equals_o1, status_detail(cert.status, cert.samples, cert.sweep, cert.disagreements));
        }
    }
    for inst in finite(instances) {
        let id = &inst.entry.id;
        let members = inst.ideal.elements().expect("finite ideal").to_vec();
        let mut regular = None;
        for m in &members {
            match is_regular(&inst.base, m) {
                Ok(true) => {
                    regular = Some(m.clone());
                    break;
                }
                Ok(false) => {}
                Err(e) => col.error(4, "annihilator-equals-O1", id, &e),
            }
        }
        match regular {
            Some(m) => {
                if let Some(res) = col.guard(4, "annihilator-equals-O1", id, annihilator_dup(&inst.dup, &inst.dup.o2_elem(m), 0, 0)) {
                    col.push(4, "annihilator-equals-O1", id, res.equals_o1, "exhaustive");
                }
            }
            None => col.push(4, "annihilator-equals-O1", id, CheckStatus::Skipped, "no regular element in I"),
        }
        // without a regular m the identity becomes (0 : (m,0)) = π₁⁻¹(0 : m)
        let mut ok = true;
        for m in &members {
            let c = inst.dup.o2_elem(m.clone());
            let Some(lhs) = col.guard(4, "annihilator-general-form", id, annihilator(&inst.dup, &c)) else {
                ok = false;
                break;
            };
            let Some(ann_m) = col.guard(4, "annihilator-general-form", id, annihilator(&inst.base, m)) else {
                ok = false;
                break;
            };
            let expect: Vec<_> = inst
                .dup
                .elements()
                .unwrap_or_default()
                .into_iter()
                .filter(|e| ann_m.contains(&e.base).unwrap_or(false))
                .collect();
            ok &= lhs.elements() == Some(expect.as_slice());
        }
        col.verdict(4, "annihilator-general-form", id, ok, format!("(0 : (m,0)) = π₁⁻¹(0 : m) for all {} m ∈ I", members.len()));
    }
}

fn idealizations(instances: &[Instance], col: &mut Collector) {
    for inst in finite(instances).filter(|i| i.entry.has_tag("square-zero")) {
        let id = &inst.entry.id;
        if let Some(check) = col.guard(5, "idealization-isomorphism", id, iso_dup_idealization(&inst.base, &inst.ideal)) {
            let detail = match &check.counterexample {
                Some(c) => c.clone(),
                None => format!("{} pairs checked", check.pairs_checked),
            };
            col.verdict(5, "idealization-isomorphism", id, check.holds, detail);
        }
    }
}

fn quotients(instances: &[Instance], col: &mut Collector) {
    for inst in finite(instances) {
        let id = &inst.entry.id;
        for (name, which) in [("quotient-by-O1", Component::First), ("quotient-by-O2", Component::Second)] {
            if let Some((_, check)) = col.guard(6, name, id, quotient_by_oi(&inst.dup, which)) {
                let detail = check.counterexample.clone().unwrap_or_else(|| format!("{} pairs checked", check.pairs_checked));
                col.verdict(6, name, id, check.holds, detail);
            }
        }
        let meet = inst
            .dup
            .o1()
            .and_then(|o1| o1.intersection(&inst.dup.o2()?))
            .and_then(|m| m.is_zero());
        if let Some(zero) = col.guard(6, "O1-meet-O2-zero", id, meet) {
            col.verdict(6, "O1-meet-O2-zero", id, zero, "O₁ ∩ O₂");
        }
    }
}

fn steinitz_example(col: &mut Collector) {
    let subject = "gf2x-x2";
    let mut run = || -> Result<()> {
        let inst = crate::corpus::find(subject).expect("corpus entry").instantiate()?;
        let opts = CheckOptions::default();
        let size = inst.dup.cardinality();
        col.verdict(7, "cardinality", subject, size == Some(8), format!("|R ⋈ I| = {size:?}"));
        let local = is_local(&inst.dup, &opts)?;
        col.verdict(7, "local", subject, local.verdict, local.evidence.join("; "));
        let perfect = is_perfect(&inst.dup, &opts)?;
        col.verdict(7, "perfect", subject, perfect.verdict, perfect.evidence.join("; "));
        let steinitz = is_steinitz(&inst.dup, &opts)?;
        col.verdict(7, "steinitz", subject, steinitz.verdict, "perfect and local");
        let rec = verify_transfer(Theorem::Steinitz, &inst.base, &inst.ideal, &opts)?;
        col.verdict(7, "steinitz-transfer", subject, rec.agreement && rec.base.verdict, format!("R: {}, R ⋈ I: {}", rec.base.verdict, rec.dup.verdict));
        Ok(())
    };
    if let Err(e) = run() {
        col.error(7, "steinitz", subject, &e);
    }
}

/// `(entry, generators of J)` instances for the presentation-kernel check.
pub const PRESENTATION_INSTANCES: [(&str, &str); 4] = [("z8-2", "2"), ("z6-2", "3"), ("z12-2", "2,3"), ("z6-2", "1")];

fn presentations(col: &mut Collector) {
    for (id, gens) in PRESENTATION_INSTANCES {
        let subject = format!("{id} a=[{gens}]");
        let run = || -> Result<_> {
            let inst = crate::corpus::find(id).expect("corpus entry").instantiate()?;
            let a = parse_ideal_gens(&inst.base, gens)?;
            presentation_kernel_check(&inst.dup, &a, DEFAULT_KERNEL_CAP)
        };
        if let Some(check) = col.guard(8, "presentation-kernel", &subject, run()) {
            let detail = format!("|ker u| = {}, characterization = {}", check.kernel_size, check.characterization_size);
            col.verdict(8, "presentation-kernel", &subject, check.holds, detail);
        }
    }
}

fn squarefree(n: u64) -> bool {
    (2..=n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d * d))
}

fn crosschecks(instances: &[Instance], col: &mut Collector) {
    let opts = CheckOptions::default();
    for n in 2..=ORACLE_MODULUS_LIMIT {
        let subject = format!("Z/{n}");
        let r = ModRing::new(n).expect("n ≥ 2");
        if let Some(rep) = col.guard(9, "vnr-squarefree-oracle", &subject, is_vnr(&r, &opts)) {
            col.verdict(9, "vnr-squarefree-oracle", &subject, rep.verdict == squarefree(n), format!("vnr {}", rep.verdict));
        }
        if let Some(cc) = col.guard(9, "vnr-characterization", &subject, vnr_characterization_crosscheck(&r, &opts)) {
            col.verdict(9, "vnr-characterization", &subject, cc.agrees, format!("{cc:?}"));
        }
    }
    for inst in finite(instances) {
        for (subject, ring) in [(inst.base.describe(), &inst.base), (inst.dup.describe(), &AnyRing::from(inst.dup.clone()))] {
            if let Some(cc) = col.guard(9, "vnr-characterization", &subject, vnr_characterization_crosscheck(ring, &opts)) {
                col.verdict(9, "vnr-characterization", &subject, cc.agrees, format!("{cc:?}"));
            }
        }
    }
}

fn axiom_violation<R: CommRing>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> Option<&'static str> {
    if r.add(&r.add(a, b), c) != r.add(a, &r.add(b, c)) {
        return Some("additive associativity");
    }
    if r.mul(&r.mul(a, b), c) != r.mul(a, &r.mul(b, c)) {
        return Some("multiplicative associativity");
    }
    if r.mul(a, &r.add(b, c)) != r.add(&r.mul(a, b), &r.mul(a, c)) {
        return Some("distributivity");
    }
    if r.mul(a, b) != r.mul(b, a) || r.add(a, b) != r.add(b, a) {
        return Some("commutativity");
    }
    if !r.is_zero(&r.add(a, &r.neg(a))) {
        return Some("additive inverse");
    }
    if r.mul(&r.one(), a) != *a || r.add(&r.zero(), a) != *a {
        return Some("identities");
    }
    None
}

/// Ring axioms on all triples of small rings, and on seeded triples of
/// larger or infinite ones.
pub fn check_axioms<R: CommRing>(ring: &R, seed: u64, triples: usize) -> Result<(usize, Option<String>)> {
    let fail = |a: &R::Elem, b: &R::Elem, c: &R::Elem, law: &str| {
        format!("{law} fails at ({}, {}, {})", ring.format_elem(a), ring.format_elem(b), ring.format_elem(c))
    };
    if ring.cardinality().is_some_and(|n| n <= EXHAUSTIVE_AXIOM_LIMIT) {
        let elems = ring.elements()?;
        let mut count = 0;
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    count += 1;
                    if let Some(law) = axiom_violation(ring, a, b, c) {
                        return Ok((count, Some(fail(a, b, c, law))));
                    }
                }
            }
        }
        return Ok((count, None));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..triples {
        let mut draw = || ring.sample(&mut rng, ring.sample_bound());
        let (a, b, c) = (draw(), draw(), draw());
        if let Some(law) = axiom_violation(ring, &a, &b, &c) {
            return Ok((k + 1, Some(fail(&a, &b, &c, law))));
        }
    }
    Ok((triples, None))
}

fn axioms(instances: &[Instance], opts: &SuiteOptions, col: &mut Collector) {
    let mut rings: Vec<AnyRing> = Vec::new();
    for inst in instances {
        for r in [inst.base.clone(), AnyRing::from(inst.dup.clone())] {
            if !rings.contains(&r) {
                rings.push(r);
            }
        }
    }
    for (k, ring) in rings.iter().enumerate() {
        let subject = ring.describe();
        let small = ring.cardinality().is_some_and(|n| n <= EXHAUSTIVE_AXIOM_LIMIT);
        if !small && opts.samples == 0 {
            col.push(9, "ring-axioms", &subject, CheckStatus::Skipped, "skipped: no samples requested");
            continue;
        }
        let seed = opts.seed.wrapping_add(k as u64);
        if let Some((count, failure)) = col.guard(9, "ring-axioms", &subject, check_axioms(ring, seed, AXIOM_TRIPLES)) {
            let how = if small { "exhaustive" } else { "sampled" };
            let detail = failure.clone().unwrap_or_else(|| format!("{count} triples, {how}"));
            col.verdict(9, "ring-axioms", &subject, failure.is_none(), detail);
        }
    }
}

fn summarize(checks: &[Check]) -> Summary {
    let mut s = Summary::default();
    for c in checks {
        match c.status {
            CheckStatus::Passed => s.passed += 1,
            CheckStatus::Failed => s.failed += 1,
            CheckStatus::Skipped => s.skipped += 1,
        }
    }
    s
}

/// Builds every corpus entry; entries that fail to build become failed
/// checks and are left out of the run.
pub fn instances(col_checks: &mut Vec<Check>) -> Vec<Instance> {
    let mut col = Collector { checks: Vec::new() };
    let out = builtin_corpus()
        .into_iter()
        .filter_map(|e| {
            let id = e.id.clone();
            col.guard(9, "corpus-entry", &id, e.instantiate())
        })
        .collect();
    col_checks.extend(col.checks);
    out
}

pub fn run_builtin_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut col = Collector { checks: Vec::new() };
    let instances = instances(&mut col.checks);
    let mut elapsed = Vec::new();
    let mut timed = |criterion: u8, col: &mut Collector, f: &mut dyn FnMut(&mut Collector)| {
        let start = Instant::now();
        f(col);
        elapsed.push((criterion, start.elapsed()));
    };

    let mut transfer_entries = Vec::new();
    let mut spectrum_entries = Vec::new();
    let mut resolution_entries = Vec::new();
    timed(1, &mut col, &mut |c| transfer_entries = transfers(&instances, c));
    timed(2, &mut col, &mut |c| spectrum_entries = spectra(&instances, c));
    timed(3, &mut col, &mut |c| resolution_entries = resolutions(&instances, opts, c));
    timed(4, &mut col, &mut |c| annihilators(&instances, opts, c));
    timed(5, &mut col, &mut |c| idealizations(&instances, c));
    timed(6, &mut col, &mut |c| quotients(&instances, c));
    timed(7, &mut col, &mut |c| steinitz_example(c));
    timed(8, &mut col, &mut |c| presentations(c));
    timed(9, &mut col, &mut |c| {
        crosschecks(&instances, c);
        axioms(&instances, opts, c);
        for inst in &instances {
            let reparsed = make_ring(&inst.dup.describe()).map(|r| r.describe() == inst.dup.describe());
            if let Some(ok) = c.guard(9, "spec-round-trip", &inst.entry.id, reparsed) {
                c.verdict(9, "spec-round-trip", &inst.entry.id, ok, inst.dup.describe());
            }
        }
    });

    let mut checks = col.checks;
    checks.sort_by_key(|c| c.criterion);
    SuiteReport {
        tool: "amalgam".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        schema_version: SCHEMA_VERSION,
        suite: "paper".into(),
        seed: opts.seed,
        samples: opts.samples,
        transfers: transfer_entries,
        spectra: spectrum_entries,
        resolutions: resolution_entries,
        summary: summarize(&checks),
        checks,
        elapsed,
    }
}
