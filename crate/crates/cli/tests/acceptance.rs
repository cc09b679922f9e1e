//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::Duration;

use amalgam_cli::corpus::{builtin_corpus, find, MAX_DUP_SIZE};
use amalgam_cli::suite::{run_builtin_suite, SuiteOptions, SuiteReport, AXIOM_TRIPLES, EXHAUSTIVE_AXIOM_LIMIT, ORACLE_MODULUS_LIMIT};
use amalgam_core::duplication::iso_dup_idealization;
use amalgam_core::homology::{annihilator_dup, presentation_kernel_check, CheckStatus, PdVerdict, DEFAULT_KERNEL_CAP};
use amalgam_core::ideal::{spectrum, DEFAULT_LATTICE_CAP};
use amalgam_core::properties::{check_property, verify_transfer, CheckOptions, Property, Theorem};
use amalgam_core::ring::{make_ring, parse_ideal_gens};
use amalgam_core::{CommRing, Ideal};

const SEED: u64 = 42;
const SAMPLES: usize = 1000;
const ANNIHILATOR_SAMPLES: usize = 500;
const Z6_DUP_PRIMES: usize = 3;
const IDEALIZATION_PAIRS: usize = 64;
const STEINITZ_CARDINALITY: u128 = 8;
const LIMIT_C1: Duration = Duration::from_secs(10);
const LIMIT_C2: Duration = Duration::from_secs(60);
const LIMIT_C3: Duration = Duration::from_secs(5);
const LIMIT_C8: Duration = Duration::from_secs(30);
const SAMPLEABLE: [&str; 4] = ["z-2", "z-3", "gf2x-x", "gf3x-x"];

type Verdict = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn no_failed_checks(report: &SuiteReport, k: u8) -> Verdict {
    let mut checks = report.checks_for(k).peekable();
    ensure(checks.peek().is_some(), || format!("no checks recorded for criterion {k}"))?;
    match checks.find(|c| c.status == CheckStatus::Failed) {
        Some(c) => Err(format!("{} {}: {}", c.name, c.subject, c.detail)),
        None => Ok(()),
    }
}

fn within(report: &SuiteReport, k: u8, limit: Duration) -> Verdict {
    let took = report.elapsed.iter().find(|(c, _)| *c == k).map(|(_, d)| *d).unwrap_or_default();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn vnr_pair(report: &SuiteReport, id: &str, expected: bool) -> Verdict {
    let entry = report.transfers.iter().find(|t| t.entry == id).ok_or(format!("{id} missing"))?;
    let rec = entry.records.iter().find(|r| r.theorem == Theorem::Vnr).ok_or(format!("{id}: no vnr record"))?;
    ensure(rec.base.verdict == expected && rec.dup.verdict == expected, || format!("{id}: {} / {}", rec.base.verdict, rec.dup.verdict))
}

fn criterion_1(report: &SuiteReport) -> Verdict {
    no_failed_checks(report, 1)?;
    vnr_pair(report, "z6-2", true)?;
    vnr_pair(report, "z4-2", false)?;
    let finite = builtin_corpus().iter().filter(|e| !e.has_tag("sampleable")).count();
    let covered = report.transfers.iter().filter(|t| t.records.iter().any(|r| r.theorem == Theorem::Vnr && r.agreement)).count();
    ensure(covered == finite, || format!("{covered} of {finite} finite pairs agree"))?;
    within(report, 1, LIMIT_C1)
}

fn criterion_2(report: &SuiteReport) -> Verdict {
    no_failed_checks(report, 2)?;
    for e in builtin_corpus().iter().filter(|e| !e.has_tag("sampleable")) {
        let sc = report.spectra.iter().find(|s| s.entry == e.id).ok_or(format!("{} has no spectrum", e.id))?;
        ensure(sc.sets_equal && sc.dup_primes == sc.expected_primes, || format!("{}: {sc:?}", e.id))?;
    }
    let z6 = report.spectra.iter().find(|s| s.entry == "z6-2").ok_or("z6-2 missing")?;
    ensure(z6.dup_primes == Z6_DUP_PRIMES, || format!("|Spec| of Z/6 ⋈ (2) is {}", z6.dup_primes))?;
    within(report, 2, LIMIT_C2)
}

fn criterion_3(report: &SuiteReport) -> Verdict {
    no_failed_checks(report, 3)?;
    for id in SAMPLEABLE {
        let r = &report.resolutions.iter().find(|r| r.entry == id).ok_or(format!("{id} missing"))?.report;
        for cert in [&r.ker_u_equals_o2, &r.ker_v_equals_o1] {
            ensure(cert.status == CheckStatus::Passed && cert.samples == SAMPLES && cert.sweep > 0 && cert.disagreements == 0, || format!("{id}: {cert:?}"))?;
        }
        ensure(!r.o1_idempotent_generated && !r.o2_idempotent_generated, || format!("{id}: idempotent generation"))?;
        ensure(r.pd_verdict == PdVerdict::InfinitePeriodic, || format!("{id}: {:?}", r.pd_verdict))?;
    }
    within(report, 3, LIMIT_C3)
}

fn criterion_4(report: &SuiteReport) -> Verdict {
    no_failed_checks(report, 4)?;
    for id in SAMPLEABLE {
        let inst = find(id).ok_or(format!("{id} missing"))?.instantiate().map_err(|e| e.to_string())?;
        let m = inst.ideal.generators()[0].clone();
        let res = annihilator_dup(&inst.dup, &inst.dup.o2_elem(m), ANNIHILATOR_SAMPLES, SEED).map_err(|e| e.to_string())?;
        let cert = res.certificate.ok_or(format!("{id}: no certificate"))?;
        ensure(res.equals_o1 == CheckStatus::Passed && cert.samples == ANNIHILATOR_SAMPLES && cert.disagreements == 0, || format!("{id}: {cert:?}"))?;
    }
    let finite: Vec<_> = report.checks_for(4).filter(|c| c.name == "annihilator-equals-O1" && !SAMPLEABLE.contains(&c.subject.as_str())).collect();
    ensure(!finite.is_empty() && finite.iter().all(|c| c.status != CheckStatus::Failed), || "finite annihilator checks".into())
}

fn criterion_5(report: &SuiteReport) -> Verdict {
    no_failed_checks(report, 5)?;
    for (spec, gen) in [("Z/4", "2"), ("GF(2)[x]/(x^2)", "x")] {
        let base = make_ring(spec).map_err(|e| e.to_string())?;
        let ideal = parse_ideal_gens(&base, gen).and_then(|g| Ideal::new(&base, g)).map_err(|e| e.to_string())?;
        let check = iso_dup_idealization(&base, &ideal).map_err(|e| e.to_string())?;
        ensure(check.holds && check.pairs_checked == IDEALIZATION_PAIRS, || format!("{spec}: {check:?}"))?;
    }
    Ok(())
}

fn criterion_6(report: &SuiteReport) -> Verdict {
    no_failed_checks(report, 6)?;
    let finite = builtin_corpus().iter().filter(|e| !e.has_tag("sampleable")).count();
    for name in ["quotient-by-O1", "quotient-by-O2"] {
        let passed = report.checks_for(6).filter(|c| c.name == name && c.status == CheckStatus::Passed).count();
        ensure(passed == finite, || format!("{name}: {passed} of {finite}"))?;
    }
    Ok(())
}

fn criterion_7(report: &SuiteReport) -> Verdict {
    no_failed_checks(report, 7)?;
    let opts = CheckOptions::default();
    let base = make_ring("GF(2)[x]/(x^2)").map_err(|e| e.to_string())?;
    let ideal = Ideal::new(&base, vec![base.parse_elem("x").map_err(|e| e.to_string())?]).map_err(|e| e.to_string())?;
    let dup = make_ring("dup(GF(2)[x]/(x^2); x)").map_err(|e| e.to_string())?;
    ensure(dup.cardinality() == Some(STEINITZ_CARDINALITY), || format!("cardinality {:?}", dup.cardinality()))?;
    let maximal = spectrum(&dup, DEFAULT_LATTICE_CAP).map_err(|e| e.to_string())?.iter().filter(|p| p.maximal).count();
    ensure(maximal == 1, || format!("{maximal} maximal ideals"))?;
    for p in [Property::Local, Property::Perfect, Property::Steinitz] {
        let rep = check_property(&dup, p, &opts).map_err(|e| e.to_string())?;
        ensure(rep.verdict, || format!("{p} is false"))?;
    }
    let rec = verify_transfer(Theorem::Steinitz, &base, &ideal, &opts).map_err(|e| e.to_string())?;
    ensure(rec.agreement && rec.base.verdict, || format!("{rec:?}"))
}

fn criterion_8(report: &SuiteReport) -> Verdict {
    no_failed_checks(report, 8)?;
    for (id, gens) in [("z8-2", "2"), ("z6-2", "3"), ("z12-2", "2,3")] {
        let inst = find(id).ok_or(format!("{id} missing"))?.instantiate().map_err(|e| e.to_string())?;
        let a = parse_ideal_gens(&inst.base, gens).map_err(|e| e.to_string())?;
        let check = presentation_kernel_check(&inst.dup, &a, DEFAULT_KERNEL_CAP).map_err(|e| e.to_string())?;
        ensure(check.holds && check.kernel_size == check.characterization_size, || format!("{id} a=[{gens}]: {check:?}"))?;
    }
    within(report, 8, LIMIT_C8)
}

fn criterion_9(report: &SuiteReport) -> Verdict {
    no_failed_checks(report, 9)?;
    let oracle = report.checks_for(9).filter(|c| c.name == "vnr-squarefree-oracle" && c.status == CheckStatus::Passed).count();
    ensure(oracle as u64 == ORACLE_MODULUS_LIMIT - 1, || format!("squarefree oracle covered {oracle} moduli"))?;
    let axioms: Vec<_> = report.checks_for(9).filter(|c| c.name == "ring-axioms").collect();
    let mut rings = std::collections::BTreeSet::new();
    for e in builtin_corpus() {
        let inst = e.instantiate().map_err(|e| e.to_string())?;
        rings.insert(inst.base.describe());
        rings.insert(inst.dup.describe());
    }
    let rings = rings.len();
    ensure(axioms.len() == rings && axioms.iter().all(|c| c.status == CheckStatus::Passed), || format!("{} axiom checks for {rings} rings", axioms.len()))?;
    ensure(EXHAUSTIVE_AXIOM_LIMIT == 16 && AXIOM_TRIPLES == 10_000, || "axiom thresholds changed".into())?;
    ensure(MAX_DUP_SIZE == 128, || "dup size cap changed".into())
}

fn criterion_10() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_amalgam"))
            .args(["verify", "--suite", "paper", "--seed", "42", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || format!("exit {:?} / {:?}", a.status.code(), b.status.code()))?;
    ensure(a.stdout == b.stdout, || "reports differ".into())
}

fn main() -> ExitCode {
    let report = run_builtin_suite(&SuiteOptions { seed: SEED, samples: SAMPLES });
    let criteria: [Criterion; 10] = [
        ("VNR transfer", Box::new(|| criterion_1(&report))),
        ("spectrum lifting", Box::new(|| criterion_2(&report))),
        ("periodic resolution", Box::new(|| criterion_3(&report))),
        ("annihilator identity", Box::new(|| criterion_4(&report))),
        ("idealization coincidence", Box::new(|| criterion_5(&report))),
        ("quotient retraction", Box::new(|| criterion_6(&report))),
        ("Steinitz example", Box::new(|| criterion_7(&report))),
        ("presentation kernels", Box::new(|| criterion_8(&report))),
        ("cross-oracle coherence", Box::new(|| criterion_9(&report))),
        ("determinism", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS {title}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {title}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
