//! The `report`, `spectrum` and `verify` commands, each producing a
//! rendered document and an exit status.

use std::fmt::Write as _;

use amalgam_core::homology::CheckStatus;
use amalgam_core::properties::{check_property, CheckOptions, Method, Property, PropertyReport};
use amalgam_core::ring::{make_ring, parse_ideal_gens};
use amalgam_core::{CommRing, DupRing, Error, Ideal};
use serde::Serialize;

use crate::corpus::{CorpusEntry, Instance};
use crate::suite::{run_builtin_suite, spectrum_correspondence, SpectrumCorrespondence, SuiteOptions, SuiteReport, CRITERIA, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    CheckFailure = 1,
    Usage = 2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(err: impl std::fmt::Display) -> Self {
        Outcome {
            status: Status::Usage,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommonOptions {
    pub seed: u64,
    pub samples: usize,
    pub format: Format,
    pub cap: u128,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub ring: String,
    pub property: Property,
    pub report: Option<PropertyReport>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub schema_version: u32,
    pub ring: String,
    pub ideal: Option<String>,
    pub dup: Option<String>,
    pub results: Vec<PropertyOutcome>,
}

fn method_name(m: &Method) -> String {
    match m {
        Method::Exhaustive => "exhaustive".into(),
        Method::Sampled => "sampled".into(),
        Method::TheoremBacked(why) => format!("theorem-backed ({why})"),
    }
}

fn outcome<R: CommRing>(ring: &R, property: Property, opts: &CheckOptions) -> PropertyOutcome {
    let (report, error) = match check_property(ring, property, opts) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e.to_string())),
    };
    PropertyOutcome {
        ring: ring.describe(),
        property,
        report,
        error,
    }
}

pub fn cmd_report(spec: &str, ideal: Option<&str>, props: &[String], common: &CommonOptions) -> Outcome {
    let properties: Vec<Property> = if props.is_empty() {
        Property::ALL.to_vec()
    } else {
        match props.iter().map(|p| p.parse()).collect::<Result<_, Error>>() {
            Ok(v) => v,
            Err(e) => return Outcome::usage(e),
        }
    };
    let base = match make_ring(spec) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let dup = match ideal {
        None => None,
        Some(gens) => {
            let built = parse_ideal_gens(&base, gens)
                .and_then(|g| Ideal::new(&base, g))
                .and_then(|i| DupRing::new(&base, &i));
            match built {
                Ok(d) => Some(d),
                Err(e) => return Outcome::usage(e),
            }
        }
    };
    let opts = CheckOptions {
        cap: common.cap,
        samples: common.samples,
        seed: common.seed,
    };
    let mut results = Vec::new();
    for &p in &properties {
        results.push(outcome(&base, p, &opts));
        if let Some(d) = &dup {
            results.push(outcome(d, p, &opts));
        }
    }
    let doc = ReportDocument {
        tool: "amalgam".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        schema_version: SCHEMA_VERSION,
        ring: base.describe(),
        ideal: ideal.map(str::to_string),
        dup: dup.as_ref().map(|d| d.describe()),
        results,
    };
    let failed = doc.results.iter().any(|r| r.error.is_some());
    let stdout = match common.format {
        Format::Json => to_json(&doc),
        Format::Table => render_report(&doc),
    };
    Outcome {
        status: if failed { Status::CheckFailure } else { Status::Pass },
        stdout,
        stderr: String::new(),
    }
}

fn render_report(doc: &ReportDocument) -> String {
    let width = doc.results.iter().map(|r| r.ring.chars().count()).max().unwrap_or(4).max(4);
    let mut out = String::new();
    let _ = writeln!(out, "{:<width$}  {:<10}  {:<7}  {:<8}  method", "ring", "property", "verdict", "witness");
    for r in &doc.results {
        match (&r.report, &r.error) {
            (Some(rep), _) => {
                let witness = rep.witness.as_deref().unwrap_or("-");
                let _ = writeln!(
                    out,
                    "{:<width$}  {:<10}  {:<7}  {:<8}  {}",
                    r.ring,
                    r.property.name(),
                    rep.verdict,
                    witness,
                    method_name(&rep.method)
                );
                for e in &rep.evidence {
                    let _ = writeln!(out, "{:<width$}    {e}", "");
                }
            }
            (None, Some(err)) => {
                let _ = writeln!(out, "{:<width$}  {:<10}  error: {err}", r.ring, r.property.name());
            }
            (None, None) => {}
        }
    }
    out
}

pub fn cmd_spectrum(spec: &str, ideal: &str, common: &CommonOptions) -> Outcome {
    let inst: Instance = match CorpusEntry::custom(spec, ideal).instantiate() {
        Ok(i) => i,
        Err(e) => return Outcome::usage(e),
    };
    let sc = match spectrum_correspondence(&inst, common.cap) {
        Ok(sc) => sc,
        Err(e @ (Error::CapExceeded { .. } | Error::NotEnumerable(_))) => {
            return Outcome {
                status: Status::CheckFailure,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            };
        }
        Err(e) => return Outcome::usage(e),
    };
    let ok = sc.sets_equal && sc.dup_primes == sc.expected_primes && sc.descent_matches;
    let stdout = match common.format {
        Format::Json => to_json(&sc),
        Format::Table => render_spectrum(&sc),
    };
    Outcome {
        status: if ok { Status::Pass } else { Status::CheckFailure },
        stdout,
        stderr: String::new(),
    }
}

fn render_spectrum(sc: &SpectrumCorrespondence) -> String {
    let width = sc.rows.iter().map(|r| r.prime.chars().count()).max().unwrap_or(5).max(5);
    let mut out = String::new();
    let _ = writeln!(out, "{}", sc.dup);
    let _ = writeln!(out, "{:<width$}  {:<12}  {:<5}  primes above", "prime", "case", "lifts");
    for r in &sc.rows {
        let case = format!("{:?}", r.case);
        let _ = writeln!(out, "{:<width$}  {:<12}  {:<5}  {}", r.prime, case, r.lifts.len(), r.lifts.join("  "));
    }
    let _ = writeln!(
        out,
        "|Spec(R ⋈ I)| = {}, expected {}; lifts equal Spec(R ⋈ I): {}; descent consistent: {}",
        sc.dup_primes, sc.expected_primes, sc.sets_equal, sc.descent_matches
    );
    out
}

pub fn cmd_verify(suite: &str, common: &CommonOptions) -> Outcome {
    if suite != "paper" {
        return Outcome::usage(format!("unknown suite {suite:?} (available: paper)"));
    }
    let report = run_builtin_suite(&SuiteOptions {
        seed: common.seed,
        samples: common.samples,
    });
    let stdout = match common.format {
        Format::Json => to_json(&report),
        Format::Table => render_suite(&report),
    };
    Outcome {
        status: if report.passed() { Status::Pass } else { Status::CheckFailure },
        stdout,
        stderr: String::new(),
    }
}

fn render_suite(report: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} suite={} seed={} samples={}",
        report.tool, report.version, report.suite, report.seed, report.samples
    );
    for (k, title) in CRITERIA {
        let checks: Vec<_> = report.checks_for(k).collect();
        if checks.is_empty() {
            continue;
        }
        let count = |s: CheckStatus| checks.iter().filter(|c| c.status == s).count();
        let (passed, failed, skipped) = (count(CheckStatus::Passed), count(CheckStatus::Failed), count(CheckStatus::Skipped));
        let elapsed = report
            .elapsed
            .iter()
            .find(|(c, _)| *c == k)
            .map(|(_, d)| format!("{:.2}s", d.as_secs_f64()))
            .unwrap_or_default();
        let mark = if failed == 0 { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{mark}] {k:>2}. {title}: {passed} passed, {failed} failed, {skipped} skipped ({elapsed})");
        for c in checks.iter().filter(|c| c.status != CheckStatus::Passed) {
            let _ = writeln!(out, "       {:?} {} {}: {}", c.status, c.name, c.subject, c.detail);
        }
    }
    let s = report.summary;
    let _ = writeln!(out, "total: {} passed, {} failed, {} skipped", s.passed, s.failed, s.skipped);
    out
}

pub fn parse_format(s: &str) -> Result<Format, String> {
    match s {
        "table" => Ok(Format::Table),
        "json" => Ok(Format::Json),
        other => Err(format!("unknown format {other:?} (expected table or json)")),
    }
}
