//! The built-in corpus of `(R, I)` pairs used by `verify`.

use amalgam_core::ring::{make_ring, parse_ideal_gens};
use amalgam_core::{AnyRing, DupRing, Ideal, Result};
use serde::Serialize;

/// Largest duplication admitted to the corpus.
pub const MAX_DUP_SIZE: u128 = 128;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub id: String,
    pub ring: String,
    /// Comma-separated generators; empty for the zero ideal.
    pub ideal: String,
    pub tags: Vec<String>,
}

/// A corpus entry with its rings built.
#[derive(Debug, Clone)]
pub struct Instance {
    pub entry: CorpusEntry,
    pub base: AnyRing,
    pub ideal: Ideal<AnyRing>,
    pub dup: DupRing<AnyRing>,
}

impl CorpusEntry {
    fn new(id: &str, ring: &str, ideal: &str, tags: &[&str]) -> Self {
        CorpusEntry {
            id: id.into(),
            ring: ring.into(),
            ideal: ideal.into(),
            tags: tags.iter().map(|t| t.to_string()).collect(),
        }
    }

    /// An entry for a user-supplied pair, identified by its ring spec.
    pub fn custom(ring: &str, ideal: &str) -> Self {
        CorpusEntry::new(ring, ring, ideal, &[])
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    pub fn instantiate(&self) -> Result<Instance> {
        let base = make_ring(&self.ring)?;
        let gens = parse_ideal_gens(&base, &self.ideal)?;
        let ideal = Ideal::new(&base, gens)?;
        let dup = DupRing::new(&base, &ideal)?;
        Ok(Instance {
            entry: self.clone(),
            base,
            ideal,
            dup,
        })
    }
}

fn squarefree(n: u64) -> bool {
    (2..=n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d * d))
}

pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in [4u64, 6, 8, 9, 12, 30] {
        for d in (2..=n).filter(|d| n % d == 0) {
            if n * (n / d) > MAX_DUP_SIZE as u64 {
                continue;
            }
            let mut tags = vec!["modular"];
            if squarefree(n) {
                tags.push("squarefree");
            }
            let (id, gen) = if d == n {
                tags.push("zero-ideal");
                (format!("z{n}-0"), "0".to_string())
            } else {
                (format!("z{n}-{d}"), d.to_string())
            };
            if (d * d) % n == 0 {
                tags.push("square-zero");
            }
            out.push(CorpusEntry::new(&id, &format!("Z/{n}"), &gen, &tags));
        }
    }
    out.extend([
        CorpusEntry::new("gf2x-x2", "GF(2)[x]/(x^2)", "x", &["worked-example", "square-zero", "local"]),
        CorpusEntry::new("gf3x-x2", "GF(3)[x]/(x^2)", "x", &["square-zero", "local"]),
        CorpusEntry::new("gf2x-x3", "GF(2)[x]/(x^3)", "x^2", &["square-zero", "local"]),
        CorpusEntry::new("gf4-0", "GF(2)[x]/(x^2+x+1)", "0", &["field", "zero-ideal", "square-zero"]),
        CorpusEntry::new("z2xz2-e", "Z/2 x Z/2", "(1,0)", &["product", "squarefree"]),
        CorpusEntry::new("z-2", "Z", "2", &["sampleable", "domain"]),
        CorpusEntry::new("z-3", "Z", "3", &["sampleable", "domain"]),
        CorpusEntry::new("gf2x-x", "GF(2)[x]", "x", &["sampleable", "domain"]),
        CorpusEntry::new("gf3x-x", "GF(3)[x]", "x", &["sampleable", "domain"]),
    ]);
    out
}

pub fn find(id: &str) -> Option<CorpusEntry> {
    builtin_corpus().into_iter().find(|e| e.id == id)
}
