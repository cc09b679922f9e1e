//! The ring-spec language:
//!
//! ```text
//! ring := "Z" | "Z/" nat | "GF(" prime ")" | "GF(" prime ")[x]"
//!       | "GF(" prime ")[x]/(" poly ")" | ring " x " ring
//!       | "dup(" ring "; " ideal-gens ")" | "(" ring ")"
//! ```
//!
//! Products associate to the left. Element literals are integers,
//! polynomials in `x`, and pairs `(a,b)`.

use super::{AnyRing, CommRing, Integers, ModRing, Poly, PolyQuotient, PolyRing, ProductRing};
use crate::duplication::DupRing;
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// Splits on `sep` where it occurs outside all brackets; parts are trimmed.
pub fn split_top_level<'a>(s: &'a str, sep: &str) -> Vec<&'a str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && s[i..].starts_with(sep) {
            parts.push(s[start..i].trim());
            i += sep.len();
            start = i;
            continue;
        }
        i += 1;
    }
    parts.push(s[start..].trim());
    parts
}

fn parse_error(s: &str) -> Error {
    Error::Parse(format!("unrecognized ring spec {s:?}"))
}

fn parse_nat(s: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected a natural number, got {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::Parse(format!("number out of range: {s:?}")))
}

/// Whether the parenthesis opening `s` closes at its last character.
fn is_wrapped(s: &str) -> bool {
    if !s.starts_with('(') || !s.ends_with(')') {
        return false;
    }
    let mut depth = 0;
    for (i, b) in s.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return i == s.len() - 1;
                }
            }
            _ => {}
        }
    }
    false
}

pub fn make_ring(spec: &str) -> Result<AnyRing> {
    let s = spec.trim();
    let factors = split_top_level(s, " x ");
    if factors.len() > 1 {
        let mut acc = make_ring(factors[0])?;
        for f in &factors[1..] {
            acc = ProductRing::new(acc, make_ring(f)?)?.into();
        }
        return Ok(acc);
    }
    if is_wrapped(s) {
        return make_ring(&s[1..s.len() - 1]);
    }
    if let Some(inner) = s.strip_prefix("dup(").and_then(|t| t.strip_suffix(')')) {
        let parts = split_top_level(inner, ";");
        let [base, gens] = parts.as_slice() else {
            return Err(Error::Parse(format!("dup expects `ring; gens`, got {s:?}")));
        };
        let base = make_ring(base)?;
        let gens = parse_ideal_gens(&base, gens)?;
        let ideal = Ideal::new(&base, gens)?;
        return Ok(DupRing::new(&base, &ideal)?.into());
    }
    if s == "Z" {
        return Ok(Integers::new().into());
    }
    if let Some(n) = s.strip_prefix("Z/") {
        return Ok(ModRing::new(parse_nat(n)?)?.into());
    }
    if let Some(rest) = s.strip_prefix("GF(") {
        let close = rest.find(')').ok_or_else(|| parse_error(s))?;
        let p = parse_nat(&rest[..close])?;
        let tail = &rest[close + 1..];
        if tail.is_empty() {
            return Ok(ModRing::prime_field(p)?.into());
        }
        if tail == "[x]" {
            return Ok(PolyRing::new(p)?.into());
        }
        if let Some(poly) = tail
            .strip_prefix("[x]/(")
            .and_then(|t| t.strip_suffix(')'))
        {
            // validate p before reducing coefficients mod p
            PolyRing::new(p)?;
            return Ok(PolyQuotient::new(p, Poly::parse(poly, p)?)?.into());
        }
    }
    Err(parse_error(s))
}

/// Comma-separated element literals; the empty string means no generators.
pub fn parse_ideal_gens<R: CommRing>(ring: &R, s: &str) -> Result<Vec<R::Elem>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(s, ",")
        .into_iter()
        .map(|lit| ring.parse_elem(lit))
        .collect()
}
