//! Sets of allowed parts.
//!
//! A [`PartSet`] is either an explicit finite list or one of a handful of
//! infinite families. Infinite sets are only ever consumed through bounded
//! enumeration: a generating function truncated at degree `N` depends on
//! `A ∩ [1, N]` alone.

use std::fmt;
use std::str::FromStr;

use crate::arith::is_prime;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PartSetError {
    #[error("malformed set spec: unexpected token `{0}`")]
    Parse(String),
    #[error("invalid set: {0}")]
    Validation(String),
    #[error("{0} is not an element of {1}")]
    NotAMember(usize, String),
    #[error("cannot remove an element from `{0}`")]
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Finite(Vec<usize>),
    Naturals,
    Primes,
    PrimePowers(usize),
    Odds,
    Complement(Vec<usize>),
}

/// Coarse classification of a [`PartSet`], used for constraint checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetKind {
    Finite,
    Naturals,
    Primes,
    PrimePowers(usize),
    Odds,
    Complement,
}

/// A set `A` of positive integers allowed as parts. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartSet(Repr);

fn normalize(elements: impl IntoIterator<Item = usize>) -> Result<Vec<usize>, PartSetError> {
    let mut v: Vec<usize> = elements.into_iter().collect();
    if v.is_empty() {
        return Err(PartSetError::Validation(
            "finite set must be non-empty".into(),
        ));
    }
    if v.contains(&0) {
        return Err(PartSetError::Validation("parts must be positive".into()));
    }
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

impl PartSet {
    pub fn finite(elements: impl IntoIterator<Item = usize>) -> Result<Self, PartSetError> {
        normalize(elements).map(|v| PartSet(Repr::Finite(v)))
    }

    pub fn naturals() -> Self {
        PartSet(Repr::Naturals)
    }

    pub fn primes() -> Self {
        PartSet(Repr::Primes)
    }

    /// `{1, p, p², …}`. Note that 1 is included.
    pub fn prime_powers(p: usize) -> Result<Self, PartSetError> {
        if !is_prime(p) {
            return Err(PartSetError::Validation(format!(
                "ppowers base {p} is not prime"
            )));
        }
        Ok(PartSet(Repr::PrimePowers(p)))
    }

    pub fn odds() -> Self {
        PartSet(Repr::Odds)
    }

    /// `ℕ ∖ base` for a finite, non-empty `base`.
    pub fn complement(base: impl IntoIterator<Item = usize>) -> Result<Self, PartSetError> {
        normalize(base).map(|v| PartSet(Repr::Complement(v)))
    }

    pub fn kind(&self) -> SetKind {
        match &self.0 {
            Repr::Finite(_) => SetKind::Finite,
            Repr::Naturals => SetKind::Naturals,
            Repr::Primes => SetKind::Primes,
            Repr::PrimePowers(p) => SetKind::PrimePowers(*p),
            Repr::Odds => SetKind::Odds,
            Repr::Complement(_) => SetKind::Complement,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0, Repr::Finite(_))
    }

    /// The elements of a finite set, `None` for every infinite family.
    pub fn finite_elements(&self) -> Option<&[usize]> {
        match &self.0 {
            Repr::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn contains(&self, a: usize) -> bool {
        if a == 0 {
            return false;
        }
        match &self.0 {
            Repr::Finite(v) => v.binary_search(&a).is_ok(),
            Repr::Naturals => true,
            Repr::Primes => is_prime(a),
            Repr::PrimePowers(p) => {
                let mut m = a;
                while m.is_multiple_of(*p) {
                    m /= p;
                }
                m == 1
            }
            Repr::Odds => a % 2 == 1,
            Repr::Complement(base) => base.binary_search(&a).is_err(),
        }
    }

    /// Every member `a ≤ bound`, ascending.
    pub fn elements_up_to(&self, bound: usize) -> Vec<usize> {
        match &self.0 {
            Repr::Finite(v) => v.iter().copied().take_while(|&a| a <= bound).collect(),
            Repr::PrimePowers(p) => {
                let mut out = Vec::new();
                let mut a = 1usize;
                while a <= bound {
                    out.push(a);
                    match a.checked_mul(*p) {
                        Some(next) => a = next,
                        None => break,
                    }
                }
                out
            }
            Repr::Odds => (1..=bound).step_by(2).collect(),
            _ => (1..=bound).filter(|&a| self.contains(a)).collect(),
        }
    }

    /// `A ∖ {b}`. Only finite sets, the naturals and complements can absorb
    /// a removal.
    pub fn remove_element(&self, b: usize) -> Result<Self, PartSetError> {
        if !self.contains(b) {
            return Err(PartSetError::NotAMember(b, self.to_string()));
        }
        match &self.0 {
            Repr::Finite(v) => {
                let rest: Vec<usize> = v.iter().copied().filter(|&a| a != b).collect();
                if rest.is_empty() {
                    return Err(PartSetError::Validation(format!(
                        "removing {b} from {self} leaves the empty set"
                    )));
                }
                Ok(PartSet(Repr::Finite(rest)))
            }
            Repr::Naturals => Ok(PartSet(Repr::Complement(vec![b]))),
            Repr::Complement(base) => {
                let mut base = base.clone();
                base.push(b);
                PartSet::complement(base)
            }
            _ => Err(PartSetError::Unsupported(self.to_string())),
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Finite(v) => write!(f, "finite:{}", join(v)),
            Repr::Naturals => f.write_str("naturals"),
            Repr::Primes => f.write_str("primes"),
            Repr::PrimePowers(p) => write!(f, "ppowers:{p}"),
            Repr::Odds => f.write_str("odds"),
            Repr::Complement(v) => write!(f, "complement:finite:{}", join(v)),
        }
    }
}

fn parse_list(body: &str) -> Result<Vec<usize>, PartSetError> {
    body.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| PartSetError::Parse(tok.to_string()))
        })
        .collect()
}

impl FromStr for PartSet {
    type Err = PartSetError;

    /// Grammar: `finite:<a1>,<a2>,...` | `naturals` | `primes` | `ppowers:<p>`
    /// | `odds` | `complement:finite:<a1>,...`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        match text {
            "naturals" => return Ok(PartSet::naturals()),
            "primes" => return Ok(PartSet::primes()),
            "odds" => return Ok(PartSet::odds()),
            _ => {}
        }
        if let Some(body) = text.strip_prefix("complement:finite:") {
            return PartSet::complement(parse_list(body)?);
        }
        if let Some(body) = text.strip_prefix("finite:") {
            return PartSet::finite(parse_list(body)?);
        }
        if let Some(body) = text.strip_prefix("ppowers:") {
            let p = body
                .trim()
                .parse::<usize>()
                .map_err(|_| PartSetError::Parse(body.to_string()))?;
            return PartSet::prime_powers(p);
        }
        let head = text.split(':').next().unwrap_or(text);
        Err(PartSetError::Parse(head.to_string()))
    }
}

/// Parses a set spec.
pub fn parse_set_spec(text: &str) -> Result<PartSet, PartSetError> {
    text.parse()
}
