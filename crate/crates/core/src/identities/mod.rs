//! Machine-checkable catalog of the convolution and recurrence identities.
//!
//! Every entry compares two sides computed by different routes, exactly,
//! for `n = 1..=N` (a few entries start at another index, noted in their
//! description). There are no tolerances anywhere in this module.

mod catalog;
mod tables;

use rayon::prelude::*;
use serde::Serialize;

use crate::partset::{PartSet, SetKind};
use crate::verify::{Mismatch, Verification};

pub use tables::{Quantities, Tables};

/// Which sets an identity is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetConstraint {
    Any,
    NaturalsOnly,
    Primes,
    /// `{1, p, p², …}` for any prime `p`.
    PrimePowers,
    /// `{1, 2, 4, …}` only.
    Binary,
    /// Finite sets, so that `ℕ ∖ A` can be enumerated.
    Finite,
}

impl SetConstraint {
    pub fn admits(self, set: &PartSet) -> bool {
        match self {
            SetConstraint::Any => true,
            SetConstraint::NaturalsOnly => set.kind() == SetKind::Naturals,
            SetConstraint::Primes => set.kind() == SetKind::Primes,
            SetConstraint::PrimePowers => matches!(set.kind(), SetKind::PrimePowers(_)),
            SetConstraint::Binary => set.kind() == SetKind::PrimePowers(2),
            SetConstraint::Finite => set.is_finite(),
        }
    }

    /// The set a fixed-set identity is stated for, if any.
    pub fn builtin(self) -> Option<PartSet> {
        match self {
            SetConstraint::NaturalsOnly => Some(PartSet::naturals()),
            SetConstraint::Primes => Some(PartSet::primes()),
            SetConstraint::PrimePowers | SetConstraint::Binary => {
                Some(PartSet::prime_powers(2).expect("2 is prime"))
            }
            SetConstraint::Any | SetConstraint::Finite => None,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            SetConstraint::Any => "any",
            SetConstraint::NaturalsOnly => "naturals-only",
            SetConstraint::Primes => "primes",
            SetConstraint::PrimePowers => "prime-powers(p)",
            SetConstraint::Binary => "prime-powers(2)",
            SetConstraint::Finite => "finite",
        }
    }
}

pub struct IdentityEntry {
    /// Stable key, e.g. `"T2.1b"`.
    pub id: &'static str,
    pub description: &'static str,
    pub constraint: SetConstraint,
    evaluator: fn(&dyn Quantities) -> Verification,
}

impl std::fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("constraint", &self.constraint)
            .finish()
    }
}

impl IdentityEntry {
    /// Evaluates both sides against an arbitrary table source.
    pub fn evaluate(&self, tables: &dyn Quantities) -> Verification {
        (self.evaluator)(tables)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    AllHold,
    Failure,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub set: String,
    pub n_max: usize,
    pub status: Status,
    pub first_failure: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl IdentityReport {
    fn from_verification(entry: &IdentityEntry, set: &PartSet, v: Verification) -> Self {
        IdentityReport {
            id: entry.id.to_string(),
            set: set.to_string(),
            n_max: v.n_max,
            status: if v.holds() {
                Status::AllHold
            } else {
                Status::Failure
            },
            first_failure: v.first_failure,
            reason: None,
        }
    }

    fn skipped(entry: &IdentityEntry, set: &PartSet, n_max: usize) -> Self {
        IdentityReport {
            id: entry.id.to_string(),
            set: set.to_string(),
            n_max,
            status: Status::Skipped,
            first_failure: None,
            reason: Some(format!("requires a {} set", entry.constraint.describe())),
        }
    }

    pub fn to_json(&self) -> String {
        crate::report::to_json_line(self)
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("identity {id} requires a {constraint} set, got {set}")]
    SetConstraint {
        id: &'static str,
        constraint: &'static str,
        set: String,
    },
    #[error("n_max must be at least 1")]
    EmptyRange,
}

/// Every identity, in fixed order.
pub fn catalog() -> &'static [IdentityEntry] {
    catalog::ENTRIES
}

pub fn lookup(id: &str) -> Option<&'static IdentityEntry> {
    catalog().iter().find(|e| e.id == id)
}

/// Sets exercised by a default run.
pub fn default_sets() -> Vec<PartSet> {
    let finite = |v: &[usize]| PartSet::finite(v.iter().copied()).expect("non-empty");
    vec![
        PartSet::naturals(),
        finite(&[1, 2]),
        finite(&[2, 3]),
        finite(&[1, 2, 3]),
        finite(&[3, 4, 5]),
        PartSet::primes(),
        PartSet::prime_powers(2).expect("2 is prime"),
        PartSet::prime_powers(3).expect("3 is prime"),
        PartSet::odds(),
    ]
}

/// Checks one identity for `n = 1..=N`, stopping at the first failure.
pub fn verify(id: &str, set: &PartSet, n_max: usize) -> Result<IdentityReport, VerifyError> {
    let entry = lookup(id).ok_or_else(|| VerifyError::UnknownIdentity(id.to_string()))?;
    if n_max < 1 {
        return Err(VerifyError::EmptyRange);
    }
    if !entry.constraint.admits(set) {
        return Err(VerifyError::SetConstraint {
            id: entry.id,
            constraint: entry.constraint.describe(),
            set: set.to_string(),
        });
    }
    let tables = Tables::new(set, n_max);
    Ok(IdentityReport::from_verification(
        entry,
        set,
        entry.evaluate(&tables),
    ))
}

/// Runs `entries` against `sets`, with `n_max_for` choosing `N` per set.
///
/// Incompatible pairs produce a skipped report. A fixed-set entry whose
/// built-in set is not among `sets` still runs on it. Reports come back in
/// entry order, then set order.
pub fn verify_entries(
    entries: &[&'static IdentityEntry],
    sets: &[PartSet],
    n_max_for: impl Fn(&PartSet) -> usize + Sync,
) -> Vec<IdentityReport> {
    let mut all_sets: Vec<PartSet> = sets.to_vec();
    for entry in entries {
        if let Some(b) = entry.constraint.builtin() {
            if !all_sets.contains(&b) {
                all_sets.push(b);
            }
        }
    }
    let tables: Vec<Tables> = all_sets
        .iter()
        .map(|s| Tables::new(s, n_max_for(s).max(1)))
        .collect();

    let mut jobs: Vec<(&'static IdentityEntry, usize)> = Vec::new();
    for &entry in entries {
        for (i, set) in all_sets.iter().enumerate() {
            let requested = i < sets.len();
            let builtin = entry.constraint.builtin().as_ref() == Some(set);
            if requested || builtin {
                jobs.push((entry, i));
            }
        }
    }

    jobs.par_iter()
        .map(|&(entry, i)| {
            let set = &all_sets[i];
            let t = &tables[i];
            if entry.constraint.admits(set) {
                IdentityReport::from_verification(entry, set, entry.evaluate(t))
            } else {
                IdentityReport::skipped(entry, set, t.n_max())
            }
        })
        .collect()
}

/// Runs the whole catalog over `sets` at a single `N`.
pub fn verify_all(sets: &[PartSet], n_max: usize) -> Vec<IdentityReport> {
    let entries: Vec<&'static IdentityEntry> = catalog().iter().collect();
    verify_entries(&entries, sets, |_| n_max)
}
