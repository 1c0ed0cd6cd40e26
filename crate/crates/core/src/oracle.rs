//! Ground truth by exhaustive enumeration for small `n`.
//!
//! Nothing in this module touches the series machinery; it walks the
//! combinatorial objects directly.

use num_bigint::BigInt;

use crate::partset::PartSet;

/// Environment variable that can raise (never lower) the enumeration limits.
pub const GUARDRAIL_ENV: &str = "PARTCOUNT_GUARDRAIL";

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(
        "n = {n} exceeds the {what} enumeration limit of {limit} (set {GUARDRAIL_ENV} to raise it)"
    )]
    Guardrail {
        n: usize,
        limit: usize,
        what: &'static str,
    },
}

/// Upper bounds on `n` for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guardrails {
    pub partitions: usize,
    pub compositions: usize,
}

impl Default for Guardrails {
    fn default() -> Self {
        Guardrails {
            partitions: 40,
            compositions: 25,
        }
    }
}

impl Guardrails {
    /// Defaults, raised to the value of `PARTCOUNT_GUARDRAIL` when it parses.
    pub fn from_env() -> Self {
        let mut g = Guardrails::default();
        if let Some(limit) = std::env::var(GUARDRAIL_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            g.partitions = g.partitions.max(limit);
            g.compositions = g.compositions.max(limit);
        }
        g
    }

    fn check(limit: usize, n: usize, what: &'static str) -> Result<(), OracleError> {
        if n > limit {
            return Err(OracleError::Guardrail { n, limit, what });
        }
        Ok(())
    }
}

/// Every quantity the engines compute, counted by enumeration at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCounts {
    pub n: usize,
    pub set: String,
    pub p: BigInt,
    pub q: BigInt,
    pub np: BigInt,
    pub nq: BigInt,
    pub p_parity_diff: BigInt,
    pub q_parity_diff: BigInt,
    pub cl: BigInt,
}

/// Visits partitions of `n` in canonical non-increasing order. `parts` must
/// be ascending.
fn walk_partitions(
    remaining: usize,
    parts: &[usize],
    max_index: usize,
    distinct: bool,
    current: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(current);
        return;
    }
    for i in (0..max_index).rev() {
        let a = parts[i];
        if a > remaining {
            continue;
        }
        current.push(a);
        // distinct: strictly smaller parts next; otherwise allow repeats
        let next = if distinct { i } else { i + 1 };
        walk_partitions(remaining - a, parts, next, distinct, current, visit);
        current.pop();
    }
}

fn walk_carlitz(
    remaining: usize,
    parts: &[usize],
    last: usize,
    current: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(current);
        return;
    }
    for &a in parts.iter().take_while(|&&a| a <= remaining) {
        if a == last {
            continue;
        }
        current.push(a);
        walk_carlitz(remaining - a, parts, a, current, visit);
        current.pop();
    }
}

/// Enumerates with explicit limits; see [`enumerate_partitions`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle {
    pub guardrails: Guardrails,
}

impl Oracle {
    pub fn new(guardrails: Guardrails) -> Self {
        Oracle { guardrails }
    }

    pub fn for_each_partition(
        &self,
        n: usize,
        set: &PartSet,
        distinct: bool,
        mut visit: impl FnMut(&[usize]),
    ) -> Result<(), OracleError> {
        Guardrails::check(self.guardrails.partitions, n, "partition")?;
        let parts = set.elements_up_to(n);
        walk_partitions(
            n,
            &parts,
            parts.len(),
            distinct,
            &mut Vec::new(),
            &mut visit,
        );
        Ok(())
    }

    pub fn for_each_carlitz(
        &self,
        n: usize,
        set: &PartSet,
        mut visit: impl FnMut(&[usize]),
    ) -> Result<(), OracleError> {
        Guardrails::check(self.guardrails.compositions, n, "composition")?;
        let parts = set.elements_up_to(n);
        walk_carlitz(n, &parts, 0, &mut Vec::new(), &mut visit);
        Ok(())
    }

    pub fn enumerate_partitions(
        &self,
        n: usize,
        set: &PartSet,
        distinct: bool,
    ) -> Result<Vec<Vec<usize>>, OracleError> {
        let mut out = Vec::new();
        self.for_each_partition(n, set, distinct, |p| out.push(p.to_vec()))?;
        Ok(out)
    }

    pub fn enumerate_carlitz(
        &self,
        n: usize,
        set: &PartSet,
    ) -> Result<Vec<Vec<usize>>, OracleError> {
        let mut out = Vec::new();
        self.for_each_carlitz(n, set, |c| out.push(c.to_vec()))?;
        Ok(out)
    }

    pub fn counts(&self, n: usize, set: &PartSet) -> Result<OracleCounts, OracleError> {
        Guardrails::check(
            self.guardrails.compositions.min(self.guardrails.partitions),
            n,
            "oracle",
        )?;
        let tally = |distinct: bool| -> Result<(i64, i64, i64), OracleError> {
            let (mut count, mut parts, mut parity) = (0i64, 0i64, 0i64);
            self.for_each_partition(n, set, distinct, |p| {
                count += 1;
                parts += p.len() as i64;
                parity += if p.len() % 2 == 0 { 1 } else { -1 };
            })?;
            Ok((count, parts, parity))
        };
        let (p, np, p_parity_diff) = tally(false)?;
        let (q, nq, q_parity_diff) = tally(true)?;
        let mut cl = 0i64;
        self.for_each_carlitz(n, set, |_| cl += 1)?;
        Ok(OracleCounts {
            n,
            set: set.to_string(),
            p: p.into(),
            q: q.into(),
            np: np.into(),
            nq: nq.into(),
            p_parity_diff: p_parity_diff.into(),
            q_parity_diff: q_parity_diff.into(),
            cl: cl.into(),
        })
    }
}

/// All partitions of `n` with parts in `set`, each as a non-increasing list.
/// `n = 0` yields the single empty partition.
pub fn enumerate_partitions(
    n: usize,
    set: &PartSet,
    distinct: bool,
) -> Result<Vec<Vec<usize>>, OracleError> {
    Oracle::default().enumerate_partitions(n, set, distinct)
}

/// All Carlitz compositions of `n` with parts in `set`.
pub fn enumerate_carlitz(n: usize, set: &PartSet) -> Result<Vec<Vec<usize>>, OracleError> {
    Oracle::default().enumerate_carlitz(n, set)
}

pub fn oracle_counts(n: usize, set: &PartSet) -> Result<OracleCounts, OracleError> {
    Oracle::default().counts(n, set)
}

/// All compositions of `n` with parts in `set`, no adjacency rule.
pub fn count_compositions(n: usize, set: &PartSet) -> Result<u64, OracleError> {
    Guardrails::check(Guardrails::default().compositions, n, "composition")?;
    let parts = set.elements_up_to(n);
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for m in 1..=n {
        ways[m] = parts
            .iter()
            .filter(|&&a| a <= m)
            .map(|&a| ways[m - a])
            .sum();
    }
    Ok(ways[n])
}
