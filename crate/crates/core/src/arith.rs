//! Direct evaluation of the divisor-type and digit-type arithmetic functions.

use num_bigint::BigInt;

use crate::partset::PartSet;
use crate::series::{product_family, ProductMode};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("argument must be a positive integer")]
    NonPositive,
    #[error("index {index} exceeds truncation {trunc}")]
    BeyondTruncation { index: usize, trunc: usize },
}

/// Deterministic trial division.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Selects one of `τ_A`, `σ_A`, `τ_A^s`, `σ_A^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorFnKind {
    pub weight: crate::series::Weight,
    pub signed: bool,
}

impl DivisorFnKind {
    pub const TAU: Self = Self {
        weight: crate::series::Weight::Count,
        signed: false,
    };
    pub const SIGMA: Self = Self {
        weight: crate::series::Weight::Sum,
        signed: false,
    };
    pub const TAU_S: Self = Self {
        weight: crate::series::Weight::Count,
        signed: true,
    };
    pub const SIGMA_S: Self = Self {
        weight: crate::series::Weight::Sum,
        signed: true,
    };
}

/// `Σ_{a | n, a ∈ A} (±1)^{n/a − 1} a^w`, summed over the divisor pairs of `n`.
pub fn divisor_fn(kind: DivisorFnKind, set: &PartSet, n: usize) -> i64 {
    assert!(n >= 1, "divisor functions start at n = 1");
    let term = |a: usize| -> i64 {
        if !set.contains(a) {
            return 0;
        }
        let w = match kind.weight {
            crate::series::Weight::Count => 1,
            crate::series::Weight::Sum => a as i64,
        };
        if kind.signed && (n / a).is_multiple_of(2) {
            -w
        } else {
            w
        }
    };
    let mut total = 0i64;
    let mut d = 1usize;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += term(d);
            let e = n / d;
            if e != d {
                total += term(e);
            }
        }
        d += 1;
    }
    total
}

/// Number of distinct primes dividing `n`, from the factorization.
pub fn distinct_prime_factors(n: usize) -> u32 {
    let mut m = n;
    let mut count = 0;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            count += 1;
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        count += 1;
    }
    count
}

pub fn hamming_weight(n: u64) -> u32 {
    n.count_ones()
}

/// Largest `r` with `p^r | n`.
pub fn p_adic_valuation(p: u64, n: u64) -> Result<u32, ArithError> {
    if !is_prime(p as usize) {
        return Err(ArithError::NotPrime(p));
    }
    if n == 0 {
        return Err(ArithError::NonPositive);
    }
    let mut m = n;
    let mut r = 0;
    while m.is_multiple_of(p) {
        m /= p;
        r += 1;
    }
    Ok(r)
}

/// Pentagonal weight: `(−1)^k` when `m = (3k² ± k)/2`, else 0 (so 1 at 0).
pub fn pentagonal_omega(m: u64) -> i32 {
    // 3k² ± k = 2m  ⇔  (6k ± 1)² = 24m + 1
    let disc = 24 * m + 1;
    let root = disc.isqrt();
    if root * root != disc {
        return 0;
    }
    let k = if (root + 1).is_multiple_of(6) {
        (root + 1) / 6
    } else if (root - 1).is_multiple_of(6) {
        (root - 1) / 6
    } else {
        return 0;
    };
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of partitions of `m` into distinct odd parts, read from the
/// expansion of `Π (1 + x^{odd})` truncated at `trunc`.
pub fn distinct_odd_count(m: usize, trunc: usize) -> Result<BigInt, ArithError> {
    if m > trunc {
        return Err(ArithError::BeyondTruncation { index: m, trunc });
    }
    Ok(product_family(&PartSet::odds(), trunc, ProductMode::Plus)
        .coeff(m)
        .clone())
}

/// `ϑ_p(n!)` as the sum of the valuations of `1..=n`.
pub fn factorial_valuation(p: u64, n: u64) -> Result<u64, ArithError> {
    let mut total = 0u64;
    for m in 1..=n {
        total += u64::from(p_adic_valuation(p, m)?);
    }
    Ok(total)
}
