//! Outcome of checking an equality over a range of `n`.

use num_bigint::BigInt;
use serde::Serialize;

/// The first index at which two independently computed sides disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub lhs: BigInt,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub n_min: usize,
    pub n_max: usize,
    pub first_failure: Option<Mismatch>,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Evaluates both sides for every `n` in `n_min..=n_max`, stopping at the
/// first disagreement.
pub fn check_range(
    n_min: usize,
    n_max: usize,
    mut sides: impl FnMut(usize) -> (BigInt, BigInt),
) -> Verification {
    let first_failure = (n_min..=n_max).find_map(|n| {
        let (lhs, rhs) = sides(n);
        (lhs != rhs).then_some(Mismatch { n, lhs, rhs })
    });
    Verification {
        n_min,
        n_max,
        first_failure,
    }
}
