//! Carlitz compositions: ordered sums with no two equal adjacent parts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{hamming_weight, p_adic_valuation, DivisorFnKind};
use crate::partitions::{convolve_at, divisor_table, nq_gf_over, q_over};
use crate::partset::PartSet;
use crate::series::{lambert_over, Denominator, Series, Weight};
use crate::verify::{check_range, Verification};

/// `cl_A(n)` for `n = 0..=N`, with `cl_A(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarlitzTable {
    pub set: String,
    pub values: Vec<BigInt>,
}

pub(crate) fn carlitz_gf_over(parts: &[usize], n_max: usize) -> Vec<BigInt> {
    let lambert = lambert_over(parts, n_max, Weight::Count, Denominator::Plus);
    let denominator = Series::one(n_max).sub(&lambert).expect("same truncation");
    // constant term is 1, always invertible
    denominator
        .invert()
        .expect("unit constant term")
        .into_coeffs()
}

/// `cl_A(n) = Σ_{k<n} cl_A(k) τ^s_A(n−k)`, given `τ^s_A` as a table with index 0 unused.
pub(crate) fn carlitz_rec_from(tau_s: &[BigInt]) -> Vec<BigInt> {
    let mut cl: Vec<BigInt> = Vec::with_capacity(tau_s.len());
    cl.push(BigInt::one());
    for n in 1..tau_s.len() {
        let mut acc = BigInt::zero();
        for k in 0..n {
            if !tau_s[n - k].is_zero() {
                acc += &cl[k] * &tau_s[n - k];
            }
        }
        cl.push(acc);
    }
    cl
}

/// Coefficients of `1 / (1 − Σ_a x^a/(1+x^a))`.
pub fn carlitz_table_gf(set: &PartSet, n_max: usize) -> CarlitzTable {
    CarlitzTable {
        set: set.to_string(),
        values: carlitz_gf_over(&set.elements_up_to(n_max), n_max),
    }
}

/// The same table built from the signed divisor recurrence, without any
/// series inversion.
pub fn carlitz_table_rec(set: &PartSet, n_max: usize) -> CarlitzTable {
    let tau_s = divisor_table(DivisorFnKind::TAU_S, set, n_max);
    CarlitzTable {
        set: set.to_string(),
        values: carlitz_rec_from(&tau_s),
    }
}

/// `Σ_{k=0}^{n} cl(k) q(n−k) − Σ_{t=0}^{n−1} cl(t) N^q(n−t) = q(n)`.
pub fn verify_carlitz_q_identity(set: &PartSet, n_max: usize) -> Verification {
    let parts = set.elements_up_to(n_max);
    let cl = carlitz_table_rec(set, n_max).values;
    let q = q_over(&parts, n_max);
    let nq = nq_gf_over(&parts, n_max);
    carlitz_q_check(&cl, &q, &nq, n_max)
}

pub(crate) fn carlitz_q_check(
    cl: &[BigInt],
    q: &[BigInt],
    nq: &[BigInt],
    n_max: usize,
) -> Verification {
    check_range(1, n_max, |n| {
        // nq[0] = 0 so summing t up to n is the same as up to n − 1
        let lhs = convolve_at(cl, q, 0, n) - convolve_at(cl, nq, 0, n);
        (lhs, q[n].clone())
    })
}

/// Carlitz-binary identities, with parts the powers of two:
/// `cl_b(n) = Σ_{k<n} cl_b(k)(1 − ϑ₂(n−k))` and `Σ_{k≤n} cl_b(k)(1 − h(n−k)) = 1`.
///
/// The table itself comes from series inversion; the checks use only the
/// 2-adic valuation and the Hamming weight.
pub fn verify_carlitz_binary(n_max: usize) -> (Verification, Verification) {
    let binary = PartSet::prime_powers(2).expect("2 is prime");
    let cl = carlitz_table_gf(&binary, n_max).values;
    carlitz_binary_checks(&cl, n_max)
}

pub(crate) fn carlitz_binary_checks(cl: &[BigInt], n_max: usize) -> (Verification, Verification) {
    let one_minus_v: Vec<BigInt> = std::iter::once(BigInt::zero())
        .chain(
            (1..=n_max)
                .map(|m| BigInt::from(1 - i64::from(p_adic_valuation(2, m as u64).unwrap()))),
        )
        .collect();
    let one_minus_h: Vec<BigInt> = (0..=n_max)
        .map(|m| BigInt::from(1 - i64::from(hamming_weight(m as u64))))
        .collect();
    let recurrence = check_range(1, n_max, |n| {
        (cl[n].clone(), convolve_at(cl, &one_minus_v, 0, n))
    });
    let hamming = check_range(1, n_max, |n| {
        (convolve_at(cl, &one_minus_h, 0, n), BigInt::one())
    });
    (recurrence, hamming)
}
