//! The identity catalog. Each evaluator reads its two sides from
//! different routes of [`Quantities`] (series products on one side, direct
//! divisor sums, closed forms or recurrences on the other).

use num_bigint::BigInt;
use num_traits::Zero;

use super::tables::Quantities;
use super::{IdentityEntry, SetConstraint};
use crate::arith::{distinct_prime_factors, hamming_weight, p_adic_valuation, pentagonal_omega};
use crate::carlitz::{carlitz_binary_checks, carlitz_q_check};
use crate::partitions::{
    convolve_at, multiplicity_over, np_gf_over, np_recurrence_check, nq_gf_over,
    nq_recurrence_check, q_over, Flavor,
};
use crate::partset::{PartSet, SetKind};
use crate::series::{product_family, ProductMode};
use crate::verify::{check_range, Verification};

fn table(n_max: usize, f: impl Fn(usize) -> i64) -> Vec<BigInt> {
    (0..=n_max).map(|m| BigInt::from(f(m))).collect()
}

fn valuation(p: u64, m: usize) -> i64 {
    i64::from(p_adic_valuation(p, m as u64).expect("prime base, positive argument"))
}

fn base_prime(q: &dyn Quantities) -> u64 {
    match q.set().kind() {
        SetKind::PrimePowers(p) => p as u64,
        _ => unreachable!("constraint admits prime-power sets only"),
    }
}

/// `ω(0..=N)`
fn pentagonal(n_max: usize) -> Vec<BigInt> {
    table(n_max, |m| i64::from(pentagonal_omega(m as u64)))
}

/// `(−1)^m o(m)`: signed counts of partitions into distinct odd parts.
fn signed_odd_distinct(n_max: usize) -> Vec<BigInt> {
    product_family(&PartSet::odds(), n_max, ProductMode::Plus)
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(m, o)| if m % 2 == 0 { o } else { -o })
        .collect()
}

/// `(−1)^{n−k} N(k) o(n−k)` summed over `k = 1..=n`, written as a
/// convolution with the signed odd-distinct table.
fn signed_odd_conv(parts_count: &[BigInt], signed_o: &[BigInt], n: usize) -> BigInt {
    convolve_at(parts_count, signed_o, 1, n)
}

// -- number-of-parts generating functions against the bijective counts --

fn np_by_multiplicities(q: &dyn Quantities) -> Verification {
    multiplicity_sum_check(q, Flavor::Partition, q.np())
}

fn nq_by_multiplicities(q: &dyn Quantities) -> Verification {
    multiplicity_sum_check(q, Flavor::Distinct, q.nq())
}

fn multiplicity_sum_check(q: &dyn Quantities, flavor: Flavor, totals: &[BigInt]) -> Verification {
    let n_max = q.n_max();
    let mut sum = vec![BigInt::zero(); n_max + 1];
    for &b in q.parts() {
        let rest: Vec<usize> = q.parts().iter().copied().filter(|&a| a != b).collect();
        for (acc, v) in sum
            .iter_mut()
            .zip(multiplicity_over(&rest, b, n_max, flavor))
        {
            *acc += v;
        }
    }
    check_range(1, n_max, |n| (totals[n].clone(), sum[n].clone()))
}

// -- convolution forms --

fn np_conv(q: &dyn Quantities) -> Verification {
    check_range(1, q.n_max(), |n| {
        (q.np()[n].clone(), convolve_at(q.p(), q.tau(), 0, n))
    })
}

fn nq_conv(q: &dyn Quantities) -> Verification {
    check_range(1, q.n_max(), |n| {
        (q.nq()[n].clone(), convolve_at(q.q(), q.tau_s(), 0, n))
    })
}

fn np_conv_prime_divisors(q: &dyn Quantities) -> Verification {
    let omega = table(q.n_max(), |m| {
        if m == 0 {
            0
        } else {
            i64::from(distinct_prime_factors(m))
        }
    });
    check_range(1, q.n_max(), |n| {
        (q.np()[n].clone(), convolve_at(q.p(), &omega, 0, n))
    })
}

fn np_conv_valuation(q: &dyn Quantities) -> Verification {
    let p = base_prime(q);
    let weight = table(q.n_max(), |m| if m == 0 { 0 } else { valuation(p, m) + 1 });
    check_range(1, q.n_max(), |n| {
        (q.np()[n].clone(), convolve_at(q.p(), &weight, 0, n))
    })
}

fn hamming_recurrence(q: &dyn Quantities) -> Verification {
    check_range(2, q.n_max(), |n| {
        let lhs = i64::from(hamming_weight(n as u64));
        let rhs = i64::from(hamming_weight(n as u64 - 1)) + 1 - valuation(2, n);
        (lhs.into(), rhs.into())
    })
}

/// `ϑ₂(n!) = n − h(n)`, the integer form of `h(n) = ϑ₂(2ⁿ/n!)`.
fn hamming_factorial(q: &dyn Quantities) -> Verification {
    let mut factorial_valuation = 0i64;
    check_range(1, q.n_max(), |n| {
        factorial_valuation += valuation(2, n);
        let rhs = n as i64 - i64::from(hamming_weight(n as u64));
        (factorial_valuation.into(), rhs.into())
    })
}

// -- inversion forms --

fn np_inversion(q: &dyn Quantities) -> Verification {
    check_range(1, q.n_max(), |n| {
        (
            convolve_at(q.np(), q.q_parity_diff(), 1, n),
            q.tau()[n].clone(),
        )
    })
}

fn nq_inversion(q: &dyn Quantities) -> Verification {
    check_range(1, q.n_max(), |n| {
        (
            convolve_at(q.nq(), q.p_parity_diff(), 1, n),
            q.tau_s()[n].clone(),
        )
    })
}

fn np_pentagonal(q: &dyn Quantities) -> Verification {
    let omega = pentagonal(q.n_max());
    check_range(1, q.n_max(), |n| {
        (convolve_at(q.np(), &omega, 1, n), q.tau()[n].clone())
    })
}

fn nq_odd_distinct(q: &dyn Quantities) -> Verification {
    let signed_o = signed_odd_distinct(q.n_max());
    check_range(1, q.n_max(), |n| {
        (signed_odd_conv(q.nq(), &signed_o, n), q.tau_s()[n].clone())
    })
}

fn np_inversion_prime_divisors(q: &dyn Quantities) -> Verification {
    check_range(1, q.n_max(), |n| {
        let rhs = BigInt::from(distinct_prime_factors(n));
        (convolve_at(q.np(), q.q_parity_diff(), 1, n), rhs)
    })
}

fn np_inversion_valuation(q: &dyn Quantities) -> Verification {
    let p = base_prime(q);
    check_range(1, q.n_max(), |n| {
        (
            convolve_at(q.np(), q.q_parity_diff(), 1, n),
            BigInt::from(valuation(p, n) + 1),
        )
    })
}

fn binary_hamming_sign(q: &dyn Quantities) -> Verification {
    let sign = table(q.n_max(), |m| {
        if hamming_weight(m as u64).is_multiple_of(2) {
            1
        } else {
            -1
        }
    });
    check_range(1, q.n_max(), |n| {
        (
            convolve_at(q.np(), &sign, 1, n),
            BigInt::from(valuation(2, n) + 1),
        )
    })
}

// -- products with the full Euler products --

fn complement_of(q: &dyn Quantities) -> PartSet {
    let base = q
        .set()
        .finite_elements()
        .expect("constraint admits finite sets only");
    PartSet::complement(base.iter().copied()).expect("finite sets are non-empty")
}

fn np_times_euler(q: &dyn Quantities) -> Verification {
    let n_max = q.n_max();
    let omega = pentagonal(n_max);
    let rest_diff = product_family(&complement_of(q), n_max, ProductMode::Minus).into_coeffs();
    check_range(1, n_max, |n| {
        (
            convolve_at(q.np(), &omega, 1, n),
            convolve_at(q.tau(), &rest_diff, 1, n),
        )
    })
}

fn nq_times_inverse_euler(q: &dyn Quantities) -> Verification {
    let n_max = q.n_max();
    let signed_o = signed_odd_distinct(n_max);
    let rest_diff = product_family(&complement_of(q), n_max, ProductMode::InvPlus).into_coeffs();
    check_range(1, n_max, |n| {
        (
            signed_odd_conv(q.nq(), &signed_o, n),
            convolve_at(q.tau_s(), &rest_diff, 1, n),
        )
    })
}

// -- logarithmic derivatives --

fn partitions_sigma(q: &dyn Quantities) -> Verification {
    check_range(1, q.n_max(), |n| {
        (&q.p()[n] * n, convolve_at(q.sigma(), q.p(), 1, n))
    })
}

fn log_derivative(
    n_max: usize,
    parts_count: &[BigInt],
    sigma: &[BigInt],
    tau: &[BigInt],
    counts: &[BigInt],
) -> Verification {
    let weighted_tau: Vec<BigInt> = tau.iter().enumerate().map(|(t, v)| v * t).collect();
    check_range(1, n_max, |n| {
        let lhs = &parts_count[n] * n;
        let rhs = convolve_at(parts_count, sigma, 1, n) + convolve_at(&weighted_tau, counts, 1, n);
        (lhs, rhs)
    })
}

fn np_log_derivative(q: &dyn Quantities) -> Verification {
    log_derivative(q.n_max(), q.np(), q.sigma(), q.tau(), q.p())
}

fn nq_log_derivative(q: &dyn Quantities) -> Verification {
    log_derivative(q.n_max(), q.nq(), q.sigma_s(), q.tau_s(), q.q())
}

fn binary_log_derivative(q: &dyn Quantities) -> Verification {
    let n_max = q.n_max();
    let sigma = table(n_max, |m| {
        if m == 0 {
            0
        } else {
            (1i64 << (valuation(2, m) + 1)) - 1
        }
    });
    let tau = table(n_max, |m| if m == 0 { 0 } else { valuation(2, m) + 1 });
    log_derivative(n_max, q.np(), &sigma, &tau, q.p())
}

// -- recurrences over A --

fn first_failure_over_parts(
    q: &dyn Quantities,
    check: impl Fn(usize, &[usize]) -> Verification,
) -> Verification {
    for &s in q.parts() {
        let rest: Vec<usize> = q.parts().iter().copied().filter(|&a| a != s).collect();
        let v = check(s, &rest);
        if !v.holds() {
            return v;
        }
    }
    Verification {
        n_min: 1,
        n_max: q.n_max(),
        first_failure: None,
    }
}

fn np_over_a(q: &dyn Quantities) -> Verification {
    first_failure_over_parts(q, |s, rest| {
        np_recurrence_check(q.np(), q.p(), &np_gf_over(rest, q.n_max()), s, q.n_max())
    })
}

fn nq_over_a(q: &dyn Quantities) -> Verification {
    first_failure_over_parts(q, |s, rest| {
        let reduced = nq_gf_over(rest, q.n_max());
        nq_recurrence_check(q.nq(), &reduced, &q_over(rest, q.n_max()), s, q.n_max())
    })
}

// -- Carlitz compositions --

fn carlitz_routes(q: &dyn Quantities) -> Verification {
    check_range(0, q.n_max(), |n| {
        (q.carlitz_rec()[n].clone(), q.carlitz_gf()[n].clone())
    })
}

fn carlitz_with_distinct(q: &dyn Quantities) -> Verification {
    carlitz_q_check(q.carlitz_rec(), q.q(), q.nq(), q.n_max())
}

fn carlitz_binary_valuation(q: &dyn Quantities) -> Verification {
    carlitz_binary_checks(q.carlitz_gf(), q.n_max()).0
}

fn carlitz_binary_hamming(q: &dyn Quantities) -> Verification {
    carlitz_binary_checks(q.carlitz_gf(), q.n_max()).1
}

pub(super) const ENTRIES: &[IdentityEntry] = &[
    IdentityEntry {
        id: "T2.1a",
        description: "Σ_n N^p_A(n)x^n = Π_{a∈A}(1−x^a)^{-1} · Σ_{b∈A} x^b/(1−x^b); series route vs Σ_b N^p_b(n) with N^p_b(n) = Σ_k k·p_{A∖b}(n−kb)",
        constraint: SetConstraint::Any,
        evaluator: np_by_multiplicities,
    },
    IdentityEntry {
        id: "T2.1b",
        description: "N^p_A(n) = Σ_{k=0}^{n−1} p_A(k) τ_A(n−k)",
        constraint: SetConstraint::Any,
        evaluator: np_conv,
    },
    IdentityEntry {
        id: "T2.1c",
        description: "Σ_n N^q_A(n)x^n = Π_{a∈A}(1+x^a) · Σ_{b∈A} x^b/(1+x^b); series route vs Σ_b q_{A∖b}(n−b)",
        constraint: SetConstraint::Any,
        evaluator: nq_by_multiplicities,
    },
    IdentityEntry {
        id: "T2.1d",
        description: "N^q_A(n) = Σ_{k=0}^{n−1} q_A(k) τ^s_A(n−k)",
        constraint: SetConstraint::Any,
        evaluator: nq_conv,
    },
    IdentityEntry {
        id: "C2.1a",
        description: "N^p(n) = Σ_{k=0}^{n−1} p(k) τ(n−k) over all positive integers",
        constraint: SetConstraint::NaturalsOnly,
        evaluator: np_conv,
    },
    IdentityEntry {
        id: "C2.1b",
        description: "N^q(n) = Σ_{k=0}^{n−1} q(k) τ^s(n−k) over all positive integers",
        constraint: SetConstraint::NaturalsOnly,
        evaluator: nq_conv,
    },
    IdentityEntry {
        id: "C-Omega",
        description: "A = primes: N^p_A(n) = Σ_{k=0}^{n−1} p_A(k) Ω(n−k), Ω = number of distinct prime divisors",
        constraint: SetConstraint::Primes,
        evaluator: np_conv_prime_divisors,
    },
    IdentityEntry {
        id: "C-vp",
        description: "A = {1,p,p²,…}: N^p_A(n) = Σ_{k=0}^{n−1} p_A(k)(ϑ_p(n−k)+1)",
        constraint: SetConstraint::PrimePowers,
        evaluator: np_conv_valuation,
    },
    IdentityEntry {
        id: "C-hamming",
        description: "h(n) = h(n−1) + 1 − ϑ₂(n) for n ≥ 2",
        constraint: SetConstraint::Binary,
        evaluator: hamming_recurrence,
    },
    IdentityEntry {
        id: "C-hamming-factorial",
        description: "h(n) = ϑ₂(2ⁿ/n!), checked as ϑ₂(n!) = n − h(n) with ϑ₂(n!) = Σ_{m≤n} ϑ₂(m)",
        constraint: SetConstraint::Binary,
        evaluator: hamming_factorial,
    },
    IdentityEntry {
        id: "T2.2a",
        description: "Σ_{k=1}^{n} N^p_A(k)(q^e_A−q^o_A)(n−k) = τ_A(n)",
        constraint: SetConstraint::Any,
        evaluator: np_inversion,
    },
    IdentityEntry {
        id: "T2.2b",
        description: "Σ_{k=1}^{n} N^q_A(k)(p^e_A−p^o_A)(n−k) = τ^s_A(n)",
        constraint: SetConstraint::Any,
        evaluator: nq_inversion,
    },
    IdentityEntry {
        id: "C-NOP",
        description: "Σ_{k=1}^{n} N^p(k) ω(n−k) = τ(n), ω the pentagonal weight",
        constraint: SetConstraint::NaturalsOnly,
        evaluator: np_pentagonal,
    },
    IdentityEntry {
        id: "C-NOPb",
        description: "Σ_{k=1}^{n} (−1)^{n−k} N^q(k) o(n−k) = τ^s(n), o(m) = partitions of m into distinct odd parts",
        constraint: SetConstraint::NaturalsOnly,
        evaluator: nq_odd_distinct,
    },
    IdentityEntry {
        id: "C-Omega-inv",
        description: "A = primes: Σ_{k=1}^{n} N^p_A(k)(q^e_A−q^o_A)(n−k) = Ω(n)",
        constraint: SetConstraint::Primes,
        evaluator: np_inversion_prime_divisors,
    },
    IdentityEntry {
        id: "C-vp-inv",
        description: "A = {1,p,p²,…}: Σ_{k=1}^{n} N^p_A(k)(q^e_A−q^o_A)(n−k) = ϑ_p(n) + 1",
        constraint: SetConstraint::PrimePowers,
        evaluator: np_inversion_valuation,
    },
    IdentityEntry {
        id: "C-binary-s",
        description: "Σ_{k=1}^{n} N^p_bin(k) s(n−k) = ϑ₂(n) + 1 with s(0) = 1, s(m) = (−1)^{h(m)}",
        constraint: SetConstraint::Binary,
        evaluator: binary_hamming_sign,
    },
    IdentityEntry {
        id: "T2.3a",
        description: "Σ_{k=1}^{n} N^p_A(k) ω(n−k) = Σ_{k=1}^{n} τ_A(k)(q^e_{ℕ∖A}−q^o_{ℕ∖A})(n−k)",
        constraint: SetConstraint::Finite,
        evaluator: np_times_euler,
    },
    IdentityEntry {
        id: "T2.3b",
        description: "Σ_{k=1}^{n} (−1)^{n−k} N^q_A(k) o(n−k) = Σ_{k=1}^{n} τ^s_A(k)(p^e_{ℕ∖A}−p^o_{ℕ∖A})(n−k)",
        constraint: SetConstraint::Finite,
        evaluator: nq_times_inverse_euler,
    },
    IdentityEntry {
        id: "E-sigma",
        description: "n·p(n) = Σ_{k=1}^{n} σ(k) p(n−k); the sum starts at k = 1 because σ(0) is undefined (a k = 0 lower bound is an off-by-one)",
        constraint: SetConstraint::NaturalsOnly,
        evaluator: partitions_sigma,
    },
    IdentityEntry {
        id: "T2.4a",
        description: "n·N^p_A(n) = Σ_{k=1}^{n−1} N^p_A(k) σ_A(n−k) + Σ_{t=1}^{n} t τ_A(t) p_A(n−t)",
        constraint: SetConstraint::Any,
        evaluator: np_log_derivative,
    },
    IdentityEntry {
        id: "T2.4b",
        description: "n·N^q_A(n) = Σ_{k=1}^{n−1} N^q_A(k) σ^s_A(n−k) + Σ_{t=1}^{n} t τ^s_A(t) q_A(n−t)",
        constraint: SetConstraint::Any,
        evaluator: nq_log_derivative,
    },
    IdentityEntry {
        id: "C2.4a",
        description: "n·N^p(n) = Σ_{k=1}^{n−1} N^p(k) σ(n−k) + Σ_{t=1}^{n} t τ(t) p(n−t)",
        constraint: SetConstraint::NaturalsOnly,
        evaluator: np_log_derivative,
    },
    IdentityEntry {
        id: "C2.4b",
        description: "n·N^q(n) = Σ_{k=1}^{n−1} N^q(k) σ^s(n−k) + Σ_{t=1}^{n} t τ^s(t) q(n−t)",
        constraint: SetConstraint::NaturalsOnly,
        evaluator: nq_log_derivative,
    },
    IdentityEntry {
        id: "C2.4c",
        description: "n·N^p_bin(n) = Σ_{k=1}^{n−1} N^p_bin(k)(2^{ϑ₂(n−k)+1}−1) + Σ_{t=1}^{n} t(ϑ₂(t)+1) b(n−t)",
        constraint: SetConstraint::Binary,
        evaluator: binary_log_derivative,
    },
    IdentityEntry {
        id: "T2.5a",
        description: "for every s ∈ A: N^p_A(n) − N^p_A(n−s) = p_A(n−s) + N^p_{A∖s}(n)",
        constraint: SetConstraint::Any,
        evaluator: np_over_a,
    },
    IdentityEntry {
        id: "T2.5b",
        description: "for every s ∈ A: Σ_{j≥0}(−1)^j N^q_A(n−js) = N^q_{A∖s}(n) + Σ_{j≥1}(−1)^{j−1} q_{A∖s}(n−js) (strictly alternating signs)",
        constraint: SetConstraint::Any,
        evaluator: nq_over_a,
    },
    IdentityEntry {
        id: "T2.6a",
        description: "cl_A(n) = Σ_{k=0}^{n−1} cl_A(k) τ^s_A(n−k), against the coefficients of 1/(1 − Σ_{a∈A} x^a/(1+x^a))",
        constraint: SetConstraint::Any,
        evaluator: carlitz_routes,
    },
    IdentityEntry {
        id: "T2.6b",
        description: "Σ_{k=0}^{n} cl_A(k) q_A(n−k) − Σ_{t=0}^{n−1} cl_A(t) N^q_A(n−t) = q_A(n)",
        constraint: SetConstraint::Any,
        evaluator: carlitz_with_distinct,
    },
    IdentityEntry {
        id: "C-carlitz-binary-a",
        description: "cl_b(n) = Σ_{k=0}^{n−1} cl_b(k)(1 − ϑ₂(n−k))",
        constraint: SetConstraint::Binary,
        evaluator: carlitz_binary_valuation,
    },
    IdentityEntry {
        id: "C-carlitz-binary-b",
        description: "Σ_{k=0}^{n} cl_b(k)(1 − h(n−k)) = 1 with h(0) = 0",
        constraint: SetConstraint::Binary,
        evaluator: carlitz_binary_hamming,
    },
];
