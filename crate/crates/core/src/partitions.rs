//! Partition counts, parity differences and number-of-parts tables.
//!
//! Conventions shared by every table: `p_A(0) = q_A(0) = 1`,
//! `N^p_A(0) = N^q_A(0) = 0`, and every function vanishes at negative
//! arguments. A convolution over an empty index range is 0.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{divisor_fn, DivisorFnKind};
use crate::partset::{PartSet, PartSetError};
use crate::series::{lambert_over, product_over, Denominator, ProductMode, Weight};
use crate::verify::{check_range, Verification};

/// Ordinary partitions or partitions into distinct parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Partition,
    Distinct,
}

/// Values of one function of `n` for `n = 0..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: String,
    pub set: String,
    pub values: Vec<BigInt>,
}

impl SequenceTable {
    fn new(name: &str, set: &PartSet, values: Vec<BigInt>) -> Self {
        SequenceTable {
            name: name.to_string(),
            set: set.to_string(),
            values,
        }
    }

    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }
}

/// `f(n)` with the zero-below-zero convention.
pub(crate) fn at(values: &[BigInt], n: isize) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        values[n as usize].clone()
    }
}

/// `Σ_{k=k_min}^{n} f(k) g(n − k)`; empty range gives 0.
pub(crate) fn convolve_at(f: &[BigInt], g: &[BigInt], k_min: usize, n: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in k_min..=n {
        if !f[k].is_zero() && !g[n - k].is_zero() {
            acc += &f[k] * &g[n - k];
        }
    }
    acc
}

pub(crate) fn p_over(parts: &[usize], n_max: usize) -> Vec<BigInt> {
    product_over(parts, n_max, ProductMode::InvMinus).into_coeffs()
}

pub(crate) fn q_over(parts: &[usize], n_max: usize) -> Vec<BigInt> {
    product_over(parts, n_max, ProductMode::Plus).into_coeffs()
}

/// `Π 1/(1−x^a) · Σ x^b/(1−x^b)`
pub(crate) fn np_gf_over(parts: &[usize], n_max: usize) -> Vec<BigInt> {
    let product = product_over(parts, n_max, ProductMode::InvMinus);
    let lambert = lambert_over(parts, n_max, Weight::Count, Denominator::Minus);
    product
        .mul(&lambert)
        .expect("same truncation")
        .into_coeffs()
}

/// `Π (1+x^a) · Σ x^b/(1+x^b)`
pub(crate) fn nq_gf_over(parts: &[usize], n_max: usize) -> Vec<BigInt> {
    let product = product_over(parts, n_max, ProductMode::Plus);
    let lambert = lambert_over(parts, n_max, Weight::Count, Denominator::Plus);
    product
        .mul(&lambert)
        .expect("same truncation")
        .into_coeffs()
}

/// `[0, f(1), …, f(N)]` for a divisor function, by direct divisor enumeration.
pub fn divisor_table(kind: DivisorFnKind, set: &PartSet, n_max: usize) -> Vec<BigInt> {
    std::iter::once(BigInt::zero())
        .chain((1..=n_max).map(|n| BigInt::from(divisor_fn(kind, set, n))))
        .collect()
}

/// `p_A(n)` for `n = 0..=N`.
pub fn p_table(set: &PartSet, n_max: usize) -> SequenceTable {
    SequenceTable::new("p", set, p_over(&set.elements_up_to(n_max), n_max))
}

/// `q_A(n)` for `n = 0..=N`.
pub fn q_table(set: &PartSet, n_max: usize) -> SequenceTable {
    SequenceTable::new("q", set, q_over(&set.elements_up_to(n_max), n_max))
}

/// Even-minus-odd number of parts: `p^e_A − p^o_A` or `q^e_A − q^o_A`.
pub fn parity_diff_table(set: &PartSet, n_max: usize, flavor: Flavor) -> SequenceTable {
    let (name, mode) = match flavor {
        Flavor::Partition => ("p-parity-diff", ProductMode::InvPlus),
        Flavor::Distinct => ("q-parity-diff", ProductMode::Minus),
    };
    let values = product_over(&set.elements_up_to(n_max), n_max, mode).into_coeffs();
    SequenceTable::new(name, set, values)
}

/// Individual parity counts `(even, odd)`, recovered as `(total ± diff)/2`.
pub fn parity_counts(set: &PartSet, n_max: usize, flavor: Flavor) -> (Vec<BigInt>, Vec<BigInt>) {
    let total = match flavor {
        Flavor::Partition => p_table(set, n_max),
        Flavor::Distinct => q_table(set, n_max),
    };
    let diff = parity_diff_table(set, n_max, flavor);
    total
        .values
        .iter()
        .zip(&diff.values)
        .map(|(t, d)| ((t + d) / 2, (t - d) / 2))
        .unzip()
}

/// `N^p_A` from the product of the partition and Lambert series.
pub fn np_table_gf(set: &PartSet, n_max: usize) -> SequenceTable {
    SequenceTable::new("np", set, np_gf_over(&set.elements_up_to(n_max), n_max))
}

/// `N^q_A` from the product of the distinct-partition and signed Lambert series.
pub fn nq_table_gf(set: &PartSet, n_max: usize) -> SequenceTable {
    SequenceTable::new("nq", set, nq_gf_over(&set.elements_up_to(n_max), n_max))
}

/// `Σ_{k=0}^{n−1} counts(k) divisor(n − k)` for every `n`, by direct summation.
/// `divisor[0]` is 0, so the `k = n` term drops out.
fn conv_table(counts: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(divisor[0].is_zero());
    (0..counts.len())
        .map(|n| convolve_at(counts, divisor, 0, n))
        .collect()
}

/// `N^p_A(n) = Σ_{k=0}^{n−1} p_A(k) τ_A(n−k)` with `τ_A` from divisor enumeration.
pub fn np_table_conv(set: &PartSet, n_max: usize) -> SequenceTable {
    let p = p_table(set, n_max);
    let tau = divisor_table(DivisorFnKind::TAU, set, n_max);
    SequenceTable::new("np", set, conv_table(&p.values, &tau))
}

/// `N^q_A(n) = Σ_{k=0}^{n−1} q_A(k) τ^s_A(n−k)`.
pub fn nq_table_conv(set: &PartSet, n_max: usize) -> SequenceTable {
    let q = q_table(set, n_max);
    let tau_s = divisor_table(DivisorFnKind::TAU_S, set, n_max);
    SequenceTable::new("nq", set, conv_table(&q.values, &tau_s))
}

/// Parts of `A` up to `n_max` with `b` removed.
pub(crate) fn parts_without(set: &PartSet, b: usize, n_max: usize) -> Vec<usize> {
    set.elements_up_to(n_max)
        .into_iter()
        .filter(|&a| a != b)
        .collect()
}

/// Occurrences of the part `b` summed over all (distinct) partitions of `n`:
/// `N^p_b(n) = Σ_{k≥1} k p_{A∖b}(n − kb)`, `N^q_b(n) = q_{A∖b}(n − b)`.
///
/// Works on `A ∩ [1, N]`, so `A ∖ {b}` never has to be representable as a
/// [`PartSet`] in its own right.
pub fn part_multiplicity(
    set: &PartSet,
    b: usize,
    n_max: usize,
    flavor: Flavor,
) -> Result<SequenceTable, PartSetError> {
    if !set.contains(b) {
        return Err(PartSetError::NotAMember(b, set.to_string()));
    }
    let rest = parts_without(set, b, n_max);
    Ok(SequenceTable::new(
        &format!("multiplicity-{b}"),
        set,
        multiplicity_over(&rest, b, n_max, flavor),
    ))
}

pub(crate) fn multiplicity_over(
    rest: &[usize],
    b: usize,
    n_max: usize,
    flavor: Flavor,
) -> Vec<BigInt> {
    match flavor {
        Flavor::Partition => {
            let p = p_over(rest, n_max);
            (0..=n_max)
                .map(|n| {
                    let mut acc = BigInt::zero();
                    let mut k = 1;
                    while k * b <= n {
                        acc += &p[n - k * b] * k;
                        k += 1;
                    }
                    acc
                })
                .collect()
        }
        Flavor::Distinct => {
            let q = q_over(rest, n_max);
            (0..=n_max)
                .map(|n| at(&q, n as isize - b as isize))
                .collect()
        }
    }
}

/// Checks `N^p_A(n) − N^p_A(n−s) = p_A(n−s) + N^p_{A∖s}(n)` for `n = 1..=N`.
pub fn np_recurrence_over_a(
    set: &PartSet,
    s: usize,
    n_max: usize,
) -> Result<Verification, PartSetError> {
    if !set.contains(s) {
        return Err(PartSetError::NotAMember(s, set.to_string()));
    }
    let full = np_gf_over(&set.elements_up_to(n_max), n_max);
    let p = p_over(&set.elements_up_to(n_max), n_max);
    let reduced = np_gf_over(&parts_without(set, s, n_max), n_max);
    Ok(np_recurrence_check(&full, &p, &reduced, s, n_max))
}

pub(crate) fn np_recurrence_check(
    full: &[BigInt],
    p: &[BigInt],
    reduced: &[BigInt],
    s: usize,
    n_max: usize,
) -> Verification {
    check_range(1, n_max, |n| {
        let shifted = n as isize - s as isize;
        let lhs = &full[n] - at(full, shifted);
        let rhs = at(p, shifted) + &reduced[n];
        (lhs, rhs)
    })
}

/// Checks the alternating form
/// `Σ_{j≥0} (−1)^j N^q_A(n−js) = N^q_{A∖s}(n) + Σ_{j≥1} (−1)^{j−1} q_{A∖s}(n−js)`.
pub fn nq_recurrence_over_a(
    set: &PartSet,
    s: usize,
    n_max: usize,
) -> Result<Verification, PartSetError> {
    if !set.contains(s) {
        return Err(PartSetError::NotAMember(s, set.to_string()));
    }
    let full = nq_gf_over(&set.elements_up_to(n_max), n_max);
    let rest = parts_without(set, s, n_max);
    let reduced = nq_gf_over(&rest, n_max);
    let q_rest = q_over(&rest, n_max);
    Ok(nq_recurrence_check(&full, &reduced, &q_rest, s, n_max))
}

pub(crate) fn nq_recurrence_check(
    full: &[BigInt],
    reduced: &[BigInt],
    q_rest: &[BigInt],
    s: usize,
    n_max: usize,
) -> Verification {
    check_range(1, n_max, |n| {
        let mut lhs = BigInt::zero();
        let mut rhs = reduced[n].clone();
        for j in 0..=n / s {
            let v = &full[n - j * s];
            if j % 2 == 0 {
                lhs += v;
            } else {
                lhs -= v;
            }
            if j >= 1 {
                let w = &q_rest[n - j * s];
                if j % 2 == 1 {
                    rhs += w;
                } else {
                    rhs -= w;
                }
            }
        }
        (lhs, rhs)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(t: &SequenceTable) -> Vec<i64> {
        t.values.iter().map(|v| i64::try_from(v).unwrap()).collect()
    }

    fn fin(v: &[usize]) -> PartSet {
        PartSet::finite(v.iter().copied()).unwrap()
    }

    #[test]
    fn counting_tables() {
        assert_eq!(
            ints(&p_table(&fin(&[2, 3]), 8)),
            vec![1, 0, 1, 1, 1, 1, 2, 1, 2]
        );
        assert_eq!(
            ints(&q_table(&PartSet::naturals(), 6)),
            vec![1, 1, 1, 2, 2, 3, 4]
        );
        assert!(ints(&p_table(&fin(&[1]), 30)).iter().all(|&v| v == 1));
    }

    #[test]
    fn parity_tables() {
        let n = PartSet::naturals();
        assert_eq!(
            ints(&parity_diff_table(&n, 7, Flavor::Distinct)),
            vec![1, -1, -1, 0, 0, 1, 0, 1]
        );
        assert_eq!(
            ints(&parity_diff_table(&n, 5, Flavor::Partition)),
            vec![1, -1, 0, -1, 1, -1]
        );
        assert_eq!(
            parity_diff_table(&fin(&[1, 2]), 4, Flavor::Partition).get(4),
            &BigInt::from(1)
        );
    }

    #[test]
    fn number_of_parts_tables() {
        let n = PartSet::naturals();
        assert_eq!(ints(&np_table_gf(&n, 5)), vec![0, 1, 3, 6, 12, 20]);
        assert_eq!(ints(&nq_table_gf(&n, 6)), vec![0, 1, 1, 3, 3, 5, 8]);
        assert_eq!(ints(&np_table_gf(&fin(&[1, 2]), 4)), vec![0, 1, 3, 5, 9]);
        assert_eq!(np_table_conv(&n, 4).get(4), &BigInt::from(12));
        assert_eq!(nq_table_conv(&n, 3).get(3), &BigInt::from(3));
        assert_eq!(
            np_table_conv(&PartSet::primes(), 7).get(7),
            &BigInt::from(6)
        );
    }

    #[test]
    fn multiplicity_examples() {
        let n = PartSet::naturals();
        assert_eq!(
            part_multiplicity(&n, 2, 4, Flavor::Partition)
                .unwrap()
                .get(4),
            &BigInt::from(3)
        );
        assert_eq!(
            part_multiplicity(&n, 1, 4, Flavor::Distinct)
                .unwrap()
                .get(4),
            &BigInt::from(1)
        );
        assert_eq!(
            part_multiplicity(&fin(&[1, 2]), 1, 2, Flavor::Partition)
                .unwrap()
                .get(2),
            &BigInt::from(2)
        );
        assert!(part_multiplicity(&PartSet::primes(), 4, 10, Flavor::Partition).is_err());
    }

    #[test]
    fn recurrences_over_a() {
        let a = fin(&[1, 2]);
        assert!(np_recurrence_over_a(&a, 2, 50).unwrap().holds());
        assert!(nq_recurrence_over_a(&a, 2, 50).unwrap().holds());
        assert!(np_recurrence_over_a(&PartSet::naturals(), 1, 200)
            .unwrap()
            .holds());
        assert!(nq_recurrence_over_a(&PartSet::naturals(), 1, 200)
            .unwrap()
            .holds());
        assert!(nq_recurrence_over_a(&PartSet::primes(), 5, 120)
            .unwrap()
            .holds());
        assert!(np_recurrence_over_a(&a, 3, 10).is_err());
    }

    fn sets() -> Vec<PartSet> {
        vec![
            PartSet::naturals(),
            fin(&[1, 2]),
            fin(&[2, 3]),
            fin(&[1, 2, 3]),
            fin(&[3, 4, 5]),
            PartSet::primes(),
            PartSet::prime_powers(2).unwrap(),
            PartSet::prime_powers(3).unwrap(),
            PartSet::odds(),
        ]
    }

    #[test]
    fn multiplicities_sum_to_totals() {
        for set in sets() {
            let n_max = 120;
            for (flavor, total) in [
                (Flavor::Partition, np_table_gf(&set, n_max)),
                (Flavor::Distinct, nq_table_gf(&set, n_max)),
            ] {
                let mut sum = vec![BigInt::zero(); n_max + 1];
                for b in set.elements_up_to(n_max) {
                    let t = part_multiplicity(&set, b, n_max, flavor).unwrap();
                    for (s, v) in sum.iter_mut().zip(&t.values) {
                        *s += v;
                    }
                }
                assert_eq!(sum, total.values, "{set} {flavor:?}");
            }
        }
    }

    #[test]
    fn binary_distinct_partitions() {
        let bin = PartSet::prime_powers(2).unwrap();
        let q = q_table(&bin, 10_000);
        assert!(q.values.iter().all(|v| v == &BigInt::from(1)));
        let nq = nq_table_gf(&bin, 10_000);
        for (n, v) in nq.values.iter().enumerate() {
            assert_eq!(v, &BigInt::from((n as u64).count_ones()));
        }
    }

    #[test]
    fn parity_and_ordering_bounds() {
        for set in sets() {
            let n_max = 300;
            let p = p_table(&set, n_max);
            let q = q_table(&set, n_max);
            let np = np_table_gf(&set, n_max);
            let nq = nq_table_gf(&set, n_max);
            for (flavor, total) in [(Flavor::Partition, &p), (Flavor::Distinct, &q)] {
                let diff = parity_diff_table(&set, n_max, flavor);
                let (even, odd) = parity_counts(&set, n_max, flavor);
                for n in 0..=n_max {
                    let t = total.get(n);
                    let d = diff.get(n);
                    assert!(d <= t && -d <= *t);
                    assert!(((t - d) % 2u32).is_zero());
                    assert!(even[n] >= BigInt::zero() && odd[n] >= BigInt::zero());
                    assert_eq!(&(&even[n] + &odd[n]), t);
                }
            }
            for n in 0..=n_max {
                assert!(np.get(n) >= nq.get(n) && nq.get(n) >= &BigInt::zero());
                if n >= 1 && p.get(n) >= &BigInt::from(1) {
                    assert!(np.get(n) >= p.get(n));
                }
            }
            assert_eq!(p.get(0), &BigInt::from(1));
            assert_eq!(q.get(0), &BigInt::from(1));
            assert!(np.get(0).is_zero() && nq.get(0).is_zero());
        }
    }
}
