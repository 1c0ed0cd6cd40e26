//! Quasi-polynomial behaviour of `p_A` and `N^p_A` for finite `A` with
//! `gcd(A) = 1`, checked by exact finite differences.
//!
//! With `P = a_1⋯a_k`, for each residue `r` the map `l ↦ p_A(Pl + r)` is a
//! polynomial of degree `k − 1` with constant `(k−1)`-th difference
//! `P^{k−2}`, and `l ↦ N^p_A(Pl + r)` is a polynomial of degree `k` with
//! constant `k`-th difference `k!·c_k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::partitions::{np_gf_over, p_over};
use crate::partset::PartSet;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum AsymptoticsError {
    #[error("gcd(A) must be 1")]
    GcdNotOne,
    #[error("asymptotics need a finite, non-empty set of parts; got {0}")]
    NotFinite(String),
    #[error("residue {r} is outside [0, {period})")]
    Residue { r: usize, period: usize },
    #[error("window {window} is too short for degree {degree}; need at least {}", degree + 2)]
    Window { window: usize, degree: usize },
    #[error("table reaches n = {have}, check needs n = {needed}")]
    Truncation { needed: usize, have: usize },
}

/// A finite part set satisfying `gcd(A) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSetA {
    elements: Vec<usize>,
}

impl FiniteSetA {
    pub fn new(elements: impl IntoIterator<Item = usize>) -> Result<Self, AsymptoticsError> {
        let set =
            PartSet::finite(elements).map_err(|e| AsymptoticsError::NotFinite(e.to_string()))?;
        Self::from_part_set(&set)
    }

    pub fn from_part_set(set: &PartSet) -> Result<Self, AsymptoticsError> {
        let elements = set
            .finite_elements()
            .ok_or_else(|| AsymptoticsError::NotFinite(set.to_string()))?
            .to_vec();
        if elements.iter().fold(0usize, |g, &a| g.gcd(&a)) != 1 {
            return Err(AsymptoticsError::GcdNotOne);
        }
        Ok(FiniteSetA { elements })
    }

    /// Ascending, distinct.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    /// `P = a_1⋯a_k`.
    pub fn period(&self) -> usize {
        self.elements.iter().product()
    }

    pub fn part_set(&self) -> PartSet {
        PartSet::finite(self.elements.iter().copied()).expect("non-empty")
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

/// Both normalizations of the leading term of `N^p_A`:
/// `N^p_A(Pl + r) = c_k l^k + O(l^{k−1})` and `N^p_A(n) ~ c n^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingCoefficient {
    #[serde(serialize_with = "crate::report::rational_as_string")]
    pub c_k: BigRational,
    #[serde(serialize_with = "crate::report::rational_as_string")]
    pub c: BigRational,
}

/// `c_k = Σ_i a_i^{k−2} Π_{j≠i} a_j^{k−1} / k!` and
/// `c = (Σ 1/a_i) / (k!·P)`, with `c_k = c·P^k` asserted.
///
/// For `k = 1` the only admissible set is `{1}`, where `N(n) = n`.
pub fn leading_coefficient(a: &FiniteSetA) -> LeadingCoefficient {
    let k = a.k();
    let p = big(a.period());
    let k_fact = BigRational::from_integer(factorial(k));
    let reciprocal_sum: BigRational = a
        .elements()
        .iter()
        .map(|&x| BigRational::new(BigInt::one(), big(x)))
        .sum();
    let c = reciprocal_sum / (k_fact.clone() * BigRational::from_integer(p.clone()));
    let c_k = if k == 1 {
        BigRational::one()
    } else {
        BigRational::from_integer(top_difference_np(a)) / k_fact
    };
    assert_eq!(
        c_k,
        &c * BigRational::from_integer(num_traits::pow(p, k)),
        "leading coefficient forms disagree"
    );
    LeadingCoefficient { c_k, c }
}

/// `Σ_i a_i^{k−2} Π_{j≠i} a_j^{k−1}`, which equals `k!·c_k`. For `k = 1` this is 1.
fn top_difference_np(a: &FiniteSetA) -> BigInt {
    let k = a.k();
    if k == 1 {
        return BigInt::one();
    }
    let els = a.elements();
    (0..k)
        .map(|i| {
            let own = num_traits::pow(big(els[i]), k - 2);
            let others: BigInt = (0..k)
                .filter(|&j| j != i)
                .map(|j| num_traits::pow(big(els[j]), k - 1))
                .product();
            own * others
        })
        .sum()
}

/// `P^{k−2}`, read as 1 when `k = 1` (then `P = 1`).
fn top_difference_p(a: &FiniteSetA) -> BigInt {
    num_traits::pow(big(a.period()), a.k().saturating_sub(2))
}

/// `1 / (P·(k−1)!)`, the constant in `p_A(n) ~ n^{k−1}/(P·(k−1)!)`.
pub fn netto_coefficient(a: &FiniteSetA) -> BigRational {
    BigRational::new(BigInt::one(), big(a.period()) * factorial(a.k() - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Target {
    /// `p_A`
    #[serde(rename = "p")]
    P,
    /// `N^p_A`
    #[serde(rename = "np")]
    Np,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::P => "p",
            Target::Np => "np",
        }
    }

    pub fn degree(self, a: &FiniteSetA) -> usize {
        match self {
            Target::P => a.k() - 1,
            Target::Np => a.k(),
        }
    }

    pub fn expected_top(self, a: &FiniteSetA) -> BigInt {
        match self {
            Target::P => top_difference_p(a),
            Target::Np => top_difference_np(a),
        }
    }

    /// Values for `n = 0..=n_max`.
    pub fn table(self, a: &FiniteSetA, n_max: usize) -> Vec<BigInt> {
        match self {
            Target::P => p_over(a.elements(), n_max),
            Target::Np => np_gf_over(a.elements(), n_max),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiPolyReport {
    pub set: String,
    pub target: Target,
    pub r: usize,
    pub l0: usize,
    pub window: usize,
    pub degree: usize,
    /// First entry of the `degree`-th difference row.
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub top_difference: BigInt,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub expected: BigInt,
    #[serde(rename = "match")]
    pub matches: bool,
    /// `f(P·l + r)` for `l = l0..=l0+window`.
    #[serde(skip)]
    pub samples: Vec<BigInt>,
    /// The `degree`-th difference row.
    #[serde(skip)]
    pub differences: Vec<BigInt>,
}

impl QuasiPolyReport {
    pub fn to_json(&self) -> String {
        crate::report::to_json_line(self)
    }
}

/// Iterated forward differences: row `order` of the difference table.
pub fn forward_differences(samples: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut row = samples.to_vec();
    for _ in 0..order {
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    row
}

/// Largest `n` a check over `l0..=l0+window` at residue `r` reads.
pub fn required_truncation(a: &FiniteSetA, r: usize, l0: usize, window: usize) -> usize {
    a.period() * (l0 + window) + r
}

/// Checks one residue against a precomputed table of `target` values.
pub fn quasi_poly_check_on(
    a: &FiniteSetA,
    target: Target,
    values: &[BigInt],
    r: usize,
    l0: usize,
    window: usize,
) -> Result<QuasiPolyReport, AsymptoticsError> {
    let period = a.period();
    if r >= period {
        return Err(AsymptoticsError::Residue { r, period });
    }
    let degree = target.degree(a);
    if window < degree + 2 {
        return Err(AsymptoticsError::Window { window, degree });
    }
    let needed = required_truncation(a, r, l0, window);
    if values.len() <= needed {
        return Err(AsymptoticsError::Truncation {
            needed,
            have: values.len().saturating_sub(1),
        });
    }
    let samples: Vec<BigInt> = (l0..=l0 + window)
        .map(|l| values[period * l + r].clone())
        .collect();
    let differences = forward_differences(&samples, degree);
    let expected = target.expected_top(a);
    let matches = differences.iter().all(|d| *d == expected);
    Ok(QuasiPolyReport {
        set: a.part_set().to_string(),
        target,
        r,
        l0,
        window,
        degree,
        top_difference: differences[0].clone(),
        expected,
        matches,
        samples,
        differences,
    })
}

pub fn quasi_poly_check(
    a: &FiniteSetA,
    target: Target,
    r: usize,
    l0: usize,
    window: usize,
) -> Result<QuasiPolyReport, AsymptoticsError> {
    let values = target.table(a, required_truncation(a, r, l0, window));
    quasi_poly_check_on(a, target, &values, r, l0, window)
}

/// One report per residue `r = 0..P−1`, in residue order, sharing one table.
pub fn residue_reports(
    a: &FiniteSetA,
    target: Target,
    l0: usize,
    window: usize,
) -> Result<Vec<QuasiPolyReport>, AsymptoticsError> {
    let period = a.period();
    let values = target.table(a, required_truncation(a, period - 1, l0, window));
    (0..period)
        .into_par_iter()
        .map(|r| quasi_poly_check_on(a, target, &values, r, l0, window))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioRow {
    pub n: usize,
    /// `N^p_A(n) / (c·n^k)`
    #[serde(serialize_with = "crate::report::rational_as_string")]
    pub ratio: BigRational,
    pub decimal: String,
}

impl RatioRow {
    /// `|ratio − 1|`
    pub fn deviation(&self) -> BigRational {
        (&self.ratio - BigRational::one()).abs()
    }

    pub fn to_json(&self) -> String {
        crate::report::to_json_line(self)
    }
}

/// Exact ratios `N^p_A(n)·k!·P / ((Σ 1/a_i)·n^k)` at each requested `n ≥ 1`.
pub fn ratio_report(a: &FiniteSetA, n_points: &[usize]) -> Vec<RatioRow> {
    let Some(&n_max) = n_points.iter().max() else {
        return Vec::new();
    };
    let np = np_gf_over(a.elements(), n_max);
    let c = leading_coefficient(a).c;
    n_points
        .iter()
        .map(|&n| {
            assert!(n >= 1, "ratio is undefined at n = 0");
            let denom = &c * BigRational::from_integer(num_traits::pow(big(n), a.k()));
            let ratio = BigRational::from_integer(np[n].clone()) / denom;
            let decimal = decimal_string(&ratio, 9);
            RatioRow { n, ratio, decimal }
        })
        .collect()
}

/// Decimal rendering truncated toward zero after `digits` places.
pub fn decimal_string(x: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (x.numer().abs() * &scale) / x.denom();
    let (int, frac) = scaled.div_rem(&scale);
    let sign = if x.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{frac:0>digits$}", frac = frac.to_string())
}
