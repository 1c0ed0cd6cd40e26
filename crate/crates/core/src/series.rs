//! Degree-truncated formal power series over unbounded integers.
//!
//! Everything here is exact. The formal variable is never evaluated, so no
//! convergence condition is involved.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::partset::PartSet;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation mismatch: {0} vs {1}")]
    TruncMismatch(usize, usize),
    #[error("series is not invertible: constant term {0} is not ±1")]
    NonInvertible(BigInt),
}

/// A power series `c_0 + c_1 x + … + c_N x^N` with `N = trunc()`.
///
/// The coefficient vector always holds exactly `trunc + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

/// Which of the four infinite products over `A` to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductMode {
    /// `Π 1/(1 − x^a)`
    InvMinus,
    /// `Π (1 + x^a)`
    Plus,
    /// `Π 1/(1 + x^a)`
    InvPlus,
    /// `Π (1 − x^a)`
    Minus,
}

/// Weight `a^w` attached to each Lambert term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    Count,
    Sum,
}

/// Sign in the Lambert denominator `1 ∓ x^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Denominator {
    /// `1 + x^a`, giving the signed divisor functions.
    Plus,
    /// `1 − x^a`
    Minus,
}

impl Series {
    pub fn zero(trunc: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from coefficients, padding with zeros or dropping
    /// terms above `trunc`.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>, trunc: usize) -> Self {
        let mut v: Vec<BigInt> = coeffs.into_iter().take(trunc + 1).map(Into::into).collect();
        v.resize(trunc + 1, BigInt::zero());
        Series { coeffs: v }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    fn check(&self, other: &Series) -> Result<(), SeriesError> {
        if self.trunc() != other.trunc() {
            return Err(SeriesError::TruncMismatch(self.trunc(), other.trunc()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Series { coeffs })
    }

    pub fn sub(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Series { coeffs })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check(other)?;
        let n = self.trunc();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, fi) in self.coeffs.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in other.coeffs[..=n - i].iter().enumerate() {
                if !gj.is_zero() {
                    out[i + j] += fi * gj;
                }
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Reciprocal of a series whose constant term is `±1`, via
    /// `g_0 = f_0`, `g_n = −f_0 Σ_{i=1..n} f_i g_{n−i}`.
    pub fn invert(&self) -> Result<Series, SeriesError> {
        let f0 = &self.coeffs[0];
        if f0.abs() != BigInt::one() {
            return Err(SeriesError::NonInvertible(f0.clone()));
        }
        let n = self.trunc();
        let mut g: Vec<BigInt> = Vec::with_capacity(n + 1);
        g.push(f0.clone());
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=m {
                let fi = &self.coeffs[i];
                if !fi.is_zero() {
                    acc += fi * &g[m - i];
                }
            }
            g.push(-(f0 * acc));
        }
        Ok(Series { coeffs: g })
    }
}

/// Expands one of `Π(1 ∓ x^a)^{±1}` over the given parts, truncated at `trunc`.
///
/// Each factor is applied in place as a sparse two-term update; parts above
/// `trunc` are no-ops.
pub fn product_over(parts: &[usize], trunc: usize, mode: ProductMode) -> Series {
    let mut c = Series::one(trunc).coeffs;
    for &a in parts.iter().filter(|&&a| a >= 1 && a <= trunc) {
        match mode {
            // c ← c / (1 − x^a): forward recurrence c_n += c_{n−a}
            ProductMode::InvMinus => {
                for n in a..=trunc {
                    let (lo, hi) = c.split_at_mut(n);
                    hi[0] += &lo[n - a];
                }
            }
            ProductMode::InvPlus => {
                for n in a..=trunc {
                    let (lo, hi) = c.split_at_mut(n);
                    hi[0] -= &lo[n - a];
                }
            }
            // c ← c · (1 ± x^a): backward so each c_{n−a} is still the old value
            ProductMode::Plus => {
                for n in (a..=trunc).rev() {
                    let (lo, hi) = c.split_at_mut(n);
                    hi[0] += &lo[n - a];
                }
            }
            ProductMode::Minus => {
                for n in (a..=trunc).rev() {
                    let (lo, hi) = c.split_at_mut(n);
                    hi[0] -= &lo[n - a];
                }
            }
        }
    }
    Series { coeffs: c }
}

pub fn product_family(set: &PartSet, trunc: usize, mode: ProductMode) -> Series {
    product_over(&set.elements_up_to(trunc), trunc, mode)
}

/// `Σ_a a^w x^a / (1 ∓ x^a)` over the given parts. Constant term is 0.
pub fn lambert_over(parts: &[usize], trunc: usize, weight: Weight, sign: Denominator) -> Series {
    let mut acc = vec![0i128; trunc + 1];
    for &a in parts.iter().filter(|&&a| a >= 1 && a <= trunc) {
        let w = match weight {
            Weight::Count => 1i128,
            Weight::Sum => a as i128,
        };
        // x^a/(1 + x^a) = x^a − x^{2a} + x^{3a} − …
        for (k, n) in (a..=trunc).step_by(a).enumerate() {
            let negative = sign == Denominator::Plus && k % 2 == 1;
            acc[n] += if negative { -w } else { w };
        }
    }
    Series {
        coeffs: acc.into_iter().map(BigInt::from).collect(),
    }
}

pub fn lambert_sum(set: &PartSet, trunc: usize, weight: Weight, sign: Denominator) -> Series {
    lambert_over(&set.elements_up_to(trunc), trunc, weight, sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(c: &[i64], trunc: usize) -> Series {
        Series::from_coeffs(c.iter().copied(), trunc)
    }

    fn ints(series: &Series) -> Vec<i64> {
        series
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn add_sub() {
        assert_eq!(s(&[1, 1], 1).add(&s(&[1, -1], 1)).unwrap(), s(&[2], 1));
        assert_eq!(s(&[1, 1], 1).sub(&s(&[1, 1], 1)).unwrap(), Series::zero(1));
        assert_eq!(
            s(&[0, 1, 1], 2).add(&s(&[0, 1], 2)).unwrap(),
            s(&[0, 2, 1], 2)
        );
        assert_eq!(
            s(&[1], 1).add(&s(&[1], 2)),
            Err(SeriesError::TruncMismatch(1, 2))
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            s(&[1, 1], 2).mul(&s(&[1, -1], 2)).unwrap(),
            s(&[1, 0, -1], 2)
        );
        let geometric = s(&[1; 9], 8);
        assert_eq!(geometric.mul(&s(&[1, -1], 8)).unwrap(), Series::one(8));
        assert!(s(&[1], 3).mul(&s(&[1], 4)).is_err());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(s(&[1, -1], 6).invert().unwrap(), s(&[1; 7], 6));
        assert_eq!(s(&[1, 1], 4).invert().unwrap(), s(&[1, -1, 1, -1, 1], 4));
        let f = s(&[1, -1], 10).mul(&s(&[1, 0, -1], 10)).unwrap();
        assert_eq!(f.invert().unwrap().invert().unwrap(), f);
        assert_eq!(
            s(&[2, 1], 3).invert(),
            Err(SeriesError::NonInvertible(BigInt::from(2)))
        );
        assert_eq!(s(&[-1, 1], 2).invert().unwrap(), s(&[-1, -1, -1], 2));
    }

    #[test]
    fn product_family_examples() {
        let p = product_family(&PartSet::naturals(), 5, ProductMode::InvMinus);
        assert_eq!(ints(&p), vec![1, 1, 2, 3, 5, 7]);
        let f = product_family(&PartSet::finite([1, 2]).unwrap(), 3, ProductMode::Minus);
        assert_eq!(ints(&f), vec![1, -1, -1, 1]);
        let e = product_family(&PartSet::naturals(), 7, ProductMode::Minus);
        assert_eq!(ints(&e), vec![1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn lambert_examples() {
        let n = PartSet::naturals();
        assert_eq!(
            ints(&lambert_sum(&n, 6, Weight::Count, Denominator::Minus)),
            vec![0, 1, 2, 2, 3, 2, 4]
        );
        assert_eq!(
            ints(&lambert_sum(&n, 6, Weight::Count, Denominator::Plus)),
            vec![0, 1, 0, 2, -1, 2, 0]
        );
        let two = PartSet::finite([2]).unwrap();
        assert_eq!(
            ints(&lambert_sum(&two, 6, Weight::Sum, Denominator::Minus)),
            vec![0, 0, 2, 0, 2, 0, 2]
        );
    }

    #[test]
    fn products_and_inverses_cancel() {
        let sets = [
            PartSet::naturals(),
            PartSet::primes(),
            PartSet::odds(),
            PartSet::prime_powers(2).unwrap(),
            PartSet::prime_powers(3).unwrap(),
            PartSet::finite([3, 4, 5]).unwrap(),
        ];
        for set in &sets {
            for (fwd, inv) in [
                (ProductMode::Minus, ProductMode::InvMinus),
                (ProductMode::Plus, ProductMode::InvPlus),
            ] {
                let a = product_family(set, 200, fwd);
                let b = product_family(set, 200, inv);
                assert_eq!(a.mul(&b).unwrap(), Series::one(200), "{set} {fwd:?}");
            }
        }
    }

    #[test]
    fn truncation_is_stable() {
        for set in [PartSet::naturals(), PartSet::primes(), PartSet::odds()] {
            for mode in [
                ProductMode::InvMinus,
                ProductMode::Plus,
                ProductMode::InvPlus,
                ProductMode::Minus,
            ] {
                let short = product_family(&set, 100, mode);
                let long = product_family(&set, 150, mode);
                assert_eq!(short.coeffs(), &long.coeffs()[..=100]);
            }
        }
    }

    fn arb_series(trunc: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec(-50i64..50, trunc + 1).prop_map(move |v| s(&v, trunc))
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(
            (f, g, h) in (0usize..64).prop_flat_map(|t| (arb_series(t), arb_series(t), arb_series(t)))
        ) {
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(
                f.mul(&g).unwrap().mul(&h).unwrap(),
                f.mul(&g.mul(&h).unwrap()).unwrap()
            );
            prop_assert_eq!(f.mul(&Series::one(f.trunc())).unwrap(), f.clone());
        }

        #[test]
        fn invert_is_a_two_sided_inverse(mut v in prop::collection::vec(-20i64..20, 1..40), neg in any::<bool>()) {
            v[0] = if neg { -1 } else { 1 };
            let t = v.len() - 1;
            let f = s(&v, t);
            let g = f.invert().unwrap();
            prop_assert_eq!(f.mul(&g).unwrap(), Series::one(t));
        }
    }
}
