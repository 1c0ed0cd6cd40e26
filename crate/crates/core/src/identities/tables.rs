//! Per-set table cache shared by all identity evaluators.

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::arith::DivisorFnKind;
use crate::carlitz::{carlitz_gf_over, carlitz_rec_from};
use crate::partitions::{divisor_table, np_gf_over, nq_gf_over, p_over, q_over};
use crate::partset::PartSet;
use crate::series::{product_over, ProductMode};

/// Every table an identity may read, for one set and one truncation.
///
/// Series-route tables (products and their Lambert multiples) and
/// direct-route tables (divisor enumeration, recurrences) are kept apart so
/// each identity can take its two sides from different routes.
pub trait Quantities: Sync {
    fn set(&self) -> &PartSet;
    fn n_max(&self) -> usize;
    /// `A ∩ [1, N]`, ascending.
    fn parts(&self) -> &[usize];

    fn p(&self) -> &[BigInt];
    fn q(&self) -> &[BigInt];
    fn p_parity_diff(&self) -> &[BigInt];
    fn q_parity_diff(&self) -> &[BigInt];
    fn np(&self) -> &[BigInt];
    fn nq(&self) -> &[BigInt];

    fn tau(&self) -> &[BigInt];
    fn tau_s(&self) -> &[BigInt];
    fn sigma(&self) -> &[BigInt];
    fn sigma_s(&self) -> &[BigInt];

    fn carlitz_gf(&self) -> &[BigInt];
    fn carlitz_rec(&self) -> &[BigInt];
}

/// Lazily filled [`Quantities`]; safe to share across threads.
pub struct Tables {
    set: PartSet,
    n_max: usize,
    parts: Vec<usize>,
    p: OnceLock<Vec<BigInt>>,
    q: OnceLock<Vec<BigInt>>,
    p_parity_diff: OnceLock<Vec<BigInt>>,
    q_parity_diff: OnceLock<Vec<BigInt>>,
    np: OnceLock<Vec<BigInt>>,
    nq: OnceLock<Vec<BigInt>>,
    tau: OnceLock<Vec<BigInt>>,
    tau_s: OnceLock<Vec<BigInt>>,
    sigma: OnceLock<Vec<BigInt>>,
    sigma_s: OnceLock<Vec<BigInt>>,
    carlitz_gf: OnceLock<Vec<BigInt>>,
    carlitz_rec: OnceLock<Vec<BigInt>>,
}

impl Tables {
    pub fn new(set: &PartSet, n_max: usize) -> Self {
        Tables {
            parts: set.elements_up_to(n_max),
            set: set.clone(),
            n_max,
            p: OnceLock::new(),
            q: OnceLock::new(),
            p_parity_diff: OnceLock::new(),
            q_parity_diff: OnceLock::new(),
            np: OnceLock::new(),
            nq: OnceLock::new(),
            tau: OnceLock::new(),
            tau_s: OnceLock::new(),
            sigma: OnceLock::new(),
            sigma_s: OnceLock::new(),
            carlitz_gf: OnceLock::new(),
            carlitz_rec: OnceLock::new(),
        }
    }
}

impl Quantities for Tables {
    fn set(&self) -> &PartSet {
        &self.set
    }

    fn n_max(&self) -> usize {
        self.n_max
    }

    fn parts(&self) -> &[usize] {
        &self.parts
    }

    fn p(&self) -> &[BigInt] {
        self.p.get_or_init(|| p_over(&self.parts, self.n_max))
    }

    fn q(&self) -> &[BigInt] {
        self.q.get_or_init(|| q_over(&self.parts, self.n_max))
    }

    fn p_parity_diff(&self) -> &[BigInt] {
        self.p_parity_diff.get_or_init(|| {
            product_over(&self.parts, self.n_max, ProductMode::InvPlus).into_coeffs()
        })
    }

    fn q_parity_diff(&self) -> &[BigInt] {
        self.q_parity_diff
            .get_or_init(|| product_over(&self.parts, self.n_max, ProductMode::Minus).into_coeffs())
    }

    fn np(&self) -> &[BigInt] {
        self.np.get_or_init(|| np_gf_over(&self.parts, self.n_max))
    }

    fn nq(&self) -> &[BigInt] {
        self.nq.get_or_init(|| nq_gf_over(&self.parts, self.n_max))
    }

    fn tau(&self) -> &[BigInt] {
        self.tau
            .get_or_init(|| divisor_table(DivisorFnKind::TAU, &self.set, self.n_max))
    }

    fn tau_s(&self) -> &[BigInt] {
        self.tau_s
            .get_or_init(|| divisor_table(DivisorFnKind::TAU_S, &self.set, self.n_max))
    }

    fn sigma(&self) -> &[BigInt] {
        self.sigma
            .get_or_init(|| divisor_table(DivisorFnKind::SIGMA, &self.set, self.n_max))
    }

    fn sigma_s(&self) -> &[BigInt] {
        self.sigma_s
            .get_or_init(|| divisor_table(DivisorFnKind::SIGMA_S, &self.set, self.n_max))
    }

    fn carlitz_gf(&self) -> &[BigInt] {
        self.carlitz_gf
            .get_or_init(|| carlitz_gf_over(&self.parts, self.n_max))
    }

    fn carlitz_rec(&self) -> &[BigInt] {
        self.carlitz_rec
            .get_or_init(|| carlitz_rec_from(self.tau_s()))
    }
}
