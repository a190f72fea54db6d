//! The parameter space: menu-size weights β, candidate measures μ, the
//! polynomial f_β, position weights φ and the validated parameter pair.

mod classify;
mod preset;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{binomial_scalar, Scalar};

pub use classify::{classify, Classification};
pub use preset::{footrule_bound, gamma, parse_rational, preset, ParamsSpec, Preset};

/// Menu-size weights `(β_2, …, β_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BetaWeights<T> {
    values: Vec<T>,
}

impl<T: Scalar> BetaWeights<T> {
    /// `values[0]` is β_2; the dimension is `values.len() + 1`.
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("β needs at least one entry (n >= 2)".into()));
        }
        Ok(BetaWeights { values })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> T) -> Result<Self> {
        Self::new((2..=n).map(f).collect())
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| T::zero())
    }

    pub fn n(&self) -> usize {
        self.values.len() + 1
    }

    /// β_k for a menu size `k` in `2..=n`.
    pub fn get(&self, k: usize) -> &T {
        &self.values[k - 2]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|b| *b >= T::zero())
    }

    pub fn neg(&self) -> Self {
        BetaWeights { values: self.values.iter().map(|b| -b.clone()).collect() }
    }
}

/// Candidate measure `(μ_1, …, μ_n)`, additive over candidate sets.
#[derive(Clone, Debug, PartialEq)]
pub struct Measure<T> {
    values: Vec<T>,
}

impl<T: Scalar> Measure<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("μ needs at least one entry".into()));
        }
        Ok(Measure { values })
    }

    pub fn counting(n: usize) -> Self {
        Measure { values: vec![T::one(); n] }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, c: usize) -> &T {
        &self.values[c]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn neg(&self) -> Self {
        Measure { values: self.values.iter().map(|b| -b.clone()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    /// Membership in M⁺: every entry is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| *v >= T::zero())
    }

    /// Membership in M⁺⁺: every entry is positive.
    pub fn is_positive(&self) -> bool {
        self.values.iter().all(|v| *v > T::zero())
    }

    /// Membership in M^≥: every pairwise sum of distinct entries is nonnegative.
    pub fn pairwise_nonnegative(&self) -> bool {
        self.pairwise(|s| s >= T::zero())
    }

    /// Membership in M^>: every pairwise sum of distinct entries is positive.
    pub fn pairwise_positive(&self) -> bool {
        self.pairwise(|s| s > T::zero())
    }

    fn pairwise(&self, ok: impl Fn(T) -> bool) -> bool {
        let v = &self.values;
        (0..v.len()).all(|i| (i + 1..v.len()).all(|j| ok(v[i].clone() + v[j].clone())))
    }

    pub fn min(&self) -> T {
        self.values.iter().skip(1).fold(self.values[0].clone(), |a, b| if *b < a { b.clone() } else { a })
    }

    pub fn max(&self) -> T {
        self.values.iter().skip(1).fold(self.values[0].clone(), |a, b| if *b > a { b.clone() } else { a })
    }
}

/// Adjacent-swap prices `(φ_1, …, φ_{n−1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiWeights<T> {
    values: Vec<T>,
}

impl<T: Scalar> PhiWeights<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("φ needs at least one entry (n >= 2)".into()));
        }
        Ok(PhiWeights { values })
    }

    pub fn n(&self) -> usize {
        self.values.len() + 1
    }

    /// φ_a for a position `a` in `1..=n−1`.
    pub fn get(&self, a: usize) -> &T {
        &self.values[a - 1]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

/// Pascal's triangle with rows `0..=rows`.
pub fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
    let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(rows + 1);
    for t in 0..=rows {
        let mut row = vec![BigInt::one(); t + 1];
        for j in 1..t {
            row[j] = &table[t - 1][j - 1] + &table[t - 1][j];
        }
        table.push(row);
    }
    table
}

fn choose(table: &[Vec<BigInt>], t: usize, j: usize) -> Option<&BigInt> {
    table[t].get(j)
}

/// `f_β(t)` for `t = 0..=t_max`.
pub fn f_beta_values<T: Scalar>(beta: &BetaWeights<T>, t_max: usize) -> Vec<T> {
    let n = beta.n();
    let table = pascal(t_max);
    (0..=t_max)
        .map(|t| {
            (2..=n).fold(T::zero(), |acc, k| match choose(&table, t, k - 1) {
                Some(c) if !beta.get(k).is_zero() => acc + beta.get(k).clone() * binomial_scalar::<T>(c),
                _ => acc,
            })
        })
        .collect()
}

/// `f_β(0), …, f_β(n−1)`.
pub fn f_beta_table<T: Scalar>(beta: &BetaWeights<T>) -> Vec<T> {
    f_beta_values(beta, beta.n() - 1)
}

/// The bijection F: `φ_a = Σ_k β_k C(n−a−1, k−2)`.
pub fn beta_to_phi<T: Scalar>(beta: &BetaWeights<T>) -> PhiWeights<T> {
    let n = beta.n();
    let table = pascal(n);
    let values = (1..n)
        .map(|a| {
            (2..=n).fold(T::zero(), |acc, k| match choose(&table, n - a - 1, k - 2) {
                Some(c) => acc + beta.get(k).clone() * binomial_scalar::<T>(c),
                None => acc,
            })
        })
        .collect();
    PhiWeights { values }
}

/// Inverse of [`beta_to_phi`]: `β_a = Σ_{k=0}^{a−2} (−1)^{a+k} C(a−2, k) φ_{n−1−k}`.
pub fn phi_to_beta<T: Scalar>(phi: &PhiWeights<T>) -> BetaWeights<T> {
    let n = phi.n();
    let table = pascal(n);
    let values = (2..=n)
        .map(|a| {
            (0..=a - 2).fold(T::zero(), |acc, k| {
                let term = binomial_scalar::<T>(&table[a - 2][k]) * phi.get(n - 1 - k).clone();
                if (a + k) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    BetaWeights { values }
}

/// φ is positive and `(−1)^k (Δ^k φ)_j ≥ 0` for every order `k` and start `j`.
pub fn is_totally_monotone<T: Scalar>(phi: &PhiWeights<T>) -> bool {
    let v = phi.values();
    if v.iter().any(|x| *x <= T::zero()) {
        return false;
    }
    let table = pascal(v.len());
    for k in 1..v.len() {
        for j in 0..v.len() - k {
            let s = (0..=k).fold(T::zero(), |acc, i| {
                let term = binomial_scalar::<T>(&table[k][i]) * v[j + i].clone();
                if i % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            });
            if s < T::zero() {
                return false;
            }
        }
    }
    true
}

/// A `(β, μ)` pair of matching dimension with its f_β table and label.
#[derive(Clone, Debug)]
pub struct DistanceParams<T> {
    beta: BetaWeights<T>,
    mu: Measure<T>,
    f: Vec<T>,
    label: Classification,
}

impl<T: Scalar> DistanceParams<T> {
    pub fn new(beta: BetaWeights<T>, mu: Measure<T>) -> Result<Self> {
        if beta.n() != mu.n() {
            return Err(Error::DimensionMismatch { expected: beta.n(), found: mu.n() });
        }
        let n = beta.n();
        let f = f_beta_values(&beta, (2 * n).saturating_sub(2).max(n));
        let label = classify(&beta, &mu);
        Ok(DistanceParams { beta, mu, f, label })
    }

    pub fn n(&self) -> usize {
        self.beta.n()
    }

    pub fn beta(&self) -> &BetaWeights<T> {
        &self.beta
    }

    pub fn mu(&self) -> &Measure<T> {
        &self.mu
    }

    /// `f_β(0), …, f_β(n−1)`.
    pub fn fbeta_table(&self) -> &[T] {
        &self.f[..self.n()]
    }

    /// `f_β(t)` for any `t <= max(n, 2n − 2)`.
    pub fn f(&self, t: usize) -> &T {
        &self.f[t]
    }

    pub(crate) fn f_all(&self) -> &[T] {
        &self.f
    }

    pub fn label(&self) -> Classification {
        self.label
    }
}
