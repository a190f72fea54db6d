//! Distance evaluation: the menu-sum oracle, the O(n²) closed form, the
//! β-Spearman footrule, truncated windows and profile costs.
//!
//! The Kendall preset yields twice the inversion count: every disagreeing
//! pair contributes the mass of two singletons. No normalization is applied.

use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::{common_down_unchecked, same_n, Permutation};
use crate::scalar::{two, Scalar};
use crate::weights::{f_beta_table, BetaWeights, DistanceParams, Measure};

/// Anything that assigns a value to a pair of rankings of size `n`.
pub trait Distance<T> {
    fn n(&self) -> usize;
    fn distance(&self, a: &Permutation, b: &Permutation) -> T;
}

impl<T: Scalar> Distance<T> for DistanceParams<T> {
    fn n(&self) -> usize {
        DistanceParams::n(self)
    }

    fn distance(&self, a: &Permutation, b: &Permutation) -> T {
        closed_form(self.f_all(), self.mu().values(), a, b)
    }
}

/// Wraps a closure as a [`Distance`].
pub struct FnDistance<F> {
    n: usize,
    f: F,
}

impl<F> FnDistance<F> {
    pub fn new(n: usize, f: F) -> Self {
        FnDistance { n, f }
    }
}

impl<T, F: Fn(&Permutation, &Permutation) -> T> Distance<T> for FnDistance<F> {
    fn n(&self) -> usize {
        self.n
    }

    fn distance(&self, a: &Permutation, b: &Permutation) -> T {
        (self.f)(a, b)
    }
}

/// Largest `n` the menu-enumeration oracle accepts.
pub const NAIVE_LIMIT: usize = 20;

fn check_pair<T: Scalar>(params: &DistanceParams<T>, a: &Permutation, b: &Permutation) -> Result<()> {
    same_n(a, b)?;
    if a.n() != params.n() {
        return Err(Error::DimensionMismatch { expected: params.n(), found: a.n() });
    }
    Ok(())
}

/// Top element of every menu under both rankings, indexed by candidate
/// bitmask.
fn menu_tops(sigma: &Permutation, pi: &Permutation) -> Vec<(u8, u8)> {
    let (ps, pp) = (sigma.positions(), pi.positions());
    let mut top = vec![(0u8, 0u8); 1 << sigma.n()];
    for s in 1usize..top.len() {
        let c = s.trailing_zeros() as u8;
        let rest = s & (s - 1);
        top[s] = if rest == 0 {
            (c, c)
        } else {
            let (ts, tp) = top[rest];
            let a = if ps[c as usize] < ps[ts as usize] { c } else { ts };
            let b = if pp[c as usize] < pp[tp as usize] { c } else { tp };
            (a, b)
        };
    }
    top
}

/// The defining sum over every menu `S` with `|S| >= 2` of
/// `β_|S| · μ(M(S,σ) △ M(S,π))`.
pub fn dist_naive<T: Scalar>(params: &DistanceParams<T>, sigma: &Permutation, pi: &Permutation) -> Result<T> {
    check_pair(params, sigma, pi)?;
    let n = sigma.n();
    if n > NAIVE_LIMIT {
        return Err(Error::Guard { what: "menu enumeration", n, limit: NAIVE_LIMIT });
    }
    let tops = menu_tops(sigma, pi);
    let mu = params.mu().values();
    // μ-mass of the disagreements, grouped by menu size
    let mut by_size = vec![T::zero(); n + 1];
    for (s, &(a, b)) in tops.iter().enumerate() {
        if a == b {
            continue;
        }
        let k = s.count_ones() as usize;
        by_size[k] = by_size[k].clone() + mu[a as usize].clone() + mu[b as usize].clone();
    }
    Ok((2..=n).fold(T::zero(), |acc, k| acc + params.beta().get(k).clone() * by_size[k].clone()))
}

pub(crate) fn closed_form<T: Scalar>(f: &[T], mu: &[T], sigma: &Permutation, pi: &Permutation) -> T {
    let n = sigma.n();
    let mut total = T::zero();
    for x in 0..n {
        let ds = n - 1 - sigma.position(x);
        let dp = n - 1 - pi.position(x);
        let c = common_down_unchecked(sigma, pi, x);
        if ds == c && dp == c {
            continue;
        }
        let term = f[ds].clone() + f[dp].clone() - two::<T>() * f[c].clone();
        total = total + term * mu[x].clone();
    }
    total
}

/// `Σ_x (f(|x↓π|) + f(|x↓σ|) − 2 f(|x↓σ ∩ x↓π|)) μ(x)` in O(n²).
pub fn dist_fast<T: Scalar>(params: &DistanceParams<T>, sigma: &Permutation, pi: &Permutation) -> Result<T> {
    check_pair(params, sigma, pi)?;
    Ok(closed_form(params.f_all(), params.mu().values(), sigma, pi))
}

fn footrule_table<T: Scalar>(f: &[T], mu: Option<&[T]>, sigma: &Permutation, pi: &Permutation) -> T {
    let n = sigma.n();
    (0..n).fold(T::zero(), |acc, x| {
        let gap = (f[n - 1 - sigma.position(x)].clone() - f[n - 1 - pi.position(x)].clone()).abs();
        match mu {
            Some(m) => acc + gap * m[x].clone(),
            None => acc + gap,
        }
    })
}

fn footrule_checks<T: Scalar>(beta: &BetaWeights<T>, sigma: &Permutation, pi: &Permutation) -> Result<()> {
    same_n(sigma, pi)?;
    if sigma.n() != beta.n() {
        return Err(Error::DimensionMismatch { expected: beta.n(), found: sigma.n() });
    }
    if !beta.is_nonnegative() {
        return Err(Error::InvalidParameter("the footrule needs β >= 0".into()));
    }
    Ok(())
}

/// β-Spearman footrule `Σ_x |f(|x↓σ|) − f(|x↓π|)|`.
pub fn footrule<T: Scalar>(beta: &BetaWeights<T>, sigma: &Permutation, pi: &Permutation) -> Result<T> {
    footrule_checks(beta, sigma, pi)?;
    Ok(footrule_table(&f_beta_table(beta), None, sigma, pi))
}

/// μ-weighted footrule `Σ_x |f(|x↓σ|) − f(|x↓π|)| μ(x)`.
pub fn footrule_mu<T: Scalar>(
    beta: &BetaWeights<T>,
    mu: &Measure<T>,
    sigma: &Permutation,
    pi: &Permutation,
) -> Result<T> {
    footrule_checks(beta, sigma, pi)?;
    if mu.n() != beta.n() {
        return Err(Error::DimensionMismatch { expected: beta.n(), found: mu.n() });
    }
    Ok(footrule_table(&f_beta_table(beta), Some(mu.values()), sigma, pi))
}

/// [`footrule_mu`] reusing the table stored in `params`.
pub fn footrule_params<T: Scalar>(params: &DistanceParams<T>, sigma: &Permutation, pi: &Permutation) -> Result<T> {
    footrule_checks(params.beta(), sigma, pi)?;
    Ok(footrule_table(params.f_all(), Some(params.mu().values()), sigma, pi))
}

/// The part of the closed form attributed to positions `b..=t`
/// (0-based, inclusive):
/// `Σ_i f(n−1−i)(μ(σ_i) + μ(π_i)) − 2 f(|σ_i↓σ ∩ σ_i↓π|) μ(σ_i)`.
pub fn dist_truncated<T: Scalar>(
    params: &DistanceParams<T>,
    sigma: &Permutation,
    pi: &Permutation,
    b: usize,
    t: usize,
) -> Result<T> {
    check_pair(params, sigma, pi)?;
    let n = sigma.n();
    if b > t || t >= n {
        return Err(Error::InvalidWindow { b, t, n });
    }
    let (f, mu) = (params.f_all(), params.mu().values());
    let mut total = T::zero();
    for i in b..=t {
        let (x, y) = (sigma.at(i), pi.at(i));
        let c = common_down_unchecked(sigma, pi, x);
        total = total + f[n - 1 - i].clone() * (mu[x].clone() + mu[y].clone())
            - two::<T>() * f[c].clone() * mu[x].clone();
    }
    Ok(total)
}

/// `d(σ, V) = Σ_j d(σ, v^j)`, counting multiplicities.
pub fn profile_cost<T: Scalar>(params: &DistanceParams<T>, sigma: &Permutation, profile: &Profile) -> Result<T> {
    if profile.n() != params.n() {
        return Err(Error::DimensionMismatch { expected: params.n(), found: profile.n() });
    }
    let mut total = T::zero();
    for (k, v) in profile.entries() {
        total = total + T::from_u64(*k) * dist_fast(params, sigma, v)?;
    }
    Ok(total)
}
