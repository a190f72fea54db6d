use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::distance::profile_cost;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::Permutation;
use crate::scalar::Scalar;
use crate::weights::{pascal, BetaWeights, DistanceParams, Measure};

use super::kernel::{AnyKernel, Kernel};
use super::{AggregationResult, Method};

/// MyopicTop: greedily fix strict-majority top candidates, then pick the
/// best ordered window of `min(K, |Q|)` remaining candidates under the
/// truncated objective. The tail after the window is filled in ascending
/// label order; the truncated objective does not depend on it.
pub fn aggregate_myopic<T: Scalar>(
    params: &DistanceParams<T>,
    profile: &Profile,
    k: usize,
) -> Result<AggregationResult<T>> {
    let n = params.n();
    if k < 1 {
        return Err(Error::InvalidParameter("MyopicTop needs K >= 1".into()));
    }
    if !params.beta().is_nonnegative() {
        return Err(Error::InvalidParameter("MyopicTop needs β >= 0".into()));
    }
    if profile.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: profile.n() });
    }
    if n > 64 {
        return Err(Error::Guard { what: "bitmask", n, limit: 64 });
    }

    let m = profile.m();
    let mut prefix: Vec<usize> = Vec::new();
    let mut remaining: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    while remaining != 0 {
        let mut counts = vec![0u64; n];
        for (mult, v) in profile.entries() {
            let top = v.as_slice().iter().copied().find(|&c| remaining >> c & 1 == 1).expect("nonempty Q");
            counts[top] += mult;
        }
        match (0..n).find(|&c| remaining >> c & 1 == 1 && 2 * counts[c] > m) {
            Some(c) => {
                prefix.push(c);
                remaining &= !(1 << c);
            }
            None => break,
        }
    }

    let depth = k.min(remaining.count_ones() as usize);
    let (window, optimum) = if depth == 0 {
        (Vec::new(), T::zero())
    } else {
        match AnyKernel::new(params, profile) {
            AnyKernel::Scaled { kernel, scale } => {
                let (w, v) = best_window(&kernel, prefix.len(), remaining, depth);
                (w, AnyKernel::<T>::unscale(&scale, v))
            }
            AnyKernel::Plain(kernel) => best_window(&kernel, prefix.len(), remaining, depth),
        }
    };
    let mut map = prefix;
    let mut left = remaining;
    for &c in &window {
        left &= !(1 << c);
    }
    map.extend(window);
    map.extend((0..n).filter(|&c| left >> c & 1 == 1));
    let sigma = Permutation::new(map).expect("prefix, window and tail partition the candidates");
    let cost = profile_cost(params, &sigma, profile)?;
    Ok(AggregationResult::new(vec![sigma], optimum, Method::Myopic, Some(cost)))
}

struct Search<'a, W> {
    kernel: &'a Kernel<W>,
    stack: Vec<usize>,
    best: Option<(Vec<usize>, W)>,
}

/// Depth-first search over ordered windows in lexicographic order; the
/// first window reaching the minimum wins.
fn best_window<W: Scalar>(kernel: &Kernel<W>, start: usize, remaining: u64, depth: usize) -> (Vec<usize>, W) {
    let mut s = Search { kernel, stack: Vec::with_capacity(depth), best: None };
    extend(&mut s, start, remaining, depth, W::zero());
    s.best.expect("depth >= 1 and candidates remain")
}

fn extend<W: Scalar>(s: &mut Search<W>, pos: usize, remaining: u64, left: usize, acc: W) {
    if left == 0 {
        if s.best.as_ref().is_none_or(|(_, b)| acc < *b) {
            s.best = Some((s.stack.clone(), acc));
        }
        return;
    }
    let kern = s.kernel;
    let t = kern.n - 1 - pos;
    for x in 0..kern.n {
        if remaining >> x & 1 == 0 {
            continue;
        }
        let below = remaining & !(1 << x);
        let mut term = kern.total.clone() * kern.w[x][t].clone();
        for b in &kern.ballots {
            let y = b.ranking[pos];
            let c = (below & b.down[x]).count_ones() as usize;
            let w2 = kern.w[x][c].clone();
            term = term + b.mult.clone() * (kern.w[y][t].clone() - w2.clone() - w2);
        }
        s.stack.push(x);
        extend(s, pos + 1, below, left - 1, acc.clone() + term);
        s.stack.pop();
    }
}

/// Weight sequences with known truncation depth.
#[derive(Clone, Debug, PartialEq)]
pub enum BetaRule {
    /// `β_j = j + 1`.
    PlusOne,
    /// `β_j = 1 + (−1)^j`.
    Alternating,
    /// `β_j = (α − 1)^j`, `α > 1`.
    Exponential { alpha: BigRational },
    /// Explicit weights `(β_2, …, β_n)`; only the finite-horizon depth exists.
    Explicit(BetaWeights<BigRational>),
}

impl BetaRule {
    fn beta(&self, j: usize) -> BigRational {
        match self {
            BetaRule::PlusOne => BigRational::from_integer(BigInt::from(j + 1)),
            BetaRule::Alternating => BigRational::from_integer(BigInt::from(if j.is_multiple_of(2) { 2 } else { 0 })),
            BetaRule::Exponential { alpha } => (alpha - BigRational::one()).pow(j as i32),
            BetaRule::Explicit(b) => b.get(j).clone(),
        }
    }

    /// The rule's weights at dimension `n`.
    pub fn weights<T: Scalar>(&self, n: usize) -> Result<BetaWeights<T>> {
        if let BetaRule::Explicit(b) = self {
            if b.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: b.n() });
            }
        }
        let vals = (2..=n)
            .map(|j| {
                let r = self.beta(j);
                T::from_ratio(&r).ok_or_else(|| Error::Unrepresentable(r.to_string()))
            })
            .collect::<Result<Vec<T>>>()?;
        BetaWeights::new(vals)
    }
}

/// Smallest integer `K >= 0` with `base^K >= x`, for `base > 1`.
fn ceil_log(base: &BigRational, x: &BigRational) -> usize {
    let mut k = 0;
    let mut acc = BigRational::one();
    while acc < *x {
        acc *= base;
        k += 1;
    }
    k
}

/// Depth `g(1/ε)` from the closed forms, or from the finite-horizon
/// definition when `horizon` is given for an explicit rule. Clamped to
/// at least 1 since MyopicTop requires `K >= 1`.
pub fn ptas_depth(rule: &BetaRule, inv_epsilon: &BigRational, horizon: Option<usize>) -> Result<usize> {
    if *inv_epsilon <= BigRational::zero() {
        return Err(Error::InvalidParameter("1/ε must be positive".into()));
    }
    let two = BigRational::from_integer(2.into());
    let k = match rule {
        BetaRule::PlusOne | BetaRule::Alternating => ceil_log(&two, &(BigRational::from_integer(4.into()) * inv_epsilon)),
        BetaRule::Exponential { alpha } => {
            if *alpha <= BigRational::one() {
                return Err(Error::InvalidParameter(format!("α must exceed 1, got {alpha}")));
            }
            let a1 = alpha - BigRational::one();
            ceil_log(alpha, &(alpha * alpha * inv_epsilon / (&a1 * &a1)))
        }
        BetaRule::Explicit(_) => {
            let n = horizon.ok_or_else(|| {
                Error::InvalidParameter("explicit weights have no closed form; give a finite horizon n".into())
            })?;
            return ptas_depth_finite(rule, inv_epsilon, n);
        }
    };
    Ok(k.max(1))
}

/// Minimal `K >= 1` with
/// `sup_{max(K,2) <= t <= n} Σ_{j=2}^{t−K} β_j C(t−K, j) / Σ_{j=0}^{t−2} β_{j+2} C(t−2, j) <= ε`.
pub fn ptas_depth_finite(rule: &BetaRule, inv_epsilon: &BigRational, n: usize) -> Result<usize> {
    if *inv_epsilon <= BigRational::zero() {
        return Err(Error::InvalidParameter("1/ε must be positive".into()));
    }
    if n < 2 {
        return Err(Error::InvalidParameter("the horizon must be at least 2".into()));
    }
    if let BetaRule::Explicit(b) = rule {
        if b.n() < n {
            return Err(Error::DimensionMismatch { expected: n, found: b.n() });
        }
    }
    let table = pascal(n);
    let c = |a: usize, b: usize| -> BigRational {
        table[a].get(b).map_or_else(BigRational::zero, |v| BigRational::from_integer(v.clone()))
    };
    let beta: Vec<BigRational> = (0..=n).map(|j| if j >= 2 { rule.beta(j) } else { BigRational::zero() }).collect();
    let denom: Vec<BigRational> = (0..=n)
        .map(|t| if t < 2 { BigRational::zero() } else { (0..=t - 2).map(|j| &beta[j + 2] * c(t - 2, j)).sum() })
        .collect();
    for k in 1..=n {
        let ok = (k.max(2)..=n).all(|t| {
            let top: BigRational = (2..=t - k).map(|j| &beta[j] * c(t - k, j)).sum();
            if top.is_zero() {
                return true;
            }
            !denom[t].is_zero() && top * inv_epsilon <= denom[t]
        });
        if ok {
            return Ok(k);
        }
    }
    unreachable!("K = n empties every numerator")
}

/// The argument `12U / (u ε)` that makes MyopicTop a 1+ε approximation,
/// for a measure with `0 < u <= μ <= U`.
pub fn guarantee_inv_epsilon(mu: &Measure<BigRational>, epsilon: &BigRational) -> Result<BigRational> {
    if *epsilon <= BigRational::zero() {
        return Err(Error::InvalidParameter("ε must be positive".into()));
    }
    let (u, big) = (mu.min(), mu.max());
    if u <= BigRational::zero() {
        return Err(Error::InvalidParameter("the PTAS needs μ > 0".into()));
    }
    Ok(BigRational::from_integer(12.into()) * big / (u * epsilon))
}
