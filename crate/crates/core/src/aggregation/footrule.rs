use crate::distance::profile_cost;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::Permutation;
use crate::scalar::Scalar;
use crate::weights::{BetaWeights, DistanceParams, Measure};

use super::hungarian::hungarian;
use super::{AggregationResult, Method};

/// Matching weights `w[c][p] = μ(c) Σ_j |f(n−1−p) − f(|c↓v^j|)|`
/// (positions 0-based).
fn weights<T: Scalar>(params: &DistanceParams<T>, profile: &Profile) -> Vec<Vec<T>> {
    let n = params.n();
    (0..n)
        .map(|c| {
            (0..n)
                .map(|p| {
                    let s = profile.entries().iter().fold(T::zero(), |acc, (k, v)| {
                        let gap = params.f(n - 1 - p).clone() - params.f(n - 1 - v.position(c)).clone();
                        acc + T::from_u64(*k) * gap.abs()
                    });
                    s * params.mu().get(c).clone()
                })
                .collect()
        })
        .collect()
}

/// `Σ_j footrule_μ(σ, v^j)`, the objective the matching minimizes.
pub fn footrule_objective<T: Scalar>(params: &DistanceParams<T>, sigma: &Permutation, profile: &Profile) -> T {
    let w = weights(params, profile);
    (0..params.n()).fold(T::zero(), |acc, p| acc + w[sigma.at(p)][p].clone())
}

/// Footrule median by minimum-cost matching of candidates to positions.
/// The certificate is the true profile cost of the returned ranking.
pub fn aggregate_footrule<T: Scalar>(
    beta: &BetaWeights<T>,
    mu: &Measure<T>,
    profile: &Profile,
) -> Result<AggregationResult<T>> {
    if !beta.is_nonnegative() {
        return Err(Error::InvalidParameter("footrule aggregation needs β >= 0".into()));
    }
    if !mu.is_positive() {
        return Err(Error::InvalidParameter("footrule aggregation needs μ > 0".into()));
    }
    let params = DistanceParams::new(beta.clone(), mu.clone())?;
    if profile.n() != params.n() {
        return Err(Error::DimensionMismatch { expected: params.n(), found: profile.n() });
    }
    let (assign, total) = hungarian(&weights(&params, profile));
    let mut map = vec![0usize; params.n()];
    for (c, &p) in assign.iter().enumerate() {
        map[p] = c;
    }
    let sigma = Permutation::new(map).expect("perfect matching");
    let cost = profile_cost(&params, &sigma, profile)?;
    Ok(AggregationResult::new(vec![sigma], total, Method::Footrule, Some(cost)))
}
