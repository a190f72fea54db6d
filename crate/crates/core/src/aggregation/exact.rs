use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::{factorial, next_permutation, nth_permutation, Permutation};
use crate::scalar::Scalar;
use crate::weights::DistanceParams;

use super::kernel::{AnyKernel, Kernel};
use super::{AggregationResult, Method};

/// Largest `n` the exhaustive solver accepts.
pub const EXACT_LIMIT: usize = 10;

/// The full consensus set `argmin_σ d(σ, V)`.
pub fn aggregate_exact<T: Scalar>(params: &DistanceParams<T>, profile: &Profile) -> Result<AggregationResult<T>> {
    aggregate_exact_threads(params, profile, 1)
}

/// [`aggregate_exact`] with the scan split over `threads` workers. Chunks
/// are merged in order, so the result does not depend on scheduling.
pub fn aggregate_exact_threads<T: Scalar>(
    params: &DistanceParams<T>,
    profile: &Profile,
    threads: usize,
) -> Result<AggregationResult<T>> {
    let n = params.n();
    if profile.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: profile.n() });
    }
    if n > EXACT_LIMIT {
        return Err(Error::Guard { what: "exhaustive n!", n, limit: EXACT_LIMIT });
    }
    let (minimizers, optimum) = match AnyKernel::new(params, profile) {
        AnyKernel::Scaled { kernel, scale } => {
            let (mins, best) = scan(&kernel, threads);
            (mins, AnyKernel::<T>::unscale(&scale, best))
        }
        AnyKernel::Plain(kernel) => scan(&kernel, threads),
    };
    let minimizers = minimizers.into_iter().map(|m| Permutation::new(m).expect("arrangement")).collect();
    Ok(AggregationResult::new(minimizers, optimum, Method::Exact, None))
}

fn scan<W: Scalar>(kernel: &Kernel<W>, threads: usize) -> (Vec<Vec<usize>>, W) {
    let n = kernel.n;
    let total = factorial(n).expect("guarded n");
    let threads = threads.clamp(1, total as usize) as u64;
    let chunk = total.div_ceil(threads);
    let ranges: Vec<(u64, u64)> = (0..threads)
        .map(|t| (t * chunk, ((t + 1) * chunk).min(total)))
        .filter(|(a, b)| a < b)
        .collect();
    let parts: Vec<(Vec<Vec<usize>>, W)> = if ranges.len() == 1 {
        vec![scan_range(kernel, ranges[0])]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = ranges.iter().map(|&r| s.spawn(move || scan_range(kernel, r))).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let mut best: Option<W> = None;
    let mut mins = Vec::new();
    for (m, v) in parts {
        match &best {
            Some(b) if v > *b => {}
            Some(b) if v == *b => mins.extend(m),
            _ => {
                best = Some(v);
                mins = m;
            }
        }
    }
    (mins, best.expect("at least one permutation"))
}

fn scan_range<W: Scalar>(kernel: &Kernel<W>, (start, end): (u64, u64)) -> (Vec<Vec<usize>>, W) {
    let n = kernel.n;
    let mut cur = nth_permutation(n, start);
    let mut down = vec![0u64; n];
    let mut best: Option<W> = None;
    let mut mins: Vec<Vec<usize>> = Vec::new();
    for _ in start..end {
        let mut below = 0u64;
        for &c in cur.iter().rev() {
            down[c] = below;
            below |= 1 << c;
        }
        let cost = kernel.cost(&down);
        match &best {
            Some(b) if cost > *b => {}
            Some(b) if cost == *b => mins.push(cur.clone()),
            _ => {
                best = Some(cost);
                mins.clear();
                mins.push(cur.clone());
            }
        }
        next_permutation(&mut cur);
    }
    (mins, best.expect("nonempty range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::profile_cost;
    use crate::weights::{BetaWeights, Measure};
    use num_rational::BigRational;

    type Q = BigRational;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_based(v).unwrap()
    }

    fn params(beta: &[i64], mu: &[i64]) -> DistanceParams<Q> {
        let q = |v: &[i64]| v.iter().map(|&x| Q::from_integer(x.into())).collect::<Vec<_>>();
        DistanceParams::new(BetaWeights::new(q(beta)).unwrap(), Measure::new(q(mu)).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_profile_has_three_medians() {
        let v = Profile::from_rankings(vec![p(&[1, 2, 3]), p(&[2, 3, 1]), p(&[3, 1, 2])]).unwrap();
        let r = aggregate_exact(&params(&[1, 0], &[1, 1, 1]), &v).unwrap();
        assert_eq!(r.minimizers, vec![p(&[1, 2, 3]), p(&[2, 3, 1]), p(&[3, 1, 2])]);
        assert_eq!(r.winners.len(), 3);
        assert_eq!(r.optimum, Q::from_integer(8.into()));
    }

    #[test]
    fn blockwise_example() {
        let v = Profile::from_rankings(vec![p(&[1, 2, 3, 4]), p(&[3, 2, 1, 4]), p(&[4, 2, 3, 1])]).unwrap();
        let r = aggregate_exact(&params(&[1, 1, 1], &[1, 1, 1, 1]), &v).unwrap();
        // a tie under the first-listed-is-best menu choice
        assert_eq!(r.minimizers, vec![p(&[2, 3, 1, 4]), p(&[3, 2, 1, 4])]);
        assert_eq!(r.optimum, Q::from_integer(34.into()));
    }

    #[test]
    fn unanimous_and_threads() {
        let prm = params(&[2, 1, 1, 3], &[1, 2, 1, 3, 1]);
        let s = p(&[4, 2, 5, 1, 3]);
        let v = Profile::new(5, vec![(3, s.clone())]).unwrap();
        assert_eq!(aggregate_exact(&prm, &v).unwrap().minimizers, vec![s]);
        let w = Profile::from_rankings(vec![p(&[1, 2, 3, 4, 5]), p(&[5, 4, 3, 2, 1]), p(&[2, 1, 4, 3, 5])]).unwrap();
        let one = aggregate_exact(&prm, &w).unwrap();
        for t in [2, 3, 7] {
            assert_eq!(aggregate_exact_threads(&prm, &w, t).unwrap(), one);
        }
        assert_eq!(profile_cost(&prm, &one.minimizers[0], &w).unwrap(), one.optimum);
    }

    #[test]
    fn float_scalar_takes_the_plain_path() {
        let q = |v: &[f64]| v.to_vec();
        let prm = DistanceParams::new(BetaWeights::new(q(&[1.0, 0.5])).unwrap(), Measure::new(q(&[1.0, 1.0, 2.0])).unwrap()).unwrap();
        let v = Profile::from_rankings(vec![p(&[1, 2, 3]), p(&[3, 1, 2]), p(&[2, 3, 1])]).unwrap();
        let r = aggregate_exact(&prm, &v).unwrap();
        let exact = aggregate_exact(&params(&[2, 1], &[1, 1, 2]), &v).unwrap();
        assert_eq!(r.minimizers, exact.minimizers);
    }

    #[test]
    fn guard() {
        let n = EXACT_LIMIT + 1;
        let prm = DistanceParams::new(BetaWeights::<Q>::from_fn(n, |_| Q::from_integer(1.into())).unwrap(), Measure::counting(n)).unwrap();
        let v = Profile::from_rankings(vec![Permutation::identity(n)]).unwrap();
        assert!(matches!(aggregate_exact(&prm, &v), Err(Error::Guard { .. })));
    }
}
