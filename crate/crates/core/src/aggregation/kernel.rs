//! Profile cost on precomputed weights `w[x][t] = μ(x) f_β(t)`.
//!
//! When every weight is an exact rational the table is scaled to `i128`
//! integers, which keeps exhaustive scans exact and fast; otherwise the
//! scan runs on the caller's scalar.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::profile::Profile;
use crate::scalar::Scalar;
use crate::weights::DistanceParams;

pub(crate) struct Kernel<W> {
    pub n: usize,
    /// `w[x][t]` for `t = 0..n`.
    pub w: Vec<Vec<W>>,
    pub ballots: Vec<Ballot<W>>,
    pub total: W,
}

pub(crate) struct Ballot<W> {
    pub mult: W,
    pub ranking: Vec<usize>,
    pub down: Vec<u64>,
    pub self_cost: W,
}

impl<W: Scalar> Kernel<W> {
    fn build(n: usize, w: Vec<Vec<W>>, profile: &Profile) -> Self {
        let mut total = W::zero();
        let ballots = profile
            .entries()
            .iter()
            .map(|(k, v)| {
                let mult = W::from_u64(*k);
                total = total.clone() + mult.clone();
                let self_cost = (0..n).fold(W::zero(), |acc, x| acc + w[x][n - 1 - v.position(x)].clone());
                Ballot { mult, ranking: v.as_slice().to_vec(), down: v.down_masks(), self_cost }
            })
            .collect();
        Kernel { n, w, ballots, total }
    }

    /// Profile cost of the ranking whose down-set masks are `down`.
    pub fn cost(&self, down: &[u64]) -> W {
        let mut own = W::zero();
        for (x, m) in down.iter().enumerate() {
            own = own + self.w[x][m.count_ones() as usize].clone();
        }
        let mut total = self.total.clone() * own;
        for b in &self.ballots {
            let mut common = W::zero();
            for x in 0..self.n {
                common = common + self.w[x][(down[x] & b.down[x]).count_ones() as usize].clone();
            }
            total = total + b.mult.clone() * (b.self_cost.clone() - common.clone() - common);
        }
        total
    }
}

/// The kernel in whichever representation applies.
pub(crate) enum AnyKernel<T> {
    Scaled { kernel: Kernel<i128>, scale: BigInt },
    Plain(Kernel<T>),
}

impl<T: Scalar> AnyKernel<T> {
    pub fn new(params: &DistanceParams<T>, profile: &Profile) -> Self {
        let n = params.n();
        let w: Vec<Vec<T>> = (0..n)
            .map(|x| (0..n).map(|t| params.mu().get(x).clone() * params.f(t).clone()).collect())
            .collect();
        match scale_table(&w, profile.m(), n) {
            Some((ints, scale)) => AnyKernel::Scaled { kernel: Kernel::build(n, ints, profile), scale },
            None => AnyKernel::Plain(Kernel::build(n, w, profile)),
        }
    }

    /// Converts a scaled integer back to `T`.
    pub fn unscale(scale: &BigInt, v: i128) -> T {
        let r = BigRational::new(BigInt::from(v), scale.clone());
        T::from_ratio(&r).expect("value came from this scalar")
    }
}

/// Integer image of `w` under its least common denominator, if every entry
/// is exact and the worst-case profile cost stays far inside `i128`.
pub(crate) fn scale_table<T: Scalar>(w: &[Vec<T>], m: u64, n: usize) -> Option<(Vec<Vec<i128>>, BigInt)> {
    let ratios: Vec<Vec<BigRational>> =
        w.iter().map(|row| row.iter().map(Scalar::to_ratio).collect::<Option<Vec<_>>>()).collect::<Option<_>>()?;
    let scale = ratios.iter().flatten().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<Vec<BigInt>> = ratios
        .iter()
        .map(|row| row.iter().map(|r| r.numer() * (&scale / r.denom())).collect())
        .collect();
    let max = ints.iter().flatten().map(|v| v.abs()).max().unwrap_or_else(BigInt::zero);
    let bound = max * BigInt::from(m) * BigInt::from(4 * n as u64 + 4) * BigInt::from(n as u64 + 1);
    if bound.bits() > 120 {
        return None;
    }
    let table = ints.iter().map(|row| row.iter().map(|v| v.to_i128().unwrap()).collect()).collect();
    Some((table, scale))
}
