#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topdiff::{BetaWeights, DistanceParams, Measure, Permutation, Profile};

pub type Q = BigRational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

pub fn int(a: i64) -> Q {
    Q::from_integer(a.into())
}

pub fn qs(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&a| int(a)).collect()
}

pub fn perm(v: &[usize]) -> Permutation {
    Permutation::from_one_based(v).unwrap()
}

/// Nonnegative rational with numerator below `num` and denominator in 1..=den.
pub fn rational(r: &mut impl Rng, num: i64, den: i64) -> Q {
    q(r.gen_range(0..num), r.gen_range(1..=den))
}

pub fn random_perm(r: &mut impl Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(r);
    Permutation::new(v).unwrap()
}

pub fn random_profile(r: &mut impl Rng, n: usize, m: usize) -> Profile {
    Profile::from_rankings((0..m).map(|_| random_perm(r, n)).collect()).unwrap()
}

/// Random nonnegative rational parameters, β₂ > 0 and μ > 0 unless the
/// caller zeroes them afterwards.
pub fn random_params(r: &mut impl Rng, n: usize) -> DistanceParams<Q> {
    let mut beta: Vec<Q> = (2..=n).map(|_| rational(r, 6, 4)).collect();
    beta[0] += int(1);
    let mu: Vec<Q> = (0..n).map(|_| rational(r, 5, 3) + q(1, 2)).collect();
    params(beta, mu)
}

pub fn params(beta: Vec<Q>, mu: Vec<Q>) -> DistanceParams<Q> {
    DistanceParams::new(BetaWeights::new(beta).unwrap(), Measure::new(mu).unwrap()).unwrap()
}

pub fn int_params(beta: &[i64], mu: &[i64]) -> DistanceParams<Q> {
    params(qs(beta), qs(mu))
}

pub fn counting(beta: BetaWeights<Q>) -> DistanceParams<Q> {
    let n = beta.n();
    DistanceParams::new(beta, Measure::counting(n)).unwrap()
}

/// Straight from the definition: every menu of two or more candidates
/// whose tops differ adds `β_|S| (μ(top_σ) + μ(top_π))`.
pub fn menu_oracle(beta: &[Q], mu: &[Q], s: &Permutation, p: &Permutation) -> Q {
    let n = s.n();
    let mut total = int(0);
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let first = |r: &Permutation| (0..n).map(|pos| r.at(pos)).find(|c| mask & (1 << c) != 0).unwrap();
        let (a, b) = (first(s), first(p));
        if a != b {
            total += &beta[size - 2] * (&mu[a] + &mu[b]);
        }
    }
    total
}

fn lcm_of_denominators(v: &[Q]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()))
}

/// The same distance with β and μ multiplied by the lcm of their
/// denominators, in i128. Distances and footrules scale by `scale`.
pub fn scaled(d: &DistanceParams<Q>) -> (DistanceParams<i128>, BigInt) {
    use num_traits::ToPrimitive;
    let (lb, lm) = (lcm_of_denominators(d.beta().values()), lcm_of_denominators(d.mu().values()));
    let conv = |v: &[Q], l: &BigInt| -> Vec<i128> {
        v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer().to_i128().unwrap()).collect()
    };
    let beta = BetaWeights::new(conv(d.beta().values(), &lb)).unwrap();
    let mu = Measure::new(conv(d.mu().values(), &lm)).unwrap();
    (DistanceParams::new(beta, mu).unwrap(), lb * lm)
}
