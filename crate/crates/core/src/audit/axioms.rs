use std::collections::BTreeMap;

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::ranking::{all_permutations, factorial, Permutation};
use crate::scalar::Scalar;
use crate::weights::Classification;

use super::{AuditReport, Axiom, Witness};

/// Largest `n` for the exhaustive axiom scans.
pub const AXIOM_LIMIT: usize = 5;

fn guard(n: usize) -> Result<()> {
    if n > AXIOM_LIMIT {
        Err(Error::Guard { what: "exhaustive axiom", n, limit: AXIOM_LIMIT })
    } else {
        Ok(())
    }
}

/// All rankings with their pairwise distances and pair-order masks.
struct Table<T> {
    n: usize,
    perms: Vec<Permutation>,
    masks: Vec<u64>,
    dist: Vec<T>,
}

impl<T: Scalar> Table<T> {
    fn new<D: Distance<T>>(d: &D) -> Self {
        let n = d.n();
        let perms: Vec<Permutation> = all_permutations(n).collect();
        let masks = perms.iter().map(pair_mask).collect();
        let mut dist = Vec::with_capacity(perms.len() * perms.len());
        for a in &perms {
            for b in &perms {
                dist.push(d.distance(a, b));
            }
        }
        Table { n, perms, masks, dist }
    }

    fn len(&self) -> usize {
        self.perms.len()
    }

    fn d(&self, a: usize, b: usize) -> &T {
        &self.dist[a * self.perms.len() + b]
    }

    /// `σ − ω − π`: wherever σ and π agree on a pair, ω agrees too.
    fn between(&self, s: usize, w: usize, p: usize) -> bool {
        let (ms, mw, mp) = (self.masks[s], self.masks[w], self.masks[p]);
        (ms ^ mw) & !(ms ^ mp) == 0
    }

    fn index(&self, p: &Permutation) -> usize {
        rank(p)
    }
}

/// Bit `i·n + j` (for `i < j`) is set when `i` is ranked above `j`.
fn pair_mask(p: &Permutation) -> u64 {
    let n = p.n();
    let mut m = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if p.prefers(i, j) {
                m |= 1 << (i * n + j);
            }
        }
    }
    m
}

/// Lexicographic rank of `p` among all rankings of its size.
fn rank(p: &Permutation) -> usize {
    let n = p.n();
    let s = p.as_slice();
    let mut r = 0;
    for i in 0..n {
        let smaller = s[i + 1..].iter().filter(|&&c| c < s[i]).count();
        r += smaller * factorial(n - 1 - i).unwrap() as usize;
    }
    r
}

/// Checks one axiom over every tuple it quantifies, returning the first
/// counterexample in lexicographic order.
pub fn check_axiom<T: Scalar, D: Distance<T>>(d: &D, axiom: Axiom) -> Result<AuditReport> {
    let n = d.n();
    guard(n)?;
    let t = Table::new(d);
    let report = match axiom {
        Axiom::A1 => betweenness_additive(&t).map_or_else(
            || AuditReport::holds(axiom, ""),
            |w| AuditReport::fails(axiom, w, "d(π,σ) ≠ d(π,ω) + d(ω,σ) for σ − ω − π"),
        ),
        Axiom::A2 => transposition_identity(d, n).map_or_else(
            || AuditReport::holds(axiom, if n < 4 { "vacuous for n < 4" } else { "" }),
            |w| AuditReport::fails(axiom, w, "g(i,j) + g(k,l) ≠ g(i,k) + g(j,l) on single-pair swaps"),
        ),
        Axiom::A3 => intermediate_exists(&t).map_or_else(
            || AuditReport::holds(axiom, ""),
            |w| AuditReport::fails(axiom, w, "no additive intermediate ranking"),
        ),
        Axiom::A4 | Axiom::A5 | Axiom::A6 => {
            let edges = EdgeValues::new(&t);
            let found = match axiom {
                Axiom::A4 => edges.position_invariance(),
                Axiom::A5 => edges.product_condition(),
                _ => edges.sum_condition(),
            };
            found.map_or_else(|| AuditReport::holds(axiom, ""), |w| AuditReport::fails(axiom, w, "edge lengths disagree"))
        }
    };
    Ok(report)
}

fn betweenness_additive<T: Scalar>(t: &Table<T>) -> Option<Witness> {
    let len = t.len();
    for s in 0..len {
        for w in 0..len {
            if w == s {
                continue;
            }
            for p in 0..len {
                if p == s || p == w || !t.between(s, w, p) {
                    continue;
                }
                if *t.d(p, s) != t.d(p, w).clone() + t.d(w, s).clone() {
                    return Some(Witness::Rankings(vec![t.perms[s].clone(), t.perms[w].clone(), t.perms[p].clone()]));
                }
            }
        }
    }
    None
}

/// Length of the edge that swaps `i` directly above `j` into `j` above `i`,
/// taken at the top of an otherwise increasing ranking.
fn swap_length<T: Scalar, D: Distance<T>>(d: &D, i: usize, j: usize) -> T {
    let n = d.n();
    let mut map = vec![i, j];
    map.extend((0..n).filter(|&c| c != i && c != j));
    let s = Permutation::new(map).expect("arrangement");
    d.distance(&s, &s.swap_adjacent(0))
}

fn transposition_identity<T: Scalar, D: Distance<T>>(d: &D, n: usize) -> Option<Witness> {
    let g = |i, j| swap_length(d, i, j);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let q = [i, j, k, l];
                    if (0..4).any(|a| (a + 1..4).any(|b| q[a] == q[b])) {
                        continue;
                    }
                    if g(i, j) + g(k, l) != g(i, k) + g(j, l) {
                        return Some(Witness::Transpositions(q));
                    }
                }
            }
        }
    }
    None
}

fn intermediate_exists<T: Scalar>(t: &Table<T>) -> Option<Witness> {
    let len = t.len();
    for s in 0..len {
        for p in 0..len {
            if (t.masks[s] ^ t.masks[p]).count_ones() <= 1 {
                continue;
            }
            let ok = (0..len).any(|w| {
                w != s && w != p && t.between(s, w, p) && *t.d(s, p) == t.d(s, w).clone() + t.d(w, p).clone()
            });
            if !ok {
                return Some(Witness::Rankings(vec![t.perms[s].clone(), t.perms[p].clone()]));
            }
        }
    }
    None
}

/// Distinct lengths of the edges `(ρ, ρ t_{a,a+1})`, grouped by position
/// `a` and by the swapped ordered couple `(ρ_a, ρ_{a+1})`, with one
/// representative ranking per length.
struct EdgeValues<T> {
    n: usize,
    groups: Vec<BTreeMap<(usize, usize), Vec<(T, Permutation)>>>,
}

impl<T: Scalar> EdgeValues<T> {
    fn new(t: &Table<T>) -> Self {
        let n = t.n;
        let mut groups = vec![BTreeMap::new(); n.saturating_sub(1)];
        for (i, r) in t.perms.iter().enumerate() {
            for a in 0..n - 1 {
                let v = t.d(i, t.index(&r.swap_adjacent(a))).clone();
                let entry: &mut Vec<(T, Permutation)> = groups[a].entry((r.at(a), r.at(a + 1))).or_default();
                if !entry.iter().any(|(x, _)| *x == v) {
                    entry.push((v, r.clone()));
                }
            }
        }
        EdgeValues { n, groups }
    }

    fn get(&self, a: usize, pair: (usize, usize)) -> &[(T, Permutation)] {
        self.groups[a].get(&pair).map_or(&[], Vec::as_slice)
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect()
    }

    fn position_invariance(&self) -> Option<Witness> {
        for (a, g) in self.groups.iter().enumerate() {
            for vals in g.values() {
                if vals.len() > 1 {
                    return Some(Witness::Edges(vec![(vals[0].1.clone(), a), (vals[1].1.clone(), a)]));
                }
            }
        }
        None
    }

    /// `d(σ)·d(τ) = d(π)·d(ρ)` whenever σ, ρ swap at `a`, π, τ at `b ≠ a`,
    /// σ and π swap the same couple, and ρ and τ swap the same couple.
    fn product_condition(&self) -> Option<Witness> {
        let pairs = self.pairs();
        for a in 0..self.groups.len() {
            for b in 0..self.groups.len() {
                if a == b {
                    continue;
                }
                for &p in &pairs {
                    for &q in &pairs {
                        for (es, s) in self.get(a, p) {
                            for (ep, pi) in self.get(b, p) {
                                for (er, r) in self.get(a, q) {
                                    for (et, tau) in self.get(b, q) {
                                        if es.clone() * et.clone() != ep.clone() * er.clone() {
                                            return Some(Witness::Edges(vec![
                                                (s.clone(), a),
                                                (pi.clone(), b),
                                                (r.clone(), a),
                                                (tau.clone(), b),
                                            ]));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// `d(σ) + d(π) = d(ρ) + d(τ)` whenever the swapped couples of σ and π
    /// are disjoint and, as a pair of sets, equal those of ρ and τ.
    fn sum_condition(&self) -> Option<Witness> {
        let pairs = self.pairs();
        for a in 0..self.groups.len() {
            for &p in &pairs {
                for &q in &pairs {
                    if p == q {
                        continue;
                    }
                    let (gp, gq) = (self.get(a, p), self.get(a, q));
                    for (e1, s) in gp {
                        for (e2, pi) in gq {
                            for (e3, r) in gp {
                                for (e4, tau) in gq {
                                    if e1.clone() + e2.clone() != e3.clone() + e4.clone() {
                                        return Some(Witness::Edges(vec![
                                            (s.clone(), a),
                                            (pi.clone(), a),
                                            (r.clone(), a),
                                            (tau.clone(), a),
                                        ]));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

/// Re-evaluates the axiom's statement at a reported counterexample.
pub fn confirm_axiom_witness<T: Scalar, D: Distance<T>>(d: &D, axiom: Axiom, witness: &Witness) -> bool {
    let n = d.n();
    let edge = |(r, a): &(Permutation, usize)| d.distance(r, &r.swap_adjacent(*a));
    let couple = |(r, a): &(Permutation, usize)| (r.at(*a), r.at(*a + 1));
    match (axiom, witness) {
        (Axiom::A1, Witness::Rankings(v)) if v.len() == 3 => {
            let (s, w, p) = (&v[0], &v[1], &v[2]);
            s != w && w != p && s != p && {
                let (ms, mw, mp) = (pair_mask(s), pair_mask(w), pair_mask(p));
                (ms ^ mw) & !(ms ^ mp) == 0
            } && d.distance(p, s) != d.distance(p, w) + d.distance(w, s)
        }
        (Axiom::A2, Witness::Transpositions([i, j, k, l])) => {
            let g = |a, b| swap_length(d, a, b);
            g(*i, *j) + g(*k, *l) != g(*i, *k) + g(*j, *l)
        }
        (Axiom::A3, Witness::Rankings(v)) if v.len() == 2 => {
            let (s, p) = (&v[0], &v[1]);
            (pair_mask(s) ^ pair_mask(p)).count_ones() > 1
                && !all_permutations(n).any(|w| {
                    w != *s && w != *p && {
                        let (ms, mw, mp) = (pair_mask(s), pair_mask(&w), pair_mask(p));
                        (ms ^ mw) & !(ms ^ mp) == 0
                    } && d.distance(s, p) == d.distance(s, &w) + d.distance(&w, p)
                })
        }
        (Axiom::A4, Witness::Edges(e)) if e.len() == 2 => {
            e[0].1 == e[1].1 && couple(&e[0]) == couple(&e[1]) && edge(&e[0]) != edge(&e[1])
        }
        (Axiom::A5, Witness::Edges(e)) if e.len() == 4 => {
            e[0].1 == e[2].1
                && e[1].1 == e[3].1
                && e[0].1 != e[1].1
                && couple(&e[0]) == couple(&e[1])
                && couple(&e[2]) == couple(&e[3])
                && edge(&e[0]) * edge(&e[3]) != edge(&e[1]) * edge(&e[2])
        }
        (Axiom::A6, Witness::Edges(e)) if e.len() == 4 => {
            let a = e[0].1;
            let lhs = [couple(&e[0]), couple(&e[1])];
            let mut rhs = [couple(&e[2]), couple(&e[3])];
            if rhs[0] != lhs[0] {
                rhs.swap(0, 1);
            }
            e.iter().all(|x| x.1 == a)
                && lhs[0] != lhs[1]
                && lhs == rhs
                && edge(&e[0]) + edge(&e[1]) != edge(&e[2]) + edge(&e[3])
        }
        _ => false,
    }
}

/// First violation of nonnegativity, symmetry or the triangle inequality.
pub fn find_semimetric_violation<T: Scalar, D: Distance<T>>(d: &D) -> Result<Option<Witness>> {
    guard(d.n())?;
    let t = Table::new(d);
    Ok(semimetric_violation(&t))
}

fn semimetric_violation<T: Scalar>(t: &Table<T>) -> Option<Witness> {
    let len = t.len();
    let zero = T::zero();
    for a in 0..len {
        if !t.d(a, a).is_zero() {
            return Some(Witness::Rankings(vec![t.perms[a].clone()]));
        }
        for b in 0..len {
            if *t.d(a, b) < zero || t.d(a, b) != t.d(b, a) {
                return Some(Witness::Rankings(vec![t.perms[a].clone(), t.perms[b].clone()]));
            }
        }
    }
    for a in 0..len {
        for b in 0..len {
            let dab = t.d(a, b);
            for c in 0..len {
                if *t.d(a, c) > dab.clone() + t.d(b, c).clone() {
                    return Some(Witness::Rankings(vec![t.perms[a].clone(), t.perms[b].clone(), t.perms[c].clone()]));
                }
            }
        }
    }
    None
}

/// Decides the metric axioms by scanning every pair and triple:
/// `NotSemimetric` on any violation, `Metric` when distinct rankings are
/// always at positive distance, `SemimetricOnly` otherwise.
pub fn brute_force_classification<T: Scalar, D: Distance<T>>(d: &D) -> Result<Classification> {
    guard(d.n())?;
    let t = Table::new(d);
    if semimetric_violation(&t).is_some() {
        return Ok(Classification::NotSemimetric);
    }
    let len = t.len();
    let separated = (0..len).all(|a| (0..len).all(|b| a == b || *t.d(a, b) > T::zero()));
    Ok(if separated { Classification::Metric } else { Classification::SemimetricOnly })
}

/// Edge weights `g(i, j)` read off single adjacent swaps, and whether
/// `d(σ, π) = Σ_{(i,j) ∈ I(σ,π)} g(i, j)` on every pair.
#[derive(Clone, Debug)]
pub struct PairwiseRecovery<T> {
    pub g: Vec<Vec<T>>,
    pub symmetric: bool,
    /// First pair the decomposition misses.
    pub mismatch: Option<(Permutation, Permutation)>,
}

impl<T> PairwiseRecovery<T> {
    pub fn reproduces(&self) -> bool {
        self.symmetric && self.mismatch.is_none()
    }
}

pub fn recover_pairwise_weights<T: Scalar, D: Distance<T>>(d: &D) -> Result<PairwiseRecovery<T>> {
    let n = d.n();
    guard(n)?;
    let mut g = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            g[i][j] = swap_length(d, i, j);
        }
    }
    let symmetric = (0..n).all(|i| (0..n).all(|j| g[i][j] == g[j][i]));
    let perms: Vec<Permutation> = all_permutations(n).collect();
    let mut mismatch = None;
    'outer: for s in &perms {
        for p in &perms {
            let mut sum = T::zero();
            for i in 0..n {
                for j in 0..n {
                    if i != j && s.prefers(i, j) && p.prefers(j, i) {
                        sum = sum + g[i][j].clone();
                    }
                }
            }
            if sum != d.distance(s, p) {
                mismatch = Some((s.clone(), p.clone()));
                break 'outer;
            }
        }
    }
    Ok(PairwiseRecovery { g, symmetric, mismatch })
}

/// `G(σ, π)`: the least total edge length over minimal adjacent-swap paths
/// from σ to π, where an edge `(ρ, ρ t_{a,a+1})` has length
/// `d(ρ, ρ t_{a,a+1})`. Rows and columns follow lexicographic order.
pub fn graphic_distances<T: Scalar, D: Distance<T>>(d: &D) -> Result<Vec<Vec<T>>> {
    let n = d.n();
    guard(n)?;
    let t = Table::new(d);
    let len = t.len();
    let mut out = Vec::with_capacity(len);
    for s in 0..len {
        let mut order: Vec<usize> = (0..len).collect();
        order.sort_by_key(|&r| (t.masks[s] ^ t.masks[r]).count_ones());
        let mut g: Vec<Option<T>> = vec![None; len];
        g[s] = Some(T::zero());
        let sigma = &t.perms[s];
        for &r in &order[1..] {
            let rho = &t.perms[r];
            let mut best: Option<T> = None;
            for a in 0..n - 1 {
                // stepping back along a geodesic undoes an inversion relative to σ
                if !sigma.prefers(rho.at(a + 1), rho.at(a)) {
                    continue;
                }
                let prev = t.index(&rho.swap_adjacent(a));
                let cand = g[prev].clone().expect("earlier layer") + t.d(prev, r).clone();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
            g[r] = best;
        }
        out.push(g.into_iter().map(|v| v.expect("every ranking is reachable")).collect());
    }
    Ok(out)
}

/// Whether `d` coincides with its graphic distance on every pair.
pub fn is_graphic<T: Scalar, D: Distance<T>>(d: &D) -> Result<bool> {
    let g = graphic_distances(d)?;
    let perms: Vec<Permutation> = all_permutations(d.n()).collect();
    Ok(perms.iter().enumerate().all(|(i, a)| perms.iter().enumerate().all(|(j, b)| g[i][j] == d.distance(a, b))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{BetaWeights, DistanceParams, Measure};
    use num_rational::BigRational;

    type Q = BigRational;

    fn params(beta: &[i64], mu: &[i64]) -> DistanceParams<Q> {
        let q = |v: &[i64]| v.iter().map(|&x| Q::from_integer(x.into())).collect::<Vec<_>>();
        DistanceParams::new(BetaWeights::new(q(beta)).unwrap(), Measure::new(q(mu)).unwrap()).unwrap()
    }

    #[test]
    fn rank_matches_enumeration() {
        for (k, p) in all_permutations(5).enumerate() {
            assert_eq!(rank(&p), k);
        }
    }

    #[test]
    fn kendall_satisfies_every_axiom() {
        let d = params(&[1, 0, 0], &[1, 1, 1, 1]);
        for ax in [Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5, Axiom::A6] {
            let r = check_axiom(&d, ax).unwrap();
            assert_eq!(r.verdict, super::super::Verdict::Holds, "{ax}");
        }
    }

    #[test]
    fn all_ones() {
        let d3 = params(&[1, 1], &[1, 1, 1]);
        assert_eq!(check_axiom(&d3, Axiom::A3).unwrap().verdict, super::super::Verdict::Holds);
        let d4 = params(&[1, 1, 1], &[1, 1, 1, 1]);
        let r = check_axiom(&d4, Axiom::A1).unwrap();
        assert_eq!(r.verdict, super::super::Verdict::Fails);
        assert!(confirm_axiom_witness(&d4, Axiom::A1, r.witness.as_ref().unwrap()));
    }

    #[test]
    fn guard_applies() {
        let d = params(&[1, 0, 0, 0, 0], &[1; 6]);
        assert!(check_axiom(&d, Axiom::A1).is_err());
    }

    #[test]
    fn graphic_distance_of_kendall_is_itself() {
        let d = params(&[1, 0, 0], &[1, 2, 3, 4]);
        assert!(is_graphic(&d).unwrap());
        assert!(recover_pairwise_weights(&d).unwrap().reproduces());
    }
}
