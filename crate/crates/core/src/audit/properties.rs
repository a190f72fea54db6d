use std::collections::BTreeSet;

use crate::aggregation::aggregate_exact;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::{all_permutations, Permutation};
use crate::scalar::Scalar;
use crate::weights::DistanceParams;

use super::{AuditReport, Property, Witness};

/// Pairwise margins `n_{i,j}(V)` and top-choice margins `n(V, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetPreferences {
    pub pairwise: Vec<Vec<i64>>,
    pub top: Vec<i64>,
}

impl NetPreferences {
    pub fn margin(&self, i: usize, j: usize) -> i64 {
        self.pairwise[i][j]
    }
}

pub fn net_preferences(profile: &Profile) -> NetPreferences {
    let n = profile.n();
    let m = profile.m() as i64;
    let mut pairwise = vec![vec![0i64; n]; n];
    let mut top = vec![-m; n];
    for (k, r) in profile.entries() {
        let k = *k as i64;
        top[r.top()] += 2 * k;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    pairwise[i][j] += if r.prefers(i, j) { k } else { -k };
                }
            }
        }
    }
    NetPreferences { pairwise, top }
}

/// Candidates that no other candidate beats by a strict pairwise majority.
pub fn condorcet_candidates(profile: &Profile) -> BTreeSet<usize> {
    let net = net_preferences(profile);
    let n = profile.n();
    (0..n).filter(|&i| (0..n).all(|j| j == i || net.pairwise[i][j] >= 0)).collect()
}

fn consensus<T: Scalar>(params: &DistanceParams<T>, profile: &Profile) -> Result<BTreeSet<Permutation>> {
    Ok(aggregate_exact(params, profile)?.minimizers.into_iter().collect())
}

fn winners(p: &BTreeSet<Permutation>) -> BTreeSet<usize> {
    p.iter().map(Permutation::top).collect()
}

/// Evaluates one property on `profile` against exact aggregation.
/// `second` is the other electorate for `reinforcing`. Parameters that do
/// not define a semimetric are reported `Inapplicable`.
pub fn check_property<T: Scalar>(
    params: &DistanceParams<T>,
    profile: &Profile,
    property: Property,
    second: Option<&Profile>,
) -> Result<AuditReport> {
    if profile.n() != params.n() {
        return Err(Error::DimensionMismatch { expected: params.n(), found: profile.n() });
    }
    let label = params.label();
    if !label.is_semimetric() {
        return Ok(AuditReport::inapplicable(property, format!("parameters are {label}")));
    }
    let p = consensus(params, profile)?;
    let found = match property {
        Property::NeutralityP => neutrality(params, profile, &p)?,
        Property::Majority => majority(profile, &p),
        Property::CondorcetP => condorcet_p(profile, &p),
        Property::CondorcetW => condorcet_w(profile, &p),
        Property::StrongCondorcet => strong_condorcet(profile, &p),
        Property::Reinforcing => {
            let other = second.ok_or_else(|| {
                Error::InvalidParameter("reinforcing needs a second profile".into())
            })?;
            let (hit, note) = reinforcing(params, profile, other, &p)?;
            if let Some(note) = note {
                return Ok(AuditReport::holds(property, note));
            }
            hit
        }
        Property::Monotonicity => monotonicity(params, profile, &p)?,
        Property::BlockwisePareto => blockwise(profile, &p),
        Property::PartitionwisePareto => partitionwise(profile, &p),
    };
    Ok(match found {
        Some((w, note)) => AuditReport::fails(property, w, note),
        None => AuditReport::holds(property, ""),
    })
}

type Found = Option<(Witness, String)>;

fn show(set: &BTreeSet<Permutation>) -> String {
    let v: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", v.join(", "))
}

fn relabel_set(tau: &Permutation, set: &BTreeSet<Permutation>) -> BTreeSet<Permutation> {
    set.iter().map(|s| tau.compose(s).expect("same size")).collect()
}

fn neutrality<T: Scalar>(params: &DistanceParams<T>, v: &Profile, p: &BTreeSet<Permutation>) -> Result<Found> {
    for tau in all_permutations(v.n()) {
        let lhs = consensus(params, &v.relabel(&tau)?)?;
        let rhs = relabel_set(&tau, p);
        if lhs != rhs {
            let note = format!("P(τV) = {} but τP(V) = {}", show(&lhs), show(&rhs));
            return Ok(Some((Witness::Relabeling(tau), note)));
        }
    }
    Ok(None)
}

fn majority(v: &Profile, p: &BTreeSet<Permutation>) -> Found {
    let net = net_preferences(v);
    let w = winners(p);
    (0..v.n())
        .find(|c| net.top[*c] >= 0 && !w.contains(c))
        .map(|c| (Witness::Candidate(c), format!("n(V,c) = {} yet c does not win", net.top[c])))
}

/// Whether some minimizer places `i` immediately above `j`.
fn adjacent_in(p: &BTreeSet<Permutation>, i: usize, j: usize) -> bool {
    p.iter().any(|s| s.position(j) == s.position(i) + 1)
}

fn condorcet_p(v: &Profile, p: &BTreeSet<Permutation>) -> Found {
    let net = net_preferences(v);
    let n = v.n();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let m = net.pairwise[i][j];
            if m > 0 && adjacent_in(p, j, i) {
                return Some((Witness::CandidatePair(i, j), "a minimizer has the majority loser directly above".into()));
            }
            if m == 0 && i < j && adjacent_in(p, i, j) != adjacent_in(p, j, i) {
                return Some((Witness::CandidatePair(i, j), "tied pair appears adjacent in only one order".into()));
            }
        }
    }
    None
}

fn condorcet_w(v: &Profile, p: &BTreeSet<Permutation>) -> Found {
    let w = winners(p);
    condorcet_candidates(v)
        .into_iter()
        .find(|c| !w.contains(c))
        .map(|c| (Witness::Candidate(c), "Condorcet candidate is not a winner".into()))
}

fn strong_condorcet(v: &Profile, p: &BTreeSet<Permutation>) -> Found {
    let net = net_preferences(v);
    let n = v.n();
    for i in 0..n {
        for k in 0..n {
            if i != k && net.pairwise[i][k] > 0 && p.iter().any(|s| !s.prefers(i, k)) {
                return Some((Witness::CandidatePair(i, k), "a minimizer reverses a majority preference".into()));
            }
        }
    }
    None
}

/// Returns `(failure, vacuous note)`.
fn reinforcing<T: Scalar>(
    params: &DistanceParams<T>,
    v1: &Profile,
    v2: &Profile,
    p1: &BTreeSet<Permutation>,
) -> Result<(Found, Option<String>)> {
    let p2 = consensus(params, v2)?;
    let both: BTreeSet<Permutation> = p1.intersection(&p2).cloned().collect();
    if both.is_empty() {
        return Ok((None, Some("vacuous: P(V1) and P(V2) are disjoint".into())));
    }
    let joint = consensus(params, &v1.concat(v2)?)?;
    if joint != both {
        let note = format!("P(V1 ⊕ V2) = {} but P(V1) ∩ P(V2) = {}", show(&joint), show(&both));
        return Ok((Some((Witness::Profiles(vec![v1.clone(), v2.clone()]), note)), None));
    }
    Ok((None, None))
}

/// Every profile obtained from `v` by letting one voter promote `c` by
/// one position.
fn single_uprankings(v: &Profile, c: usize) -> Vec<Profile> {
    let mut out = Vec::new();
    for (idx, (k, r)) in v.entries().iter().enumerate() {
        let pos = r.position(c);
        if pos == 0 {
            continue;
        }
        let promoted = r.swap_adjacent(pos - 1);
        let mut entries: Vec<(u64, Permutation)> = Vec::with_capacity(v.entries().len() + 1);
        for (jdx, (kk, rr)) in v.entries().iter().enumerate() {
            if jdx == idx {
                if *k > 1 {
                    entries.push((k - 1, rr.clone()));
                }
                entries.push((1, promoted.clone()));
            } else {
                entries.push((*kk, rr.clone()));
            }
        }
        out.push(Profile::new(v.n(), entries).expect("same size"));
    }
    out
}

fn monotonicity<T: Scalar>(params: &DistanceParams<T>, v: &Profile, p: &BTreeSet<Permutation>) -> Result<Found> {
    for c in winners(p) {
        for up in single_uprankings(v, c) {
            if !winners(&consensus(params, &up)?).contains(&c) {
                let note = "the promoted winner drops out".to_string();
                return Ok(Some((Witness::Upranking { candidate: c, profile: up }, note)));
            }
        }
    }
    Ok(None)
}

fn block(r: &Permutation, lo: usize, hi: usize) -> BTreeSet<usize> {
    r.as_slice()[lo..hi].iter().copied().collect()
}

/// Whether all voters hold the same set in positions `lo..hi`, and if so
/// whether every minimizer does too.
fn block_condition(v: &Profile, p: &BTreeSet<Permutation>, lo: usize, hi: usize) -> Option<bool> {
    let first = block(&v.entries()[0].1, lo, hi);
    if v.entries().iter().any(|(_, r)| block(r, lo, hi) != first) {
        return None;
    }
    Some(p.iter().all(|s| block(s, lo, hi) == first))
}

fn blockwise(v: &Profile, p: &BTreeSet<Permutation>) -> Found {
    let n = v.n();
    for k in 1..=n {
        if block_condition(v, p, 0, k) == Some(false) {
            return Some((Witness::Block { k, losers: false }, "voters share the top block, a minimizer does not".into()));
        }
        if block_condition(v, p, k, n) == Some(false) {
            return Some((Witness::Block { k, losers: true }, "voters share the bottom block, a minimizer does not".into()));
        }
    }
    None
}

fn cuts(n: usize, mask: u64) -> Vec<usize> {
    let mut c: Vec<usize> = (1..n).filter(|k| mask & (1 << (k - 1)) != 0).collect();
    c.push(n);
    c
}

fn partitionwise(v: &Profile, p: &BTreeSet<Permutation>) -> Found {
    let n = v.n();
    for mask in 0..1u64 << (n - 1) {
        let c = cuts(n, mask);
        let mut lo = 0;
        let mut agree = true;
        let mut kept = true;
        for &hi in &c {
            match block_condition(v, p, lo, hi) {
                None => agree = false,
                Some(ok) => kept &= ok,
            }
            lo = hi;
        }
        if agree && !kept {
            return Some((Witness::Partition(c), "a minimizer breaks a block every voter shares".into()));
        }
    }
    None
}

/// Re-runs the property definition at the reported witness.
pub fn confirm_property_witness<T: Scalar>(
    params: &DistanceParams<T>,
    profile: &Profile,
    property: Property,
    witness: &Witness,
) -> Result<bool> {
    let p = consensus(params, profile)?;
    let net = net_preferences(profile);
    Ok(match (property, witness) {
        (Property::NeutralityP, Witness::Relabeling(tau)) => {
            consensus(params, &profile.relabel(tau)?)? != relabel_set(tau, &p)
        }
        (Property::Majority, Witness::Candidate(c)) => net.top[*c] >= 0 && !winners(&p).contains(c),
        (Property::CondorcetW, Witness::Candidate(c)) => {
            condorcet_candidates(profile).contains(c) && !winners(&p).contains(c)
        }
        (Property::CondorcetP, Witness::CandidatePair(i, j)) => {
            let m = net.pairwise[*i][*j];
            (m > 0 && adjacent_in(&p, *j, *i)) || (m == 0 && adjacent_in(&p, *i, *j) != adjacent_in(&p, *j, *i))
        }
        (Property::StrongCondorcet, Witness::CandidatePair(i, k)) => {
            net.pairwise[*i][*k] > 0 && p.iter().any(|s| !s.prefers(*i, *k))
        }
        (Property::Reinforcing, Witness::Profiles(v)) if v.len() == 2 => {
            let (p1, p2) = (consensus(params, &v[0])?, consensus(params, &v[1])?);
            let both: BTreeSet<Permutation> = p1.intersection(&p2).cloned().collect();
            !both.is_empty() && consensus(params, &v[0].concat(&v[1])?)? != both
        }
        (Property::Monotonicity, Witness::Upranking { candidate, profile: up }) => {
            winners(&p).contains(candidate)
                && single_uprankings(profile, *candidate).contains(up)
                && !winners(&consensus(params, up)?).contains(candidate)
        }
        (Property::BlockwisePareto, Witness::Block { k, losers }) => {
            let (lo, hi) = if *losers { (*k, profile.n()) } else { (0, *k) };
            block_condition(profile, &p, lo, hi) == Some(false)
        }
        (Property::PartitionwisePareto, Witness::Partition(c)) => {
            let mut lo = 0;
            let mut agree = true;
            let mut kept = true;
            for &hi in c {
                match block_condition(profile, &p, lo, hi) {
                    None => agree = false,
                    Some(ok) => kept &= ok,
                }
                lo = hi;
            }
            agree && !kept
        }
        _ => false,
    })
}
