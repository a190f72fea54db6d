//! Permutations, inversion structure, down-sets and menu maxima.
//!
//! Candidates and positions are 0-based in the API. The text forms
//! (`parse`, `Display`) use the 1-based labels found in ballot files.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A ranking in one-line form: `at(p)` is the candidate in position `p`.
/// The inverse is stored alongside so both directions are O(1).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
    pos: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut pos = vec![usize::MAX; n];
        for (p, &c) in map.iter().enumerate() {
            if c >= n {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("entry {} is out of range", c + 1),
                });
            }
            if pos[c] != usize::MAX {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("candidate {} appears twice", c + 1),
                });
            }
            pos[c] = p;
        }
        Ok(Permutation { map, pos })
    }

    pub fn from_one_based(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        let map = labels
            .iter()
            .map(|&c| {
                c.checked_sub(1).ok_or(Error::NotAPermutation {
                    n,
                    detail: "labels start at 1".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(map)
    }

    /// Parses `1 2 3`, `1,2,3` or `(1,2,3)`.
    pub fn parse(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .map(|c| if c == ',' || c == '(' || c == ')' { ' ' } else { c })
            .collect();
        let labels = cleaned
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line: 1,
                    msg: format!("`{t}` is not a candidate number"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if labels.is_empty() {
            return Err(Error::Parse { line: 1, msg: "empty ranking".into() });
        }
        Self::from_one_based(&labels)
    }

    pub fn identity(n: usize) -> Self {
        let map: Vec<usize> = (0..n).collect();
        Permutation { pos: map.clone(), map }
    }

    /// The transposition t_{i,j} exchanging candidates `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        for c in [i, j] {
            if c >= n {
                return Err(Error::CandidateOutOfRange { candidate: c + 1, n });
            }
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i, j);
        Self::new(map)
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Candidate in position `p`.
    pub fn at(&self, p: usize) -> usize {
        self.map[p]
    }

    /// Position of candidate `c`.
    pub fn position(&self, c: usize) -> usize {
        self.pos[c]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    pub fn top(&self) -> usize {
        self.map[0]
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.map.iter().map(|c| c + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(p, &c)| p == c)
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { map: self.pos.clone(), pos: self.map.clone() }
    }

    /// The product `self ∘ q`, i.e. `i ↦ self[q[i]]`. With `self = τ` this
    /// relabels every candidate `c` of `q` as `τ(c)`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        same_n(self, q)?;
        let map = q.map.iter().map(|&c| self.map[c]).collect();
        Ok(Permutation::new(map).expect("composition of bijections"))
    }

    /// `σ t_{a,a+1}`: the ranking with positions `a` and `a + 1` exchanged.
    pub fn swap_adjacent(&self, a: usize) -> Permutation {
        let mut out = self.clone();
        out.map.swap(a, a + 1);
        out.pos[out.map[a]] = a;
        out.pos[out.map[a + 1]] = a + 1;
        out
    }

    pub fn reversed(&self) -> Permutation {
        let map = self.map.iter().rev().copied().collect();
        Permutation::new(map).expect("reversal of a bijection")
    }

    /// `i >_σ j`: candidate `i` is ranked above `j`.
    pub fn prefers(&self, i: usize, j: usize) -> bool {
        self.pos[i] < self.pos[j]
    }

    fn check_candidate(&self, x: usize) -> Result<()> {
        if x < self.n() {
            Ok(())
        } else {
            Err(Error::CandidateOutOfRange { candidate: x + 1, n: self.n() })
        }
    }

    /// Bitmask of the candidates ranked below each candidate. Needs n <= 64.
    pub(crate) fn down_masks(&self) -> Vec<u64> {
        let n = self.n();
        let mut masks = vec![0u64; n];
        let mut below = 0u64;
        for p in (0..n).rev() {
            masks[self.map[p]] = below;
            below |= 1 << self.map[p];
        }
        masks
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (p, c) in self.map.iter().enumerate() {
            if p > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c + 1)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn same_n(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.n() == b.n() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: a.n(), found: b.n() })
    }
}

/// Ordered pairs `(i, j)` with `i >_σ j` and `i <_π j`.
pub fn inversion_set(sigma: &Permutation, pi: &Permutation) -> Result<BTreeSet<(usize, usize)>> {
    same_n(sigma, pi)?;
    let n = sigma.n();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && sigma.prefers(i, j) && pi.prefers(j, i) {
                out.insert((i, j));
            }
        }
    }
    Ok(out)
}

/// Number of pairs on which the two rankings disagree.
pub fn kendall_count(sigma: &Permutation, pi: &Permutation) -> Result<usize> {
    same_n(sigma, pi)?;
    let n = sigma.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (sigma.at(a), sigma.at(b));
            if pi.prefers(y, x) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `|x↓σ|`, the number of candidates ranked below `x`.
pub fn down_set_size(sigma: &Permutation, x: usize) -> Result<usize> {
    sigma.check_candidate(x)?;
    Ok(sigma.n() - 1 - sigma.position(x))
}

/// `|x↓σ ∩ x↓π|`, scanning the shorter of the two down-sets.
pub fn common_down_count(sigma: &Permutation, pi: &Permutation, x: usize) -> Result<usize> {
    same_n(sigma, pi)?;
    sigma.check_candidate(x)?;
    Ok(common_down_unchecked(sigma, pi, x))
}

pub(crate) fn common_down_unchecked(sigma: &Permutation, pi: &Permutation, x: usize) -> usize {
    let (short, other) = if sigma.position(x) >= pi.position(x) { (sigma, pi) } else { (pi, sigma) };
    let px = other.position(x);
    short.map[short.position(x) + 1..]
        .iter()
        .filter(|&&y| other.position(y) > px)
        .count()
}

/// `M(S, σ)`: the member of `menu` that `σ` ranks highest.
pub fn menu_max(menu: &[usize], sigma: &Permutation) -> Result<usize> {
    let mut best: Option<usize> = None;
    for &c in menu {
        sigma.check_candidate(c)?;
        if best.is_none_or(|b| sigma.position(c) < sigma.position(b)) {
            best = Some(c);
        }
    }
    best.ok_or(Error::EmptyMenu)
}

/// Consecutive couples `(σ_k, σ_{k+1})`.
pub fn adjacent_pairs(sigma: &Permutation) -> Vec<(usize, usize)> {
    sigma.map.windows(2).map(|w| (w[0], w[1])).collect()
}

pub fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Advances `v` to the next arrangement in lexicographic order.
/// Returns `false` (leaving `v` untouched) once `v` is the last one.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The `k`-th permutation of `0..n` in lexicographic order.
pub fn nth_permutation(n: usize, mut k: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for left in (1..=n).rev() {
        let f = factorial(left - 1).expect("guarded by caller");
        let idx = (k / f) as usize;
        k %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Iterator over the symmetric group in lexicographic order.
pub struct Permutations {
    cur: Vec<usize>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation::new(self.cur.clone()).expect("arrangement of 0..n");
        self.done = !next_permutation(&mut self.cur);
        Some(out)
    }
}

pub fn all_permutations(n: usize) -> Permutations {
    Permutations { cur: (0..n).collect(), done: false }
}
