//! Voter profiles: multisets of rankings with multiplicities.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ranking::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    n: usize,
    entries: Vec<(u64, Permutation)>,
    labels: Option<Vec<String>>,
}

impl Profile {
    pub fn new(n: usize, entries: Vec<(u64, Permutation)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("a profile needs at least one voter".into()));
        }
        for (k, r) in &entries {
            if r.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.n() });
            }
            if *k == 0 {
                return Err(Error::InvalidParameter("multiplicities must be positive".into()));
            }
        }
        Ok(Profile { n, entries, labels: None })
    }

    /// One voter per ranking.
    pub fn from_rankings(rankings: Vec<Permutation>) -> Result<Self> {
        let n = rankings.first().map(Permutation::n).unwrap_or(0);
        Self::new(n, rankings.into_iter().map(|r| (1, r)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of voters.
    pub fn m(&self) -> u64 {
        self.entries.iter().map(|(k, _)| k).sum()
    }

    pub fn entries(&self) -> &[(u64, Permutation)] {
        &self.entries
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of candidate `c` (its label, or `c + 1`).
    pub fn label(&self, c: usize) -> String {
        match &self.labels {
            Some(l) => l[c].clone(),
            None => (c + 1).to_string(),
        }
    }

    /// `τV`: every ballot relabeled by `τ`.
    pub fn relabel(&self, tau: &Permutation) -> Result<Profile> {
        let entries = self
            .entries
            .iter()
            .map(|(k, r)| Ok((*k, tau.compose(r)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Profile { n: self.n, entries, labels: None })
    }

    /// `V₁ ⊕ V₂`, the concatenation of the two electorates.
    pub fn concat(&self, other: &Profile) -> Result<Profile> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Profile { n: self.n, entries, labels: self.labels.clone() })
    }

    /// Parses the `n m` / `k: c1 … cn` format. Tokens that are not all
    /// integers in `1..=n` are treated as labels, numbered by first use.
    pub fn parse(text: &str) -> Result<Profile> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty profile".into() })?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(Error::Parse { line: hl, msg: "header must be `n m`".into() });
        }
        let n: usize = parse_num(nums[0], hl)?;
        let m: u64 = parse_num(nums[1], hl)?;
        if n == 0 {
            return Err(Error::Parse { line: hl, msg: "n must be positive".into() });
        }

        let mut raw = Vec::new();
        for (ln, line) in lines {
            let (k, rest) = line.split_once(':').ok_or(Error::Parse {
                line: ln,
                msg: "expected `k: c1 ... cn`".into(),
            })?;
            let k: u64 = parse_num(k.trim(), ln)?;
            if k == 0 {
                return Err(Error::Parse { line: ln, msg: "multiplicity must be positive".into() });
            }
            let toks: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
            if toks.len() != n {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("ranking has {} candidates, header says {n}", toks.len()),
                });
            }
            raw.push((ln, k, toks));
        }
        if raw.is_empty() {
            return Err(Error::Parse { line: hl, msg: "no ballots".into() });
        }

        let numeric = raw.iter().all(|(_, _, toks)| {
            toks.iter().all(|t| t.parse::<usize>().is_ok_and(|c| (1..=n).contains(&c)))
        });
        let mut table: HashMap<String, usize> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        let mut entries = Vec::with_capacity(raw.len());
        for (ln, k, toks) in raw {
            let mut map = Vec::with_capacity(n);
            for t in toks {
                let c = if numeric {
                    t.parse::<usize>().unwrap() - 1
                } else {
                    let next = names.len();
                    *table.entry(t.clone()).or_insert_with(|| {
                        names.push(t);
                        next
                    })
                };
                if c >= n {
                    return Err(Error::Parse { line: ln, msg: format!("more than {n} distinct labels") });
                }
                map.push(c);
            }
            let r = Permutation::new(map).map_err(|e| Error::Parse { line: ln, msg: e.to_string() })?;
            entries.push((k, r));
        }

        let total: u64 = entries.iter().map(|(k, _)| k).sum();
        if total != m {
            return Err(Error::Parse { line: hl, msg: format!("multiplicities sum to {total}, header says {m}") });
        }
        let mut profile = Profile::new(n, entries)?;
        if !numeric {
            profile.labels = Some(names);
        }
        Ok(profile)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (k, r) in &self.entries {
            let names: Vec<String> = r.as_slice().iter().map(|&c| self.label(c)).collect();
            writeln!(out, "{k}: {}", names.join(" ")).unwrap();
        }
        out
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
    s.parse().map_err(|_| Error::Parse { line, msg: format!("`{s}` is not a valid count") })
}
