//! Executable checks of the betweenness axioms, of metric axioms and of
//! social-choice properties of the median correspondence.

mod axioms;
mod properties;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::profile::Profile;
use crate::ranking::Permutation;

pub use axioms::{
    brute_force_classification, check_axiom, confirm_axiom_witness, find_semimetric_violation, graphic_distances,
    is_graphic, recover_pairwise_weights, PairwiseRecovery, AXIOM_LIMIT,
};
pub use properties::{check_property, condorcet_candidates, confirm_property_witness, net_preferences, NetPreferences};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "Holds",
            Verdict::Fails => "Fails",
            Verdict::Inapplicable => "Inapplicable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    NeutralityP,
    Majority,
    CondorcetP,
    CondorcetW,
    /// `n_{i,k} > 0` forces `i` above `k` in every median.
    StrongCondorcet,
    Reinforcing,
    Monotonicity,
    BlockwisePareto,
    PartitionwisePareto,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::NeutralityP,
        Property::Majority,
        Property::CondorcetP,
        Property::CondorcetW,
        Property::StrongCondorcet,
        Property::Reinforcing,
        Property::Monotonicity,
        Property::BlockwisePareto,
        Property::PartitionwisePareto,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Property::NeutralityP => "neutrality_P",
            Property::Majority => "majority",
            Property::CondorcetP => "condorcet_P",
            Property::CondorcetW => "condorcet_W",
            Property::StrongCondorcet => "strong_condorcet",
            Property::Reinforcing => "reinforcing",
            Property::Monotonicity => "monotonicity",
            Property::BlockwisePareto => "blockwise_pareto",
            Property::PartitionwisePareto => "partitionwise_pareto",
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Property::ALL
            .into_iter()
            .find(|p| p.tag() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown property `{s}`")))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.to_ascii_uppercase().replace('.', "").as_str() {
            "A1" => Axiom::A1,
            "A2" => Axiom::A2,
            "A3" => Axiom::A3,
            "A4" => Axiom::A4,
            "A5" => Axiom::A5,
            "A6" => Axiom::A6,
            _ => return Err(Error::InvalidParameter(format!("unknown axiom `{s}`"))),
        })
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The data needed to re-verify a failure.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// Rankings in the order the statement quantifies them.
    Rankings(Vec<Permutation>),
    /// Candidates `(i, j, k, l)` of the transposition identity.
    Transpositions([usize; 4]),
    /// Adjacent-swap edges `(ρ, a)` standing for `(ρ, ρ t_{a,a+1})`.
    Edges(Vec<(Permutation, usize)>),
    Relabeling(Permutation),
    Candidate(usize),
    CandidatePair(usize, usize),
    Profiles(Vec<Profile>),
    Upranking { candidate: usize, profile: Profile },
    Block { k: usize, losers: bool },
    /// Cut points `0 < k_1 < … < n` of an ordered partition of positions.
    Partition(Vec<usize>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Permutation]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        match self {
            Witness::Rankings(v) => write!(f, "rankings {}", list(v)),
            Witness::Transpositions([i, j, k, l]) => write!(f, "candidates i={} j={} k={} l={}", i + 1, j + 1, k + 1, l + 1),
            Witness::Edges(e) => {
                let parts: Vec<String> = e.iter().map(|(r, a)| format!("{r}@{}", a + 1)).collect();
                write!(f, "edges {}", parts.join(" "))
            }
            Witness::Relabeling(t) => write!(f, "relabeling {t}"),
            Witness::Candidate(c) => write!(f, "candidate {}", c + 1),
            Witness::CandidatePair(i, j) => write!(f, "candidates {} and {}", i + 1, j + 1),
            Witness::Profiles(v) => write!(f, "{} profiles", v.len()),
            Witness::Upranking { candidate, profile } => {
                write!(f, "upranking candidate {} gives\n{}", candidate + 1, profile.to_text().trim_end())
            }
            Witness::Block { k, losers } => {
                write!(f, "{} block of size {k}", if *losers { "bottom" } else { "top" })
            }
            Witness::Partition(c) => write!(f, "partition cuts {c:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport {
    pub subject: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub note: String,
}

impl AuditReport {
    pub(crate) fn holds(subject: impl ToString, note: impl Into<String>) -> Self {
        AuditReport { subject: subject.to_string(), verdict: Verdict::Holds, witness: None, note: note.into() }
    }

    pub(crate) fn fails(subject: impl ToString, witness: Witness, note: impl Into<String>) -> Self {
        AuditReport { subject: subject.to_string(), verdict: Verdict::Fails, witness: Some(witness), note: note.into() }
    }

    pub(crate) fn inapplicable(subject: impl ToString, note: impl Into<String>) -> Self {
        AuditReport { subject: subject.to_string(), verdict: Verdict::Inapplicable, witness: None, note: note.into() }
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.subject, self.verdict)?;
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\nwitness: {w}")?;
        }
        Ok(())
    }
}
