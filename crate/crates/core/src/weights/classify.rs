use std::fmt;

use num_traits::Zero;

use crate::audit::brute_force_classification;
use crate::distance::{closed_form, FnDistance};
use crate::scalar::Scalar;
use crate::ranking::Permutation;

use super::{beta_to_phi, f_beta_table, BetaWeights, Measure};

/// Where a `(β, μ)` pair sits in the parameter space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Metric,
    SemimetricOnly,
    TrivialZero,
    NotSemimetric,
    /// Mixed-sign β whose position weights share one sign, at an `n` too
    /// large for the exhaustive decision.
    Unresolved,
}

impl Classification {
    pub fn is_semimetric(self) -> bool {
        matches!(self, Classification::Metric | Classification::SemimetricOnly | Classification::TrivialZero)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Classification::Metric => "Metric",
            Classification::SemimetricOnly => "SemimetricOnly",
            Classification::TrivialZero => "TrivialZero",
            Classification::NotSemimetric => "NotSemimetric",
            Classification::Unresolved => "Unresolved",
        };
        f.write_str(s)
    }
}

/// Largest n for which mixed-sign β is decided by scanning all triples.
pub const EXHAUSTIVE_LIMIT: usize = 5;

/// Labels `(β, μ)`.
///
/// Sign-definite β is decided from the closed-form region description,
/// reusing the nonnegative branch for `(−β, −μ)`. A mixed-sign β is never a
/// semimetric when φ = F(β) takes both strict signs (some adjacent swap
/// would get a negative length); otherwise the label is settled by an
/// exhaustive axiom scan for `n <= EXHAUSTIVE_LIMIT`.
pub fn classify<T: Scalar>(beta: &BetaWeights<T>, mu: &Measure<T>) -> Classification {
    let n = beta.n();
    if beta.is_zero() || mu.is_zero() {
        return Classification::TrivialZero;
    }
    if beta.is_nonnegative() {
        return classify_nonnegative(beta, mu);
    }
    let neg = beta.neg();
    if neg.is_nonnegative() {
        return classify_nonnegative(&neg, &mu.neg());
    }

    let phi = beta_to_phi(beta);
    let pos = phi.values().iter().any(|p| *p > T::zero());
    let negv = phi.values().iter().any(|p| *p < T::zero());
    if pos && negv {
        return Classification::NotSemimetric;
    }
    if n > EXHAUSTIVE_LIMIT {
        return Classification::Unresolved;
    }
    let f = f_beta_table(beta);
    let d = FnDistance::new(n, |a: &Permutation, b: &Permutation| closed_form(&f, mu.values(), a, b));
    brute_force_classification(&d).expect("n is within the exhaustive limit")
}

fn classify_nonnegative<T: Scalar>(beta: &BetaWeights<T>, mu: &Measure<T>) -> Classification {
    let only_pairs = beta.values()[1..].iter().all(Zero::is_zero);
    let beta2_positive = *beta.get(2) > T::zero();
    if only_pairs {
        // d is β_2 Σ_{(i,j) ∈ I(σ,π)} (μ_i + μ_j)
        return if mu.pairwise_positive() {
            Classification::Metric
        } else if mu.pairwise_nonnegative() {
            Classification::SemimetricOnly
        } else {
            Classification::NotSemimetric
        };
    }
    if !mu.is_nonnegative() {
        Classification::NotSemimetric
    } else if beta2_positive && mu.pairwise_positive() {
        Classification::Metric
    } else {
        Classification::SemimetricOnly
    }
}
