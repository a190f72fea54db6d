//! Median rank aggregation: exhaustive, footrule matching, MyopicTop and
//! the integer program.

mod exact;
mod footrule;
mod hungarian;
mod ilp;
mod kernel;
mod myopic;

use std::collections::BTreeSet;
use std::fmt;

use crate::ranking::Permutation;

pub use exact::{aggregate_exact, aggregate_exact_threads, EXACT_LIMIT};
pub use footrule::{aggregate_footrule, footrule_objective};
pub use hungarian::{assignment_brute_force, hungarian};
pub use ilp::{ilp_export, ilp_objective_eval, Constraint, IlpModel, Sense};
pub use myopic::{aggregate_myopic, ptas_depth, ptas_depth_finite, guarantee_inv_epsilon, BetaRule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    Footrule,
    Myopic,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Footrule => "footrule",
            Method::Myopic => "myopic",
        })
    }
}

/// Outcome of an aggregation run.
///
/// For `Exact`, `minimizers` is the whole consensus set in lexicographic
/// order and `optimum` its common cost. The approximate methods return one
/// ranking; `optimum` is then the value of the surrogate objective they
/// minimize and `certificate` the ranking's true profile cost.
#[derive(Clone, Debug, PartialEq)]
pub struct AggregationResult<T> {
    pub minimizers: Vec<Permutation>,
    pub optimum: T,
    pub winners: BTreeSet<usize>,
    pub method: Method,
    pub certificate: Option<T>,
}

impl<T> AggregationResult<T> {
    pub(crate) fn new(minimizers: Vec<Permutation>, optimum: T, method: Method, certificate: Option<T>) -> Self {
        let winners = minimizers.iter().map(Permutation::top).collect();
        AggregationResult { minimizers, optimum, winners, method, certificate }
    }
}
