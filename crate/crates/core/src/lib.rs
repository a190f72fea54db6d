//! Weighted top-difference distances between rankings and the median
//! rank aggregation they induce.
//!
//! A distance is fixed by size weights β₂, …, βₙ and a candidate measure μ:
//! every menu of candidates whose top choices differ between the two
//! rankings contributes β of its size times the mass of the two tops.
//! Everything is generic over [`Scalar`], with [`num_rational::BigRational`]
//! as the exact type and `f64` as the fast one.
//!
//! ```
//! use topdiff::{aggregate_exact, dist_fast, DistanceParams, Measure, Permutation, Preset, Profile};
//!
//! # fn main() -> topdiff::Result<()> {
//! let n = 3;
//! let params = DistanceParams::new(Preset::Kendall.beta_exact(n)?, Measure::counting(n))?;
//! let a = Permutation::parse("1 2 3")?;
//! let b = Permutation::parse("2 1 3")?;
//! assert_eq!(dist_fast(&params, &a, &b)?.to_string(), "2");
//!
//! let profile = Profile::parse("3 3\n1: 1 2 3\n1: 2 3 1\n1: 3 1 2\n")?;
//! assert_eq!(aggregate_exact(&params, &profile)?.minimizers.len(), 3);
//! # Ok(())
//! # }
//! ```

pub mod aggregation;
pub mod audit;
pub mod distance;
pub mod error;
pub mod profile;
pub mod ranking;
pub mod scalar;
pub mod weights;

pub use aggregation::{
    aggregate_exact, aggregate_footrule, aggregate_myopic, hungarian, ilp_export, AggregationResult, BetaRule, Method,
};
pub use audit::{check_axiom, check_property, AuditReport, Axiom, Property, Verdict, Witness};
pub use distance::{dist_fast, dist_naive, dist_truncated, footrule, profile_cost, Distance, FnDistance};
pub use error::{Error, Result};
pub use profile::Profile;
pub use ranking::Permutation;
pub use scalar::Scalar;
pub use weights::{classify, BetaWeights, Classification, DistanceParams, Measure, PhiWeights, Preset};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type Rational = BigRational;
pub type ExactParams = DistanceParams<Rational>;
