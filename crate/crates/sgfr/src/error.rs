//! Error type shared by all modules.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A semigroup needs at least one generator.
    EmptyGenerators,
    /// Generators must be positive integers.
    NonPositiveGenerator { value: i64 },
    /// The generators (or the two scale factors of a gluing) must be coprime.
    GcdNotOne { gcd: i64 },
    /// A value required to lie in a semigroup does not.
    NotMember { value: i64 },
    /// A target list must be nonempty and strictly increasing.
    NotIncreasing,
    /// Gluing scale factors may not be minimal generators of their partner.
    IsMinimalGenerator { value: i64 },
    /// The operation applies only to a specific gluing shape.
    WrongShape,
    /// The semigroup is not telescopic.
    NotTelescopic,
    /// The quantity is undefined or degenerate for this semigroup (e.g. the
    /// higher Feng-Rao numbers of the full set of natural numbers).
    DegenerateSemigroup,
    /// A tuple search stopped early; the bound found so far is reported.
    SearchBudgetExceeded {
        best_upper_bound: i64,
        tuples_examined: u64,
    },
    /// A brute-force oracle search exceeded its configured budget.
    BudgetExceeded,
    /// A transfer hypothesis failed at a witness point.
    HypothesisFailed { z: i64 },
    /// Parameters outside the domain of the operation.
    InvalidParameters { reason: String },
    /// Bound tables start at the conductor.
    IndexBelowConductor { a: i64, conductor: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGenerators => write!(f, "generator list is empty"),
            Error::NonPositiveGenerator { value } => {
                write!(f, "generator {value} is not a positive integer")
            }
            Error::GcdNotOne { gcd } => write!(f, "values are not coprime (gcd {gcd})"),
            Error::NotMember { value } => write!(f, "{value} is not a member of the semigroup"),
            Error::NotIncreasing => write!(f, "target list must be nonempty and strictly increasing"),
            Error::IsMinimalGenerator { value } => {
                write!(f, "{value} is a minimal generator of the partner semigroup")
            }
            Error::WrongShape => write!(f, "operation requires a different gluing shape"),
            Error::NotTelescopic => write!(f, "semigroup is not telescopic"),
            Error::DegenerateSemigroup => {
                write!(f, "quantity is degenerate for this semigroup")
            }
            Error::SearchBudgetExceeded {
                best_upper_bound,
                tuples_examined,
            } => write!(
                f,
                "tuple search budget exhausted after {tuples_examined} tuples; best upper bound {best_upper_bound}"
            ),
            Error::BudgetExceeded => write!(f, "oracle search budget exhausted"),
            Error::HypothesisFailed { z } => {
                write!(f, "transfer hypothesis fails at z = {z}")
            }
            Error::InvalidParameters { reason } => write!(f, "invalid parameters: {reason}"),
            Error::IndexBelowConductor { a, conductor } => {
                write!(f, "index {a} is below the conductor {conductor}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
