//! Fishburn and classical permutation-pattern avoidance.
//!
//! * [`perm`]: the [`Permutation`] value type and its structural operations.
//! * [`pattern`]: classical patterns, the Fishburn pattern, pattern sets and
//!   containment predicates.
//! * [`enumerate`]: pruned depth-first generation and counting of avoidance
//!   classes, with position-of-1 and prefix filters.
//! * [`sequences`], [`series`], [`identities`]: exact closed forms, the
//!   Fishburn generating function and Pell identities, generic over the
//!   integer type (see [`scalar::ExactInt`]).
//! * [`verify`]: the harness comparing enumerations with closed forms and
//!   structural claims.

pub mod enumerate;
pub mod error;
pub mod identities;
pub mod pattern;
pub mod perm;
pub mod scalar;
pub mod sequences;
pub mod series;
pub mod verify;

pub use enumerate::{
    count, count_by_one_position, list_members, search_kernel, AvoidanceQuery, ClassMembers,
    Limits, OnePosition, Prefix,
};
pub use error::{Error, Result};
pub use pattern::{avoids, contains_classical, contains_fishburn, ClassicalPattern, PatternSet};
pub use perm::Permutation;
pub use scalar::ExactInt;
pub use series::{fishburn_series, TruncatedSeries};

/// Class sizes and visit counts.
pub type Count = u64;
/// Scalar used for closed forms in reports.
pub type Exact = i128;
/// Fishburn series with 128-bit coefficients; exact through degree 25 at least.
pub type Series = TruncatedSeries<i128>;
/// Fishburn series with arbitrary-precision coefficients.
pub type BigSeries = TruncatedSeries<num_bigint::BigInt>;
