//! Exact integer scalars.
//!
//! Closed forms, recurrences and series are written once over [`ExactInt`]
//! and instantiated at `u64`, `i128` or `BigInt`. Every arithmetic step is
//! checked: overflow surfaces as [`Error::Overflow`], never as a wrap.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive};

use crate::error::{Error, Result};

/// An exact integer type with checked arithmetic.
pub trait ExactInt:
    Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + Clone
    + Debug
    + Display
    + Send
    + Sync
{
}

impl<T> ExactInt for T where
    T: Integer
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + Clone
        + Debug
        + Display
        + Send
        + Sync
{
}

pub(crate) fn lift<T: ExactInt>(x: u64) -> Result<T> {
    T::from_u64(x).ok_or(Error::Overflow("integer conversion"))
}

pub(crate) fn add<T: ExactInt>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn sub<T: ExactInt>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow(what))
}

pub(crate) fn mul<T: ExactInt>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// `a / d`, which must leave no remainder.
pub(crate) fn exact_div<T: ExactInt>(a: &T, d: u64, what: &'static str) -> Result<T> {
    let (q, r) = a.div_rem(&lift(d)?);
    if !r.is_zero() {
        return Err(Error::Domain(what));
    }
    Ok(q)
}

pub(crate) fn sum<T: ExactInt>(
    terms: impl IntoIterator<Item = Result<T>>,
    what: &'static str,
) -> Result<T> {
    terms
        .into_iter()
        .try_fold(T::zero(), |acc, t| add(&acc, &t?, what))
}
