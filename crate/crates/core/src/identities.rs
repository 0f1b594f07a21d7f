//! Pell-number identities behind the `(Pₙ + Pₙ₋₁ + 1)/2` enumerations.
//!
//! Left-hand sides are computed by literal summation; every Pell and `Q`
//! value is recomputed from its recurrence on each use, with no shared table.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{add, lift, mul, sub, sum, ExactInt};
use crate::sequences::{binomial, pell, q_value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Identity {
    /// `Σ_{i=1}^{n} Pᵢ = (Pₙ₊₁ + Pₙ − 1)/2`, `n ≥ 1`
    SumP,
    /// `Σ_{i=0}^{n} Qᵢ = (Pₙ₊₁ + n + 1)/2`, `n ≥ 1`
    SumQ,
    /// `Σ_{k=1}^{n} k·Pₙ₋ₖ = (Pₙ₊₁ − n − 1)/2`, `n ≥ 1`
    SumKP,
    /// `Qₙ₋₂ + Σ_{k=3}^{n} ((k−2)Pₙ₋ₖ + Qₙ₋ₖ) = Pₙ₋₁`, `n ≥ 3`
    Qkp,
    /// `Qₙ₋₁ + Qₙ₋₂ + Σ_{k=3}^{n} (Qₙ₋ₖ + Σ_{ℓ=k+1}^{n} C(ℓ−3, ℓ−k)·Qₙ₋ℓ) = Qₙ`, `n ≥ 3`
    EqA,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::SumP,
        Identity::SumQ,
        Identity::SumKP,
        Identity::Qkp,
        Identity::EqA,
    ];

    pub fn valid_from(self) -> u32 {
        match self {
            Identity::SumP | Identity::SumQ | Identity::SumKP => 1,
            Identity::Qkp | Identity::EqA => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::SumP => "SumP",
            Identity::SumQ => "SumQ",
            Identity::SumKP => "SumKP",
            Identity::Qkp => "QKP",
            Identity::EqA => "EqA",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                token: s.to_string(),
                reason: "unknown identity".into(),
            })
    }
}

/// Both sides of one identity at one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck<T> {
    pub identity: Identity,
    pub n: u32,
    pub lhs: T,
    pub rhs: T,
    pub holds: bool,
}

/// Right-hand sides of the form `numerator / 2`: `lhs` must satisfy
/// `2·lhs = numerator`, which also rules out an odd numerator.
fn halves<T: ExactInt>(lhs: &T, numerator: T) -> Result<(T, bool)> {
    let doubled = mul(&lift(2)?, lhs, "identity check")?;
    let holds = doubled == numerator;
    let (half, _) = numerator.div_rem(&lift(2)?);
    Ok((half, holds))
}

pub fn check_identity<T: ExactInt>(identity: Identity, n: u32) -> Result<IdentityCheck<T>> {
    if n < identity.valid_from() {
        return Err(Error::BelowRange {
            row: identity.name().to_string(),
            n,
            valid_from: identity.valid_from(),
        });
    }
    let big = |k: u32| -> Result<T> { lift(u64::from(k)) };
    let (lhs, rhs, holds) = match identity {
        Identity::SumP => {
            let lhs = sum((1..=n).map(pell::<T>), "SumP")?;
            let num = sub(&add(&pell(n + 1)?, &pell(n)?, "SumP")?, &T::one(), "SumP")?;
            let (rhs, holds) = halves(&lhs, num)?;
            (lhs, rhs, holds)
        }
        Identity::SumQ => {
            let lhs = sum((0..=n).map(q_value::<T>), "SumQ")?;
            let num = add(&add(&pell(n + 1)?, &big(n)?, "SumQ")?, &T::one(), "SumQ")?;
            let (rhs, holds) = halves(&lhs, num)?;
            (lhs, rhs, holds)
        }
        Identity::SumKP => {
            let lhs = sum(
                (1..=n).map(|k| mul(&big(k)?, &pell::<T>(n - k)?, "SumKP")),
                "SumKP",
            )?;
            let num = sub(&sub(&pell(n + 1)?, &big(n)?, "SumKP")?, &T::one(), "SumKP")?;
            let (rhs, holds) = halves(&lhs, num)?;
            (lhs, rhs, holds)
        }
        Identity::Qkp => {
            let terms = sum(
                (3..=n).map(|k| {
                    let kp = mul(&big(k - 2)?, &pell::<T>(n - k)?, "QKP")?;
                    add(&kp, &q_value(n - k)?, "QKP")
                }),
                "QKP",
            )?;
            let lhs = add(&q_value(n - 2)?, &terms, "QKP")?;
            let rhs = pell(n - 1)?;
            let holds = lhs == rhs;
            (lhs, rhs, holds)
        }
        Identity::EqA => {
            let terms = sum(
                (3..=n).map(|k| {
                    let inner = sum(
                        (k + 1..=n).map(|l| {
                            let c = binomial::<T>(u64::from(l - 3), u64::from(l - k))?;
                            mul(&c, &q_value(n - l)?, "EqA")
                        }),
                        "EqA",
                    )?;
                    add(&q_value(n - k)?, &inner, "EqA")
                }),
                "EqA",
            )?;
            let head = add(&q_value(n - 1)?, &q_value(n - 2)?, "EqA")?;
            let lhs = add(&head, &terms, "EqA")?;
            let rhs = q_value(n)?;
            let holds = lhs == rhs;
            (lhs, rhs, holds)
        }
    };
    Ok(IdentityCheck {
        identity,
        n,
        lhs,
        rhs,
        holds,
    })
}
