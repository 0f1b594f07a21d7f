//! The permutation value type.
//!
//! Positions and values are one-indexed at the public surface, matching the
//! usual notation `π = π₁π₂⋯πₙ`; the backing vector is zero-indexed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A rearrangement of `{1, …, n}`. The empty permutation (`n = 0`) is valid.
///
/// Values are immutable; every operation returns a fresh permutation.
/// Ordering is lexicographic on the entry sequence.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=values.len()`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let idx = v as usize;
            if v == 0 || idx > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[idx] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[idx] = true;
        }
        Ok(Permutation { values })
    }

    /// Caller guarantees the permutation invariant.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    /// `1 2 ⋯ n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    /// `n ⋯ 2 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.values
    }

    /// The entry at one-based position `i`, if any.
    pub fn value_at(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    /// `πᵢ ↦ n + 1 − πᵢ`.
    pub fn complement(&self) -> Self {
        let top = self.len() as u32 + 1;
        Permutation {
            values: self.values.iter().map(|&v| top - v).collect(),
        }
    }

    /// `self ⊕ other`: `self` followed by `other` shifted up by `self.len()`.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let shift = self.len() as u32;
        let mut values = Vec::with_capacity(self.len() + other.len());
        values.extend_from_slice(&self.values);
        values.extend(other.values.iter().map(|&v| v + shift));
        Permutation { values }
    }

    /// Inserts the new maximum `n + 1` into gap `site`, where gap 0 lies
    /// before the first entry and gap `n` after the last.
    pub fn insert_at_site(&self, site: usize) -> Result<Self> {
        if site > self.len() {
            return Err(Error::SiteOutOfRange {
                site,
                len: self.len(),
            });
        }
        let mut values = self.values.clone();
        values.insert(site, self.len() as u32 + 1);
        Ok(Permutation { values })
    }

    /// Drops the entry `n`; inverse of [`Permutation::insert_at_site`].
    pub fn remove_max(&self) -> Self {
        let n = self.len() as u32;
        Permutation {
            values: self.values.iter().copied().filter(|&v| v != n).collect(),
        }
    }

    /// Values greater than every entry to their left.
    pub fn left_to_right_maxima(&self) -> BTreeSet<u32> {
        let mut best = 0;
        let mut out = BTreeSet::new();
        for &v in &self.values {
            if v > best {
                best = v;
                out.insert(v);
            }
        }
        out
    }

    /// One-based position of the entry 1.
    pub fn position_of_one(&self) -> Result<usize> {
        self.values
            .iter()
            .position(|&v| v == 1)
            .map(|i| i + 1)
            .ok_or(Error::EmptyPermutation)
    }

    /// Digit string such as `3124756`; only defined for `n ≤ 9`.
    pub fn to_compact(&self) -> Option<String> {
        if self.len() > 9 {
            return None;
        }
        Some(
            self.values
                .iter()
                .map(|&v| char::from_digit(v, 10).unwrap())
                .collect(),
        )
    }
}

impl fmt::Display for Permutation {
    /// Space-separated entries, e.g. `3 1 2 4 7 5 6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"3 1 2 4"` or the compact digit form `"3124"` (at most nine
    /// digits). Blank input is the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.split_whitespace().nth(1).is_some() {
            s.split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>().map_err(|_| Error::Parse {
                        token: tok.to_string(),
                        reason: "not a positive integer".into(),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            parse_compact(s)?
        };
        check_tokens(&values)?;
        Ok(Permutation { values })
    }
}

fn parse_compact(s: &str) -> Result<Vec<u32>> {
    if s.chars().count() > 9 {
        return Err(Error::Parse {
            token: s.to_string(),
            reason: "compact digit form is limited to 9 entries; separate entries with spaces"
                .into(),
        });
    }
    s.chars()
        .map(|c| {
            c.to_digit(10).ok_or_else(|| Error::Parse {
                token: c.to_string(),
                reason: "not a digit".into(),
            })
        })
        .collect()
}

/// Re-validates parsed entries so the error names the offending token.
pub(crate) fn check_tokens(values: &[u32]) -> Result<()> {
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for &v in values {
        if v == 0 {
            return Err(Error::Parse {
                token: v.to_string(),
                reason: "entries start at 1".into(),
            });
        }
        if v as usize > n {
            return Err(Error::Parse {
                token: v.to_string(),
                reason: format!("exceeds the length {n}, so some value is missing"),
            });
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::Parse {
                token: v.to_string(),
                reason: "repeated entry".into(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(p("213").complement(), p("231"));
        assert_eq!(p("321").complement(), p("123"));
        assert_eq!(Permutation::empty().complement(), Permutation::empty());
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(p("12").direct_sum(&p("123")), p("12345"));
        assert_eq!(Permutation::empty().direct_sum(&p("312")), p("312"));
        assert_eq!(p("21").direct_sum(&p("1")), p("213"));
    }

    #[test]
    fn insert_at_site_examples() {
        assert_eq!(p("12").insert_at_site(0).unwrap(), p("312"));
        assert_eq!(Permutation::empty().insert_at_site(0).unwrap(), p("1"));
        assert_eq!(p("213").insert_at_site(3).unwrap(), p("2134"));
        assert_eq!(
            p("213").insert_at_site(4),
            Err(Error::SiteOutOfRange { site: 4, len: 3 })
        );
    }

    #[test]
    fn left_to_right_maxima_examples() {
        let m = p("3 1 2 4 7 5 6").left_to_right_maxima();
        assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![3, 4, 7]);
        assert_eq!(Permutation::identity(5).left_to_right_maxima().len(), 5);
        assert_eq!(
            Permutation::decreasing(5)
                .left_to_right_maxima()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![5]
        );
    }

    #[test]
    fn position_of_one_examples() {
        assert_eq!(p("213").position_of_one(), Ok(2));
        assert_eq!(p("1").position_of_one(), Ok(1));
        assert_eq!(p("4123").position_of_one(), Ok(2));
        assert_eq!(
            Permutation::empty().position_of_one(),
            Err(Error::EmptyPermutation)
        );
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("3 1 2 4 7 5 6"), p("3124756"));
        assert_eq!(p("3 1 2 4 7 5 6").to_string(), "3 1 2 4 7 5 6");
        assert_eq!(p("").len(), 0);
        let long: Permutation = "10 1 2 3 4 5 6 7 8 9".parse().unwrap();
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_compact(), None);
        assert!("1234567890".parse::<Permutation>().is_err());
        assert!(matches!(
            "1223".parse::<Permutation>(),
            Err(Error::Parse { token, .. }) if token == "2"
        ));
        assert!(matches!(
            "1 3".parse::<Permutation>(),
            Err(Error::Parse { token, .. }) if token == "3"
        ));
        assert!(matches!(
            "102".parse::<Permutation>(),
            Err(Error::Parse { token, .. }) if token == "0"
        ));
    }

    #[test]
    fn new_rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    pub(crate) fn arb_perm(max_len: usize) -> impl Strategy<Value = Permutation> {
        (0..=max_len)
            .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(a in arb_perm(12)) {
            prop_assert_eq!(a.complement().complement(), a);
        }

        #[test]
        fn direct_sum_is_associative(a in arb_perm(5), b in arb_perm(5), c in arb_perm(5)) {
            prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
        }

        #[test]
        fn remove_max_undoes_insertion(a in arb_perm(10), site in 0usize..=10) {
            let site = site.min(a.len());
            let grown = a.insert_at_site(site).unwrap();
            prop_assert_eq!(grown.len(), a.len() + 1);
            prop_assert_eq!(grown.remove_max(), a);
        }

        #[test]
        fn lr_maxima_hold_first_entry_and_maximum(a in arb_perm(12)) {
            prop_assume!(!a.is_empty());
            let m = a.left_to_right_maxima();
            prop_assert!(m.contains(&(a.len() as u32)));
            prop_assert!(m.contains(&a.as_slice()[0]));
        }

        #[test]
        fn display_parse_round_trip(a in arb_perm(14)) {
            prop_assert_eq!(a.to_string().parse::<Permutation>().unwrap(), a);
        }
    }
}
