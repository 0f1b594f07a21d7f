//! Patterns and the two containment predicates.
//!
//! Classical containment asks for any subsequence order-isomorphic to the
//! pattern. The Fishburn pattern is the bivincular 231 whose first two
//! entries are adjacent in position and whose outer entries are adjacent in
//! value: indices `i < j` with `πᵢ < πᵢ₊₁`, `πⱼ < πᵢ` and `πᵢ = πⱼ + 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{check_tokens, Permutation};

/// Longest classical pattern accepted; keeps the compact digit form unambiguous.
pub const MAX_PATTERN_LEN: usize = 9;

/// A classical pattern `p₁p₂⋯p_k` with `1 ≤ k ≤ 9`.
///
/// Besides the body it carries, for every slot `j`, the earlier slots holding
/// the nearest smaller and nearest larger pattern values. A candidate entry
/// for slot `j` only has to be compared against those two already-matched
/// entries to keep the partial match order-isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassicalPattern {
    body: Permutation,
    below: [Option<u8>; MAX_PATTERN_LEN],
    above: [Option<u8>; MAX_PATTERN_LEN],
}

impl ClassicalPattern {
    pub fn new(body: Permutation) -> Result<Self> {
        let k = body.len();
        if k == 0 || k > MAX_PATTERN_LEN {
            return Err(Error::Parse {
                token: body.to_string(),
                reason: format!("pattern length must be between 1 and {MAX_PATTERN_LEN}"),
            });
        }
        let pat = body.as_slice();
        let mut below = [None; MAX_PATTERN_LEN];
        let mut above = [None; MAX_PATTERN_LEN];
        for j in 0..k {
            let mut lo: Option<usize> = None;
            let mut hi: Option<usize> = None;
            for e in 0..j {
                if pat[e] < pat[j] && lo.is_none_or(|l| pat[e] > pat[l]) {
                    lo = Some(e);
                }
                if pat[e] > pat[j] && hi.is_none_or(|h| pat[e] < pat[h]) {
                    hi = Some(e);
                }
            }
            below[j] = lo.map(|e| e as u8);
            above[j] = hi.map(|e| e as u8);
        }
        Ok(ClassicalPattern { body, below, above })
    }

    pub fn body(&self) -> &Permutation {
        &self.body
    }

    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn complement(&self) -> Self {
        ClassicalPattern::new(self.body.complement()).expect("complement keeps the length")
    }

    /// Whether some subsequence of `text` is order-isomorphic to the pattern.
    /// `text` may be any sequence of distinct integers, e.g. a partial
    /// placement during search.
    pub fn is_contained_in(&self, text: &[u32]) -> bool {
        let mut chosen = [0u32; MAX_PATTERN_LEN];
        self.extend_match(text, 0, 0, text.len(), None, &mut chosen)
    }

    /// Whether an occurrence exists whose last entry is `text[last]`.
    pub fn has_occurrence_ending_at(&self, text: &[u32], last: usize) -> bool {
        if last >= text.len() || last + 1 < self.len() {
            return false;
        }
        let mut chosen = [0u32; MAX_PATTERN_LEN];
        self.extend_match(text, 0, 0, last, Some(last), &mut chosen)
    }

    fn fits(&self, slot: usize, v: u32, chosen: &[u32; MAX_PATTERN_LEN]) -> bool {
        if let Some(lo) = self.below[slot] {
            if v < chosen[lo as usize] {
                return false;
            }
        }
        if let Some(hi) = self.above[slot] {
            if v > chosen[hi as usize] {
                return false;
            }
        }
        true
    }

    /// Depth-first matching of slots `slot..k`. Slots before the final one
    /// draw from `text[start..end]`; the final slot is pinned to `pinned_last`
    /// when given. Returns at the first complete occurrence.
    fn extend_match(
        &self,
        text: &[u32],
        slot: usize,
        start: usize,
        end: usize,
        pinned_last: Option<usize>,
        chosen: &mut [u32; MAX_PATTERN_LEN],
    ) -> bool {
        let k = self.len();
        if slot + 1 == k {
            if let Some(last) = pinned_last {
                return self.fits(slot, text[last], chosen);
            }
        }
        // Leave room for the slots still to be filled inside [start, end).
        let free_after = k - 1 - slot - usize::from(pinned_last.is_some());
        let Some(stop) = end.checked_sub(free_after) else {
            return false;
        };
        for i in start..stop {
            let v = text[i];
            if !self.fits(slot, v, chosen) {
                continue;
            }
            if slot + 1 == k {
                return true;
            }
            chosen[slot] = v;
            if self.extend_match(text, slot + 1, i + 1, end, pinned_last, chosen) {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for ClassicalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.body.to_compact().expect("pattern length is at most 9"))
    }
}

impl fmt::Debug for ClassicalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassicalPattern({self})")
    }
}

impl FromStr for ClassicalPattern {
    type Err = Error;

    /// Compact digits (`"14253"`) or space-separated integers (`"1 4 2 5 3"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse {
                token: String::new(),
                reason: "empty pattern".into(),
            });
        }
        let values: Vec<u32> = if s.contains(char::is_whitespace) {
            s.split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>().map_err(|_| Error::Parse {
                        token: tok.to_string(),
                        reason: "not a positive integer".into(),
                    })
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10).ok_or_else(|| Error::Parse {
                        token: c.to_string(),
                        reason: "not a digit".into(),
                    })
                })
                .collect::<Result<_>>()?
        };
        if values.len() > MAX_PATTERN_LEN {
            return Err(Error::Parse {
                token: s.to_string(),
                reason: format!("patterns are limited to {MAX_PATTERN_LEN} entries"),
            });
        }
        check_tokens(&values)?;
        ClassicalPattern::new(Permutation::from_vec_unchecked(values))
    }
}

/// The single bivincular pattern defining Fishburn permutations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FishburnPattern;

impl FishburnPattern {
    /// An ascent `πᵢ < πᵢ₊₁` whose bottom value minus one sits further right.
    /// `text` may be a partial placement of distinct positive values.
    pub fn is_contained_in(self, text: &[u32]) -> bool {
        let n = text.len();
        if n < 3 {
            return false;
        }
        let top = text.iter().copied().max().unwrap_or(0) as usize;
        let mut pos = vec![None; top + 1];
        for (i, &v) in text.iter().enumerate() {
            pos[v as usize] = Some(i);
        }
        // Values absent from a partial placement never complete an occurrence.
        (0..n - 1).any(|i| {
            let a = text[i];
            a < text[i + 1] && a > 1 && pos[(a - 1) as usize].is_some_and(|j| j > i + 1)
        })
    }
}

pub fn contains_classical(p: &Permutation, pat: &ClassicalPattern) -> bool {
    pat.is_contained_in(p.as_slice())
}

pub fn contains_fishburn(p: &Permutation) -> bool {
    FishburnPattern.is_contained_in(p.as_slice())
}

/// A set of classical patterns, optionally together with the Fishburn pattern.
///
/// Patterns are kept sorted and deduplicated so that equal sets compare and
/// print identically regardless of input order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PatternSet {
    classical: Vec<ClassicalPattern>,
    fishburn: bool,
}

impl PatternSet {
    pub fn new(classical: impl IntoIterator<Item = ClassicalPattern>, fishburn: bool) -> Self {
        let mut classical: Vec<_> = classical.into_iter().collect();
        classical.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.body().cmp(b.body())));
        classical.dedup();
        PatternSet {
            classical,
            fishburn,
        }
    }

    /// Parses a comma-separated list such as `"321,1423,2143"`. Blank text is
    /// the empty list.
    pub fn parse(text: &str, fishburn: bool) -> Result<Self> {
        let text = text.trim();
        let classical = if text.is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(str::parse)
                .collect::<Result<Vec<ClassicalPattern>>>()?
        };
        Ok(PatternSet::new(classical, fishburn))
    }

    /// Only the Fishburn pattern.
    pub fn fishburn_only() -> Self {
        PatternSet::new([], true)
    }

    pub fn classical(&self) -> &[ClassicalPattern] {
        &self.classical
    }

    pub fn fishburn(&self) -> bool {
        self.fishburn
    }

    pub fn with_fishburn(mut self, fishburn: bool) -> Self {
        self.fishburn = fishburn;
        self
    }

    pub fn contains_pattern(&self, pat: &ClassicalPattern) -> bool {
        self.classical.contains(pat)
    }

    /// Entrywise complement of every classical pattern; the Fishburn flag is kept.
    pub fn complement(&self) -> Self {
        PatternSet::new(
            self.classical.iter().map(ClassicalPattern::complement),
            self.fishburn,
        )
    }

    pub fn is_avoided_by(&self, text: &[u32]) -> bool {
        !(self.fishburn && FishburnPattern.is_contained_in(text))
            && !self.classical.iter().any(|pat| pat.is_contained_in(text))
    }
}

impl fmt::Display for PatternSet {
    /// Comma-separated classical patterns; the Fishburn flag is not printed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, pat) in self.classical.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{pat}")?;
        }
        Ok(())
    }
}

pub fn avoids(p: &Permutation, ps: &PatternSet) -> bool {
    ps.is_avoided_by(p.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::tests::arb_perm;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> ClassicalPattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_pattern_examples() {
        assert_eq!(pat("321").body().as_slice(), &[3, 2, 1]);
        assert_eq!(pat("14253").body().as_slice(), &[1, 4, 2, 5, 3]);
        assert_eq!(pat("1 4 2 5 3"), pat("14253"));
        assert!(matches!(
            "1223".parse::<ClassicalPattern>(),
            Err(Error::Parse { token, .. }) if token == "2"
        ));
        assert!(matches!(
            "32x".parse::<ClassicalPattern>(),
            Err(Error::Parse { token, .. }) if token == "x"
        ));
        assert!(matches!(
            "130".parse::<ClassicalPattern>(),
            Err(Error::Parse { token, .. }) if token == "0"
        ));
        assert!(matches!(
            "13".parse::<ClassicalPattern>(),
            Err(Error::Parse { token, .. }) if token == "3"
        ));
        assert!("".parse::<ClassicalPattern>().is_err());
        assert!("1 2 3 4 5 6 7 8 9 10".parse::<ClassicalPattern>().is_err());
    }

    #[test]
    fn classical_examples() {
        assert!(contains_classical(&p("3142"), &pat("231")));
        assert!(!contains_classical(&p("3142"), &pat("123")));
        assert!(!contains_classical(&Permutation::identity(9), &pat("321")));
        assert!(!contains_classical(&Permutation::empty(), &pat("1")));
        assert!(contains_classical(&p("1"), &pat("1")));
        assert!(contains_classical(&p("3 1 4 2 5"), &pat("3142")));
    }

    #[test]
    fn occurrence_ending_at() {
        let q = pat("231");
        let text = [2, 4, 1, 3];
        assert!(q.has_occurrence_ending_at(&text, 2));
        assert!(!q.has_occurrence_ending_at(&text, 3));
        assert!(!q.has_occurrence_ending_at(&text, 1));
        assert!(pat("1").has_occurrence_ending_at(&text, 0));
    }

    #[test]
    fn fishburn_examples() {
        assert!(contains_fishburn(&p("231")));
        assert!(!contains_fishburn(&Permutation::identity(8)));
        assert!(!contains_fishburn(&p("3142")));
        assert!(contains_fishburn(&p("2413")));
        assert!(contains_fishburn(&p("3412")));
        assert!(!contains_fishburn(&Permutation::empty()));
    }

    #[test]
    fn avoids_examples() {
        let s = PatternSet::parse("321,1243", true).unwrap();
        assert!(avoids(&p("21"), &s));
        assert!(!avoids(&p("231"), &PatternSet::fishburn_only()));
        let s = PatternSet::parse("321,2143", true).unwrap();
        assert!(avoids(&p("4123"), &s));
        assert!(avoids(
            &Permutation::empty(),
            &PatternSet::parse("1", true).unwrap()
        ));
    }

    #[test]
    fn pattern_set_is_canonical() {
        let a = PatternSet::parse("2143,321,1423,321", true).unwrap();
        let b = PatternSet::parse(" 321, 1423,2143", true).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "321,1423,2143");
        assert!(PatternSet::parse("", false).unwrap().classical().is_empty());
        assert!(matches!(
            PatternSet::parse("321,,12", false),
            Err(Error::Parse { .. })
        ));
    }

    fn arb_pattern(max_len: usize) -> impl Strategy<Value = ClassicalPattern> {
        arb_perm(max_len)
            .prop_filter("non-empty", |p| !p.is_empty())
            .prop_map(|p| ClassicalPattern::new(p).unwrap())
    }

    proptest! {
        #[test]
        fn fishburn_occurrence_implies_231(a in arb_perm(10)) {
            if contains_fishburn(&a) {
                prop_assert!(contains_classical(&a, &pat("231")));
            }
        }

        #[test]
        fn containment_is_monotone_in_prefixes(a in arb_perm(10), q in arb_pattern(4)) {
            let text = a.as_slice();
            let mut seen = false;
            for m in 0..=text.len() {
                let now = q.is_contained_in(&text[..m]);
                prop_assert!(!seen || now);
                seen = now;
            }
        }

        #[test]
        fn full_scan_agrees_with_occurrence_endpoints(a in arb_perm(9), q in arb_pattern(4)) {
            let text = a.as_slice();
            let by_end = (0..text.len()).any(|m| q.has_occurrence_ending_at(text, m));
            prop_assert_eq!(q.is_contained_in(text), by_end);
        }
    }
}
