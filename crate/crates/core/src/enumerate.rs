//! Counting and listing avoidance classes by pruned depth-first search.
//!
//! Positions are filled left to right and each position tries the unused
//! values in increasing order, so members come out in lexicographic order.
//! After placing position `m` only occurrences that end at `m` are tested:
//! classical occurrences whose last entry is `πₘ`, and Fishburn occurrences
//! whose value-adjacent bottom entry is `πₘ` (the bottom entry always sits
//! after the adjacent pair, so it is the last of the three to be placed).
//! Every prefix that already holds an occurrence is abandoned.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::PatternSet;
use crate::perm::Permutation;
use crate::Count;

/// Default largest `n` accepted for counting.
pub const DEFAULT_COUNT_CAP: usize = 14;
/// Default largest `n` accepted when members are materialized.
pub const DEFAULT_LIST_CAP: usize = 10;
/// Hard ceiling for either cap.
pub const MAX_SUPPORTED_N: usize = 64;

/// Below this length a query is not worth sharding across threads.
const PARALLEL_THRESHOLD: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OnePosition {
    /// `π₁ = 1`
    First,
    /// `π₂ = 1`
    Second,
}

impl OnePosition {
    pub fn from_index(i: usize) -> Result<Self> {
        match i {
            1 => Ok(OnePosition::First),
            2 => Ok(OnePosition::Second),
            _ => Err(Error::InvalidQuery(format!(
                "position of 1 must be 1 or 2, got {i}"
            ))),
        }
    }

    pub fn index(self) -> usize {
        match self {
            OnePosition::First => 1,
            OnePosition::Second => 2,
        }
    }
}

/// Members must begin with `values`, or, with `exclude_last`, begin with all
/// of `values` except the last and then differ from the last one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Prefix {
    pub values: Vec<u32>,
    pub exclude_last: bool,
}

impl Prefix {
    pub fn exact(values: Vec<u32>) -> Self {
        Prefix {
            values,
            exclude_last: false,
        }
    }

    /// "Begins with `values[..len-1]` but not with `values`".
    pub fn excluding_last(values: Vec<u32>) -> Self {
        Prefix {
            values,
            exclude_last: true,
        }
    }

    fn admits(&self, m: usize, v: u32) -> bool {
        let len = self.values.len();
        if m + 1 < len || (m + 1 == len && !self.exclude_last) {
            v == self.values[m]
        } else if m + 1 == len {
            v != self.values[m]
        } else {
            true
        }
    }
}

/// A class to enumerate: length, patterns and optional filters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AvoidanceQuery {
    pub n: usize,
    pub patterns: PatternSet,
    pub one_position: Option<OnePosition>,
    pub prefix: Option<Prefix>,
}

impl AvoidanceQuery {
    pub fn new(n: usize, patterns: PatternSet) -> Self {
        AvoidanceQuery {
            n,
            patterns,
            one_position: None,
            prefix: None,
        }
    }

    pub fn with_one_position(mut self, pos: OnePosition) -> Self {
        self.one_position = Some(pos);
        self
    }

    pub fn with_prefix(mut self, prefix: Prefix) -> Self {
        self.prefix = Some(prefix);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(prefix) = &self.prefix {
            if prefix.values.len() > self.n {
                return Err(Error::InvalidQuery(format!(
                    "prefix of length {} is longer than n = {}",
                    prefix.values.len(),
                    self.n
                )));
            }
            if prefix.exclude_last && prefix.values.is_empty() {
                return Err(Error::InvalidQuery(
                    "an excluded prefix needs at least one value".into(),
                ));
            }
            let mut seen = vec![false; self.n + 1];
            for &v in &prefix.values {
                if v == 0 || v as usize > self.n {
                    return Err(Error::InvalidQuery(format!(
                        "prefix value {v} outside 1..={}",
                        self.n
                    )));
                }
                if std::mem::replace(&mut seen[v as usize], true) {
                    return Err(Error::InvalidQuery(format!("prefix value {v} repeated")));
                }
            }
        }
        Ok(())
    }

    fn admits(&self, m: usize, v: u32) -> bool {
        if let Some(pos) = self.one_position {
            if (v == 1) != (m + 1 == pos.index()) {
                return false;
            }
        }
        self.prefix.as_ref().is_none_or(|p| p.admits(m, v))
    }

    /// Membership of a complete permutation, decided without any search
    /// state. This is the predicate behind [`filter_all`].
    pub fn matches(&self, p: &[u32]) -> bool {
        p.len() == self.n
            && p.iter().enumerate().all(|(m, &v)| self.admits(m, v))
            && self.patterns.is_avoided_by(p)
    }
}

/// Caps on `n` for counting and for materialized listings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub count_cap: usize,
    pub list_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            count_cap: DEFAULT_COUNT_CAP,
            list_cap: DEFAULT_LIST_CAP,
        }
    }
}

impl Limits {
    fn check_count(&self, n: usize) -> Result<()> {
        let cap = self.count_cap.min(MAX_SUPPORTED_N);
        if n > cap {
            return Err(Error::Capacity {
                what: "counting",
                n,
                cap,
            });
        }
        Ok(())
    }

    fn check_list(&self, n: usize) -> Result<()> {
        self.check_count(n)?;
        let cap = self.list_cap.min(MAX_SUPPORTED_N);
        if n > cap {
            return Err(Error::Capacity {
                what: "listing",
                n,
                cap,
            });
        }
        Ok(())
    }
}

/// Knobs for the search kernel.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Abandon prefixes of length 3 that do not contain 1. Only sound when
    /// the class is contained in the 321-avoiding Fishburn permutations, and
    /// only meant as a cross-check: it assumes the position-of-1 lemma.
    pub position_of_one_pruning: bool,
}

/// Lexicographically ordered, duplicate-free members of a class.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ClassMembers {
    pub permutations: Vec<Permutation>,
}

impl ClassMembers {
    pub fn len(&self) -> usize {
        self.permutations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutations.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.permutations.iter()
    }
}

/// `|F_n^{(1)}|`, `|F_n^{(2)}|` and members with 1 elsewhere.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OnePositionSplit {
    pub first: Count,
    pub second: Count,
    pub other: Count,
}

impl OnePositionSplit {
    pub fn total(&self) -> Count {
        self.first + self.second + self.other
    }
}

struct Kernel<'q> {
    query: &'q AvoidanceQuery,
    prune_by_one: bool,
    placed: Vec<u32>,
    /// position of each value, indexed by value; `None` while unplaced
    pos: Vec<Option<usize>>,
}

impl<'q> Kernel<'q> {
    fn new(query: &'q AvoidanceQuery, opts: SearchOptions) -> Self {
        let ps = &query.patterns;
        let prune_by_one = opts.position_of_one_pruning
            && ps.fishburn()
            && ps
                .classical()
                .iter()
                .any(|p| p.body().as_slice() == [3, 2, 1]);
        Kernel {
            query,
            prune_by_one,
            placed: Vec::with_capacity(query.n),
            pos: vec![None; query.n + 2],
        }
    }

    /// Places `v` at the next position unless that completes an occurrence.
    fn push(&mut self, v: u32) -> bool {
        let m = self.placed.len();
        let ps = &self.query.patterns;
        if ps.fishburn() {
            if let Some(i) = self.pos[v as usize + 1] {
                if i + 1 < m && self.placed[i] < self.placed[i + 1] {
                    return false;
                }
            }
        }
        self.placed.push(v);
        if ps
            .classical()
            .iter()
            .any(|pat| pat.has_occurrence_ending_at(&self.placed, m))
        {
            self.placed.pop();
            return false;
        }
        self.pos[v as usize] = Some(m);
        true
    }

    fn pop(&mut self) {
        let v = self.placed.pop().expect("pop after push");
        self.pos[v as usize] = None;
    }

    fn run<F: FnMut(&[u32])>(&mut self, visit: &mut F, visits: &mut Count) -> Result<()> {
        let n = self.query.n;
        let m = self.placed.len();
        if m == n {
            *visits = visits
                .checked_add(1)
                .ok_or(Error::Overflow("member count"))?;
            visit(&self.placed);
            return Ok(());
        }
        if self.prune_by_one && m == 2 && self.pos[1].is_none() {
            return Ok(());
        }
        for v in 1..=n as u32 {
            if self.pos[v as usize].is_some() || !self.query.admits(m, v) {
                continue;
            }
            if self.push(v) {
                self.run(visit, visits)?;
                self.pop();
            }
        }
        Ok(())
    }
}

/// Visits every member of the class exactly once, in lexicographic order,
/// and returns the number of visits.
pub fn search_kernel<F: FnMut(&[u32])>(
    q: &AvoidanceQuery,
    limits: Limits,
    opts: SearchOptions,
    mut visit: F,
) -> Result<Count> {
    limits.check_count(q.n)?;
    q.validate()?;
    let mut kernel = Kernel::new(q, opts);
    let mut visits = 0;
    kernel.run(&mut visit, &mut visits)?;
    Ok(visits)
}

/// Like [`count`], with explicit limits and options. Long queries are
/// sharded on the first entry; the shard totals are summed in order, so the
/// result does not depend on scheduling.
pub fn count_with(q: &AvoidanceQuery, limits: Limits, opts: SearchOptions) -> Result<Count> {
    limits.check_count(q.n)?;
    q.validate()?;
    if q.n < PARALLEL_THRESHOLD {
        return search_kernel(q, limits, opts, |_| {});
    }
    let shards: Vec<Result<Count>> = (1..=q.n as u32)
        .into_par_iter()
        .map(|first| {
            let mut kernel = Kernel::new(q, opts);
            let mut visits = 0;
            if q.admits(0, first) && kernel.push(first) {
                kernel.run(&mut |_| {}, &mut visits)?;
            }
            Ok(visits)
        })
        .collect();
    shards.into_iter().try_fold(0 as Count, |acc, shard| {
        acc.checked_add(shard?)
            .ok_or(Error::Overflow("member count"))
    })
}

/// Exact size of the class described by `q`. `n = 0` counts the empty
/// permutation.
pub fn count(q: &AvoidanceQuery) -> Result<Count> {
    count_with(q, Limits::default(), SearchOptions::default())
}

pub fn list_members_with(q: &AvoidanceQuery, limits: Limits) -> Result<ClassMembers> {
    limits.check_list(q.n)?;
    let mut permutations = Vec::new();
    search_kernel(q, limits, SearchOptions::default(), |p| {
        permutations.push(Permutation::from_vec_unchecked(p.to_vec()))
    })?;
    Ok(ClassMembers { permutations })
}

/// Every member of the class, in lexicographic order.
pub fn list_members(q: &AvoidanceQuery) -> Result<ClassMembers> {
    list_members_with(q, Limits::default())
}

/// Splits the class `F_n(ps)` by where the entry 1 sits.
pub fn count_by_one_position(n: usize, ps: &PatternSet) -> Result<OnePositionSplit> {
    count_by_one_position_with(n, ps, Limits::default())
}

pub fn count_by_one_position_with(
    n: usize,
    ps: &PatternSet,
    limits: Limits,
) -> Result<OnePositionSplit> {
    if n == 0 {
        return Err(Error::InvalidQuery(
            "splitting by the position of 1 needs n >= 1".into(),
        ));
    }
    let q = AvoidanceQuery::new(n, ps.clone());
    let mut split = OnePositionSplit::default();
    search_kernel(&q, limits, SearchOptions::default(), |p| {
        match p.iter().position(|&v| v == 1) {
            Some(0) => split.first += 1,
            Some(1) => split.second += 1,
            _ => split.other += 1,
        }
    })?;
    Ok(split)
}

/// Lexicographic successor in place; `false` once the sequence is decreasing.
fn next_permutation(a: &mut [u32]) -> bool {
    let Some(i) = a.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).expect("a[i + 1] > a[i]");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<u32>> = Some((1..=n as u32).collect());
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            current = Some(next);
        }
        Some(Permutation::from_vec_unchecked(out))
    })
}

/// Counts the class by testing every one of the `n!` permutations with the
/// whole-permutation predicates. No pruning, no search state; used to
/// spot-check the kernel.
pub fn filter_all(q: &AvoidanceQuery) -> Result<Count> {
    q.validate()?;
    let mut total: Count = 0;
    for p in all_permutations(q.n) {
        if q.matches(p.as_slice()) {
            total += 1;
        }
    }
    Ok(total)
}
