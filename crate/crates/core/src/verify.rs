//! Reproduction harness: pruned counts against closed forms and structural
//! claims, one report per row or claim.
//!
//! Each record compares a count produced by the search kernel (`brute`) with
//! the value the claim predicts (`formula`). Records below a claim's stated
//! range are kept for information and marked, but never fail a report.
//! Counts at `n ≤ oracle_max` are also recomputed by [`filter_all`]; any
//! disagreement aborts the suite with [`Error::OracleDivergence`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{
    count_by_one_position_with, count_with, filter_all, list_members_with, AvoidanceQuery,
    ClassMembers, Limits, OnePosition, Prefix, SearchOptions,
};
use crate::error::{Error, Result};
use crate::identities::{check_identity, Identity};
use crate::pattern::PatternSet;
use crate::perm::Permutation;
use crate::sequences::{binomial, pow2, SequenceId, SequenceRow, KNOWN_ROWS};

/// Default upper `n` for the identity suite.
pub const DEFAULT_IDENTITY_MAX: u32 = 40;
/// Counts at or below this length are re-derived by the filter-all route.
pub const DEFAULT_ORACLE_MAX: usize = 8;
/// Largest `n` for the identity suite; every term stays well inside `i128`.
pub const MAX_IDENTITY_N: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    OutOfStatedRange,
}

impl Status {
    fn asserted(matched: bool) -> Self {
        if matched {
            Status::Match
        } else {
            Status::Mismatch
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "MISMATCH",
            Status::OutOfStatedRange => "out-of-stated-range",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub n: u32,
    pub brute: i128,
    /// `None` where the closed form is undefined (e.g. a negative index).
    pub formula: Option<i128>,
    #[serde(rename = "match")]
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub records: Vec<Record>,
    pub pass: bool,
    /// Wall time; never serialized so that reports stay byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for VerificationReport {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.records == other.records && self.pass == other.pass
    }
}

impl VerificationReport {
    fn new(id: impl Into<String>, records: Vec<Record>, started: Instant) -> Self {
        let pass = records.iter().all(|r| r.status != Status::Mismatch);
        VerificationReport {
            id: id.into(),
            records,
            pass,
            elapsed: started.elapsed(),
        }
    }

    /// `id\tn\tbrute\tformula\tmatch` per record, then `id\tPASS|FAIL`.
    pub fn write_delimited(&self, out: &mut impl fmt::Write) -> fmt::Result {
        for r in &self.records {
            let formula = r.formula.map_or_else(|| "-".to_string(), |f| f.to_string());
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                self.id,
                r.n,
                r.brute,
                formula,
                r.status.as_str()
            )?;
        }
        writeln!(
            out,
            "{}\t{}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }

    pub fn to_delimited(&self) -> String {
        let mut s = String::new();
        self.write_delimited(&mut s).expect("writing to a String");
        s
    }
}

/// Settings shared by every suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub limits: Limits,
    pub oracle_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            limits: Limits::default(),
            oracle_max: DEFAULT_ORACLE_MAX,
        }
    }
}

impl VerifyConfig {
    fn check_max(&self, max_n: usize) -> Result<()> {
        if max_n > self.limits.count_cap {
            return Err(Error::Capacity {
                what: "counting",
                n: max_n,
                cap: self.limits.count_cap,
            });
        }
        Ok(())
    }

    fn check_list_max(&self, max_n: usize) -> Result<()> {
        self.check_max(max_n)?;
        if max_n > self.limits.list_cap {
            return Err(Error::Capacity {
                what: "listing",
                n: max_n,
                cap: self.limits.list_cap,
            });
        }
        Ok(())
    }

    /// Kernel count, re-derived by the filter-all route for small `n`.
    fn count(&self, id: &str, q: &AvoidanceQuery) -> Result<u64> {
        let pruned = count_with(q, self.limits, SearchOptions::default())?;
        self.spot_check(id, q, pruned)?;
        Ok(pruned)
    }

    fn list(&self, id: &str, q: &AvoidanceQuery) -> Result<ClassMembers> {
        let members = list_members_with(q, self.limits)?;
        self.spot_check(id, q, members.len() as u64)?;
        Ok(members)
    }

    fn spot_check(&self, id: &str, q: &AvoidanceQuery, pruned: u64) -> Result<()> {
        if q.n <= self.oracle_max {
            let oracle = filter_all(q)?;
            if oracle != pruned {
                return Err(Error::OracleDivergence {
                    id: id.to_string(),
                    n: q.n,
                    pruned,
                    oracle,
                });
            }
        }
        Ok(())
    }
}

/// Compares a count with a closed form, honouring the stated range.
fn compare(n: u32, brute: u64, formula: SequenceId, valid_from: u32) -> Record {
    let predicted = formula.eval::<i128>(n).ok();
    let status = if n < valid_from {
        Status::OutOfStatedRange
    } else {
        Status::asserted(predicted == Some(i128::from(brute)))
    };
    Record {
        n,
        brute: i128::from(brute),
        formula: predicted,
        status,
    }
}

fn collect_in_order<T: Send>(jobs: Vec<Result<T>>) -> Result<Vec<T>> {
    jobs.into_iter().collect()
}

/// `|F_n(row)|` against the row's closed form for `n = 0..=max_n`.
pub fn verify_row(
    row: &SequenceRow,
    max_n: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    cfg.check_max(max_n)?;
    let started = Instant::now();
    let ps = row.pattern_set();
    let records = (0..=max_n)
        .map(|n| {
            let brute = cfg.count(row.id(), &AvoidanceQuery::new(n, ps.clone()))?;
            Ok(compare(n as u32, brute, row.formula, row.valid_from))
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(row.id(), records, started))
}

/// One report per catalogued class.
pub fn verify_table(max_n: usize, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    cfg.check_max(max_n)?;
    collect_in_order(
        KNOWN_ROWS
            .par_iter()
            .map(|row| verify_row(row, max_n, cfg))
            .collect(),
    )
}

/// `|F_n^{(i)}(patterns)| = formula(n)` for `n ≥ valid_from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecompositionRow {
    pub patterns: &'static str,
    pub position: OnePosition,
    pub formula: SequenceId,
    pub valid_from: u32,
    /// `false` for equalities that only appear inside an enumeration argument
    /// rather than as a stand-alone statement.
    pub stated: bool,
}

impl DecompositionRow {
    pub fn id(&self) -> String {
        format!("{}@pos{}", self.patterns, self.position.index())
    }
}

const fn split(
    patterns: &'static str,
    position: OnePosition,
    formula: SequenceId,
    valid_from: u32,
    stated: bool,
) -> DecompositionRow {
    DecompositionRow {
        patterns,
        position,
        formula,
        valid_from,
        stated,
    }
}

pub const DECOMPOSITIONS: [DecompositionRow; 22] = {
    use OnePosition::{First, Second};
    use SequenceId::*;
    [
        split("321,1243", Second, QuadC, 2, true),
        split("321,2134", Second, TwiceMinus4, 3, true),
        split("321,1324", Second, QuadD, 3, true),
        split("321,1423,2143", First, LinearPrev, 2, true),
        split("321,1423,2143", Second, BinomPrevPlus1, 2, true),
        split("321,2143,3124", Second, LinearPrev, 2, true),
        split("321,2143,4123", Second, LinearPrev, 2, true),
        split("321,1423,3124", Second, FibPrev2Plus2, 4, true),
        split("321,1423,4123", First, FibPrev, 4, true),
        split("321,1423,4123", Second, FibMinus1, 4, true),
        split("321,3124,4123", Second, FibPrev, 4, true),
        split("321,31452", First, PellQPrev, 1, true),
        split("321,31452", Second, PellPrev, 1, true),
        split("321,41523", Second, PellPrev, 1, true),
        split("321,1243", First, LinearPrev, 2, false),
        split("321,2134", First, QuadE, 3, false),
        split("321,2143,3124", First, BinomPrevPlus1, 2, false),
        split("321,2143,4123", First, BinomPrevPlus1, 2, false),
        split("321,1423,3124", First, FibPrev, 2, false),
        split("321,3124,4123", First, FibMinus1, 2, false),
        split("321,21354", First, PowMinusBinomPrev, 2, false),
        split("321,21354", Second, PowPrevMinusLinear, 2, false),
    ]
};

pub fn verify_decomposition(
    row: &DecompositionRow,
    max_n: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    cfg.check_max(max_n)?;
    let started = Instant::now();
    let id = row.id();
    let ps = PatternSet::parse(row.patterns, true)?;
    let records = (1..=max_n)
        .map(|n| {
            let q = AvoidanceQuery::new(n, ps.clone()).with_one_position(row.position);
            let brute = cfg.count(&id, &q)?;
            Ok(compare(n as u32, brute, row.formula, row.valid_from))
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(id, records, started))
}

pub fn verify_decompositions(max_n: usize, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    cfg.check_max(max_n)?;
    collect_in_order(
        DECOMPOSITIONS
            .par_iter()
            .map(|row| verify_decomposition(row, max_n, cfg))
            .collect(),
    )
}

/// Patterns `σ` with `F_n(321, σ) = S_n(231, 321, σ)`.
pub const REDUCTION_PATTERNS: [&str; 4] = ["132", "213", "312", "3142"];

/// Position-of-1 lemma over `F_n(321)`: `brute` counts members with 1 in
/// position 1 or 2, `formula` is the class size. A record also fails if the
/// lemma-based pruning changes the count.
pub fn verify_position_of_one(max_n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.check_max(max_n)?;
    let started = Instant::now();
    let id = "lemma:position-of-one(321)";
    let ps = PatternSet::parse("321", true)?;
    let pruned = SearchOptions {
        position_of_one_pruning: true,
    };
    let records = (1..=max_n)
        .map(|n| {
            let q = AvoidanceQuery::new(n, ps.clone());
            let total = cfg.count(id, &q)?;
            let split = count_by_one_position_with(n, &ps, cfg.limits)?;
            let with_lemma = count_with(&q, cfg.limits, pruned)?;
            let front = split.first + split.second;
            Ok(Record {
                n: n as u32,
                brute: i128::from(front),
                formula: Some(i128::from(total)),
                status: Status::asserted(split.other == 0 && front == total && with_lemma == total),
            })
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(id, records, started))
}

/// `F_n(321, σ)` and `S_n(231, 321, σ)` as sorted member lists.
pub fn verify_reduction(
    sigma: &str,
    max_n: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    cfg.check_list_max(max_n)?;
    let started = Instant::now();
    let id = format!("lemma:reduction({sigma})");
    let fishburn_side = PatternSet::parse(&format!("321,{sigma}"), true)?;
    let classical_side = PatternSet::parse(&format!("231,321,{sigma}"), false)?;
    let records = (0..=max_n)
        .map(|n| {
            let left = cfg.list(&id, &AvoidanceQuery::new(n, fishburn_side.clone()))?;
            let right = cfg.list(&id, &AvoidanceQuery::new(n, classical_side.clone()))?;
            Ok(Record {
                n: n as u32,
                brute: left.len() as i128,
                formula: Some(right.len() as i128),
                status: Status::asserted(left == right),
            })
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(id, records, started))
}

pub fn verify_lemmas(max_n: usize, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    cfg.check_list_max(max_n)?;
    let mut reports = vec![verify_position_of_one(max_n, cfg)?];
    let reductions: Vec<Result<_>> = REDUCTION_PATTERNS
        .par_iter()
        .map(|sigma| verify_reduction(sigma, max_n, cfg))
        .collect();
    reports.extend(collect_in_order(reductions)?);
    Ok(reports)
}

/// `S_n(231,321,213)` and `S_n(213,123,231)` are equinumerous, and the
/// complement maps the first class onto the second.
pub fn verify_wilf_complement(max_n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.check_list_max(max_n)?;
    let started = Instant::now();
    let id = "wilf:complement(231,321,213|213,123,231)";
    let a = PatternSet::parse("231,321,213", false)?;
    let b = PatternSet::parse("213,123,231", false)?;
    let records = (0..=max_n)
        .map(|n| {
            let left = cfg.list(id, &AvoidanceQuery::new(n, a.clone()))?;
            let right = cfg.list(id, &AvoidanceQuery::new(n, b.clone()))?;
            let mut image: Vec<Permutation> = left.iter().map(Permutation::complement).collect();
            image.sort();
            image.dedup();
            let bijective = image.len() == left.len() && image == right.permutations;
            Ok(Record {
                n: n as u32,
                brute: left.len() as i128,
                formula: Some(right.len() as i128),
                status: Status::asserted(left.len() == right.len() && bijective),
            })
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(id, records, started))
}

/// Left-to-right maxima on `F_n(321,3142)`: `brute` is the number of distinct
/// maxima sets, `formula` is `2^{n−1}`. Passing needs injectivity and every
/// set to contain `n`, which together pin the image to all such subsets.
pub fn verify_lrmax_bijection(max_n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.check_list_max(max_n)?;
    let started = Instant::now();
    let id = "bijection:lr-maxima(321,3142)";
    let ps = PatternSet::parse("321,3142", true)?;
    let records = (1..=max_n)
        .map(|n| {
            let members = cfg.list(id, &AvoidanceQuery::new(n, ps.clone()))?;
            let top = n as u32;
            let sets: BTreeSet<BTreeSet<u32>> = members
                .iter()
                .map(Permutation::left_to_right_maxima)
                .collect();
            let expected: i128 = pow2(n as u32 - 1)?;
            let all_hold_n = sets.iter().all(|s| s.contains(&top));
            let injective = sets.len() == members.len();
            Ok(Record {
                n: top,
                brute: sets.len() as i128,
                formula: Some(expected),
                status: Status::asserted(injective && all_hold_n && sets.len() as i128 == expected),
            })
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(id, records, started))
}

/// Prefix-constrained counts in `F_n(321,21354)`: members starting `k 1` but
/// not `k 1 2` number `C(n−2, k−1)` for `3 ≤ k ≤ n−1`; and exactly one member
/// starts with `n 1`.
pub fn verify_prefix_claims(max_n: usize, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    cfg.check_max(max_n)?;
    let ps = PatternSet::parse("321,21354", true)?;
    let mut jobs: Vec<Box<dyn Fn() -> Result<VerificationReport> + Send + Sync>> = Vec::new();
    for k in 3..max_n.max(3) as u32 {
        let ps = ps.clone();
        jobs.push(Box::new(move || {
            let started = Instant::now();
            let id = format!("prefix:{k}1~2(321,21354)");
            let records = (k as usize + 1..=max_n)
                .map(|n| {
                    let q = AvoidanceQuery::new(n, ps.clone())
                        .with_prefix(Prefix::excluding_last(vec![k, 1, 2]));
                    let brute = cfg.count(&id, &q)?;
                    let expected: i128 = binomial(n as u64 - 2, u64::from(k) - 1)?;
                    Ok(Record {
                        n: n as u32,
                        brute: i128::from(brute),
                        formula: Some(expected),
                        status: Status::asserted(i128::from(brute) == expected),
                    })
                })
                .collect::<Result<_>>()?;
            Ok(VerificationReport::new(id, records, started))
        }));
    }
    let ps_top = ps.clone();
    jobs.push(Box::new(move || {
        let started = Instant::now();
        let id = "prefix:n1(321,21354)";
        let records = (2..=max_n)
            .map(|n| {
                let q = AvoidanceQuery::new(n, ps_top.clone())
                    .with_prefix(Prefix::exact(vec![n as u32, 1]));
                let brute = cfg.count(id, &q)?;
                Ok(Record {
                    n: n as u32,
                    brute: i128::from(brute),
                    formula: Some(1),
                    status: Status::asserted(brute == 1),
                })
            })
            .collect::<Result<_>>()?;
        Ok(VerificationReport::new(id, records, started))
    }));
    collect_in_order(jobs.par_iter().map(|job| job()).collect())
}

/// The five Pell identities by literal summation, `valid_from..=max_n`.
pub fn verify_identities(max_n: u32) -> Result<Vec<VerificationReport>> {
    if max_n > MAX_IDENTITY_N {
        return Err(Error::Capacity {
            what: "identity",
            n: max_n as usize,
            cap: MAX_IDENTITY_N as usize,
        });
    }
    Identity::ALL
        .iter()
        .map(|&identity| {
            let started = Instant::now();
            let records = (identity.valid_from()..=max_n)
                .map(|n| {
                    let c = check_identity::<i128>(identity, n)?;
                    Ok(Record {
                        n,
                        brute: c.lhs,
                        formula: Some(c.rhs),
                        status: Status::asserted(c.holds),
                    })
                })
                .collect::<Result<_>>()?;
            Ok(VerificationReport::new(
                format!("identity:{identity}"),
                records,
                started,
            ))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Table,
    Decompositions,
    Lemmas,
    Wilf,
    Lrmax,
    Prefix,
    Identities,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "table",
        "decompositions",
        "lemmas",
        "wilf",
        "lrmax",
        "prefix",
        "identities",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::Decompositions => "decompositions",
            Suite::Lemmas => "lemmas",
            Suite::Wilf => "wilf",
            Suite::Lrmax => "lrmax",
            Suite::Prefix => "prefix",
            Suite::Identities => "identities",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = [
            Suite::Table,
            Suite::Decompositions,
            Suite::Lemmas,
            Suite::Wilf,
            Suite::Lrmax,
            Suite::Prefix,
            Suite::Identities,
            Suite::All,
        ];
        all.into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse {
                token: s.to_string(),
                reason: format!("unknown suite; expected one of {}", Suite::NAMES.join(", ")),
            })
    }
}

/// Runs a suite. `max_n` bounds the combinatorial suites; `identity_max`
/// bounds the identity suite.
pub fn run_suite(
    suite: Suite,
    max_n: usize,
    identity_max: u32,
    cfg: &VerifyConfig,
) -> Result<Vec<VerificationReport>> {
    Ok(match suite {
        Suite::Table => verify_table(max_n, cfg)?,
        Suite::Decompositions => verify_decompositions(max_n, cfg)?,
        Suite::Lemmas => verify_lemmas(max_n, cfg)?,
        Suite::Wilf => vec![verify_wilf_complement(max_n, cfg)?],
        Suite::Lrmax => vec![verify_lrmax_bijection(max_n, cfg)?],
        Suite::Prefix => verify_prefix_claims(max_n, cfg)?,
        Suite::Identities => verify_identities(identity_max)?,
        Suite::All => {
            let mut all = Vec::new();
            for suite in [
                Suite::Table,
                Suite::Decompositions,
                Suite::Lemmas,
                Suite::Wilf,
                Suite::Lrmax,
                Suite::Prefix,
                Suite::Identities,
            ] {
                all.extend(run_suite(suite, max_n, identity_max, cfg)?);
            }
            all
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> VerifyConfig {
        VerifyConfig::default()
    }

    fn row(patterns: &str) -> SequenceRow {
        *KNOWN_ROWS.iter().find(|r| r.patterns == patterns).unwrap()
    }

    fn values(report: &VerificationReport, from: u32) -> Vec<i128> {
        report
            .records
            .iter()
            .filter(|r| r.n >= from)
            .map(|r| r.brute)
            .collect()
    }

    #[test]
    fn table_examples() {
        let r = verify_row(&row("321,2134"), 8, &cfg()).unwrap();
        assert!(r.pass);
        assert_eq!(values(&r, 2), vec![2, 4, 8, 14, 22, 32, 44]);
        let r = verify_row(&row("321,132"), 8, &cfg()).unwrap();
        assert_eq!(values(&r, 1), (1..=8).collect::<Vec<_>>());
        let r = verify_row(&row("321,31524"), 8, &cfg()).unwrap();
        assert_eq!(values(&r, 1), vec![1, 2, 4, 9, 21, 50, 120, 289]);
    }

    #[test]
    fn below_range_records_are_informational() {
        let r = verify_row(&row("321,1423,3124"), 6, &cfg()).unwrap();
        assert!(r.pass);
        assert_eq!(r.records[3].status, Status::OutOfStatedRange);
        assert_eq!(r.records[3].brute, 4);
        assert_eq!(r.records[3].formula, Some(5));
        assert_eq!(r.records[4].status, Status::Match);
        let pow = verify_row(&row("321,3142"), 2, &cfg()).unwrap();
        assert_eq!(pow.records[0].formula, None);
    }

    #[test]
    fn decomposition_examples() {
        let find = |p: &str, pos| {
            *DECOMPOSITIONS
                .iter()
                .find(|d| d.patterns == p && d.position == pos)
                .unwrap()
        };
        let at = |d: DecompositionRow, n: u32| {
            let r = verify_decomposition(&d, n as usize, &cfg()).unwrap();
            let rec = r.records.iter().find(|r| r.n == n).unwrap().clone();
            assert_eq!(rec.status, Status::Match);
            rec.brute
        };
        assert_eq!(at(find("321,1243", OnePosition::Second), 5), 10);
        assert_eq!(at(find("321,2134", OnePosition::Second), 4), 4);
        assert_eq!(at(find("321,31452", OnePosition::Second), 6), 29);
    }

    #[test]
    fn lemma_examples() {
        let r = verify_position_of_one(7, &cfg()).unwrap();
        assert!(r.pass);
        let r = verify_reduction("312", 6, &cfg()).unwrap();
        assert!(r.pass);
        assert_eq!(r.records[6].brute, 13);
        let r = verify_reduction("3142", 5, &cfg()).unwrap();
        assert_eq!(r.records[5].brute, 16);
    }

    #[test]
    fn wilf_and_lrmax_examples() {
        let r = verify_wilf_complement(6, &cfg()).unwrap();
        assert!(r.pass);
        assert_eq!(r.records[5].brute, 5);
        assert_eq!(r.records[1].brute, 1);
        let r = verify_lrmax_bijection(4, &cfg()).unwrap();
        assert!(r.pass);
        assert_eq!(r.records[3].brute, 8);
    }

    #[test]
    fn prefix_examples() {
        let reports = verify_prefix_claims(7, &cfg()).unwrap();
        let k3 = reports
            .iter()
            .find(|r| r.id.starts_with("prefix:31"))
            .unwrap();
        assert_eq!(k3.records.last().unwrap().brute, 10);
        let k4 = reports
            .iter()
            .find(|r| r.id.starts_with("prefix:41"))
            .unwrap();
        assert_eq!(k4.records.iter().find(|r| r.n == 6).unwrap().brute, 4);
        assert!(reports.iter().all(|r| r.pass));
    }

    #[test]
    fn delimited_rendering() {
        let report = VerificationReport::new(
            "demo",
            vec![
                Record {
                    n: 1,
                    brute: 1,
                    formula: None,
                    status: Status::OutOfStatedRange,
                },
                Record {
                    n: 2,
                    brute: 2,
                    formula: Some(2),
                    status: Status::Match,
                },
            ],
            Instant::now(),
        );
        assert_eq!(
            report.to_delimited(),
            "demo\t1\t1\t-\tout-of-stated-range\ndemo\t2\t2\t2\tmatch\ndemo\tPASS\n"
        );
    }

    #[test]
    fn mismatches_fail_reports() {
        let report = VerificationReport::new(
            "demo",
            vec![Record {
                n: 3,
                brute: 2,
                formula: Some(3),
                status: Status::Mismatch,
            }],
            Instant::now(),
        );
        assert!(!report.pass);
        assert!(report.to_delimited().ends_with("demo\tFAIL\n"));
    }

    #[test]
    fn capacity_errors_propagate() {
        assert!(matches!(
            verify_table(15, &cfg()),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            verify_lemmas(11, &cfg()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn identities_run_to_their_cap() {
        let reports = verify_identities(MAX_IDENTITY_N).unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(|r| r.pass));
        assert_eq!(reports[3].records[0].n, 3);
        assert!(verify_identities(MAX_IDENTITY_N + 1).is_err());
    }

    #[test]
    fn suite_names_parse() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
