//! Deliberately naive reference implementations, sharing no code with the crate.

#![allow(dead_code)]

use itertools::Itertools;

/// Every permutation of `1..=n`, lexicographically.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    (1..=n as u32).permutations(n).collect()
}

fn same_order(a: &[u32], b: &[u32]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] < a[j]) == (b[i] < b[j])))
}

/// Tries every subsequence of the right length.
pub fn contains(text: &[u32], pattern: &[u32]) -> bool {
    (0..text.len()).combinations(pattern.len()).any(|idx| {
        let sub: Vec<u32> = idx.iter().map(|&i| text[i]).collect();
        same_order(&sub, pattern)
    })
}

/// Ascent at `i` with `π_i − 1` somewhere after position `i + 1`.
pub fn contains_fishburn(p: &[u32]) -> bool {
    (0..p.len().saturating_sub(1))
        .any(|i| p[i] < p[i + 1] && (i + 2..p.len()).any(|j| p[j] + 1 == p[i]))
}

pub fn parse_patterns(text: &str) -> Vec<Vec<u32>> {
    text.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.chars().map(|c| c.to_digit(10).unwrap()).collect())
        .collect()
}

pub fn in_class(p: &[u32], patterns: &[Vec<u32>], fishburn: bool) -> bool {
    !(fishburn && contains_fishburn(p)) && patterns.iter().all(|pat| !contains(p, pat))
}

pub fn members(n: usize, patterns: &str, fishburn: bool) -> Vec<Vec<u32>> {
    let pats = parse_patterns(patterns);
    permutations(n)
        .into_iter()
        .filter(|p| in_class(p, &pats, fishburn))
        .collect()
}

pub fn count(n: usize, patterns: &str, fishburn: bool) -> u64 {
    members(n, patterns, fishburn).len() as u64
}

pub fn count_where(n: usize, patterns: &str, fishburn: bool, keep: impl Fn(&[u32]) -> bool) -> u64 {
    members(n, patterns, fishburn)
        .iter()
        .filter(|p| keep(p))
        .count() as u64
}

/// Pell numbers by their recurrence, `P₀ = 0`.
pub fn pell(n: usize) -> i128 {
    let (mut a, mut b) = (0i128, 1i128);
    for _ in 0..n {
        (a, b) = (b, 2 * b + a);
    }
    a
}

/// Fibonacci numbers with `F₀ = F₁ = 1`.
pub fn fib(n: usize) -> i128 {
    let (mut a, mut b) = (1i128, 1i128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

pub fn choose(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
