mod support;

use fishburn_core::enumerate::{count, list_members, AvoidanceQuery, OnePosition, Prefix};
use fishburn_core::sequences::{eval_row, KNOWN_ROWS};
use fishburn_core::verify::DECOMPOSITIONS;
use fishburn_core::PatternSet;

fn kernel_count(n: usize, patterns: &str, fishburn: bool) -> u64 {
    count(&AvoidanceQuery::new(
        n,
        PatternSet::parse(patterns, fishburn).unwrap(),
    ))
    .unwrap()
}

#[test]
fn every_catalogued_class_matches_the_naive_oracle() {
    for row in &KNOWN_ROWS {
        for n in 0..=8 {
            let naive = support::count(n, row.patterns, true);
            assert_eq!(
                kernel_count(n, row.patterns, true),
                naive,
                "{} at {n}",
                row.patterns
            );
            if n as u32 >= row.valid_from {
                let predicted: i128 = eval_row(row, n as u32).unwrap();
                assert_eq!(
                    predicted,
                    i128::from(naive),
                    "{} formula at {n}",
                    row.patterns
                );
            }
        }
    }
}

#[test]
fn member_lists_match_the_naive_oracle() {
    for patterns in ["321,1243", "321,31452", "231", "", "123,3142"] {
        for fishburn in [true, false] {
            for n in 0..=7 {
                let q = AvoidanceQuery::new(n, PatternSet::parse(patterns, fishburn).unwrap());
                let got: Vec<Vec<u32>> = list_members(&q)
                    .unwrap()
                    .iter()
                    .map(|p| p.as_slice().to_vec())
                    .collect();
                assert_eq!(
                    got,
                    support::members(n, patterns, fishburn),
                    "{patterns} {fishburn} {n}"
                );
            }
        }
    }
}

#[test]
fn decompositions_match_the_naive_oracle() {
    for d in &DECOMPOSITIONS {
        let idx = d.position.index();
        for n in d.valid_from.max(1) as usize..=8 {
            let naive = support::count_where(n, d.patterns, true, |p| p.get(idx - 1) == Some(&1));
            let q = AvoidanceQuery::new(n, PatternSet::parse(d.patterns, true).unwrap())
                .with_one_position(d.position);
            assert_eq!(count(&q).unwrap(), naive, "{} at {n}", d.id());
            let predicted: i128 = d.formula.eval(n as u32).unwrap();
            assert_eq!(predicted, i128::from(naive), "{} formula at {n}", d.id());
        }
    }
}

#[test]
fn one_position_filter_matches_the_naive_oracle() {
    for n in 1..=7 {
        for (pos, idx) in [(OnePosition::First, 0), (OnePosition::Second, 1)] {
            let q = AvoidanceQuery::new(n, PatternSet::parse("321", true).unwrap())
                .with_one_position(pos);
            let naive = support::count_where(n, "321", true, |p| p.get(idx) == Some(&1));
            assert_eq!(count(&q).unwrap(), naive);
        }
    }
}

#[test]
fn prefix_counts_match_the_naive_oracle_and_binomials() {
    for n in 4..=8usize {
        for k in 3..n as u32 {
            let naive = support::count_where(n, "321,21354", true, |p| {
                p[0] == k && p[1] == 1 && p[2] != 2
            });
            let q = AvoidanceQuery::new(n, PatternSet::parse("321,21354", true).unwrap())
                .with_prefix(Prefix::excluding_last(vec![k, 1, 2]));
            assert_eq!(count(&q).unwrap(), naive, "k = {k}, n = {n}");
            assert_eq!(
                i128::from(naive),
                support::choose(n as i128 - 2, i128::from(k) - 1)
            );
        }
        let top = support::count_where(n, "321,21354", true, |p| p[0] == n as u32 && p[1] == 1);
        assert_eq!(top, 1);
    }
}

#[test]
fn fishburn_numbers_match_the_naive_oracle() {
    let series = fishburn_core::fishburn_series::<i64>(8).unwrap();
    for n in 0..=8 {
        assert_eq!(
            series.coefficients()[n] as u64,
            support::count(n, "", true),
            "c_{n}"
        );
    }
}
