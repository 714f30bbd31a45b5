//! The pruned search against the naive enumerator.

mod common;

use std::collections::BTreeSet;

use common::{cmp_exact, naive_best, naive_members};
use rectpack::search::{best, enumerate_candidates};

#[test]
fn pruned_search_matches_naive_enumeration() {
    for d_max in [0, 5] {
        for n in 1..=60 {
            let r = best(n, d_max);
            let (min, argmin) = naive_best(n, d_max);
            assert_eq!((r.min_area.p, r.min_area.q), min, "n = {n}, d_max = {d_max}");
            let got: BTreeSet<String> = r.argmin.iter().map(|c| c.to_string()).collect();
            assert_eq!(got, argmin, "n = {n}, d_max = {d_max}");
            assert_eq!(r.argmin.len(), argmin.len(), "duplicates in argmin for n = {n}");
        }
    }
}

#[test]
fn full_candidate_stream_matches_naive_enumeration() {
    for n in 1..=40 {
        let got: BTreeSet<String> = enumerate_candidates(n, 3).map(|c| c.to_string()).collect();
        let want: BTreeSet<String> = naive_members(n, 3).iter().map(|c| c.to_string()).collect();
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn exact_comparison_helper_is_sound() {
    use std::cmp::Ordering::*;
    assert_eq!(cmp_exact((2, 0), (0, 1)), Greater);
    assert_eq!(cmp_exact((0, 2), (3, 0)), Greater);
    assert_eq!(cmp_exact((26, 15), (0, 30)), Greater);
    assert_eq!(cmp_exact((25, 15), (0, 30)), Less);
    assert_eq!(cmp_exact((5, 5), (5, 5)), Equal);
}
