use std::f64::consts::PI;

use proptest::prelude::*;
use rectpack::results::{read_jsonl, write_jsonl};
use rectpack::search::{best, scan};
use rectpack::{ClassConfig, Execution, QuadInt, RowPattern, SearchResult};

fn scan_2000() -> &'static [SearchResult] {
    use std::sync::OnceLock;
    static SCAN: OnceLock<Vec<SearchResult>> = OnceLock::new();
    SCAN.get_or_init(|| scan(1, 2000, 5, Execution::Parallel))
}

fn check_realization(c: &ClassConfig) {
    let r = c.coordinates().unwrap();
    assert_eq!(r.centers.len() as u64, c.n_of().unwrap(), "{c}");
    r.validate(1e-12).unwrap();
    let fold = |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| r.centers.iter().map(pick).fold(init, f);
    let x_hi = fold(f64::max, f64::MIN, |p| p.0) + 1.0;
    let x_lo = fold(f64::min, f64::MAX, |p| p.0) - 1.0;
    let y_hi = fold(f64::max, f64::MIN, |p| p.1) + 1.0;
    let y_lo = fold(f64::min, f64::MAX, |p| p.1) - 1.0;
    assert!(x_lo.abs() < 1e-12 && y_lo.abs() < 1e-12, "{c}");
    assert!((x_hi - c.width_units() as f64).abs() < 1e-12, "{c}");
    assert!((y_hi - c.height().to_f64()).abs() < 1e-12, "{c}");
    assert_eq!(r.holes.len() as u32, c.d);
}

#[test]
fn optimal_area_never_decreases() {
    for pair in scan_2000().windows(2) {
        assert!(pair[0].min_area <= pair[1].min_area, "n = {}", pair[1].n);
    }
}

#[test]
fn densities_between_square_and_hexagonal() {
    let hex = PI / (2.0 * 3f64.sqrt());
    for r in scan_2000() {
        assert!(r.density() >= PI / 4.0 - 1e-12, "n = {}", r.n);
        assert!(r.density() < hex, "n = {}", r.n);
        assert!(r.min_area <= QuadInt::integer(4 * r.n as i64));
    }
}

#[test]
fn argmin_members_are_consistent() {
    for r in scan_2000() {
        assert!(!r.argmin.is_empty());
        assert!(r.shape_count <= 3, "n = {}", r.n);
        for c in &r.argmin {
            assert_eq!(c.n_of().unwrap(), r.n);
            assert_eq!(c.area(), r.min_area);
            assert_eq!(c.s_minus, 0, "short square row in an optimum at n = {}", r.n);
        }
        assert_eq!(r.classification.is_regular(), r.argmin.iter().all(|c| c.d == 0));
        assert_eq!(Some(r.min_d), r.argmin.iter().map(|c| c.d).min());
    }
}

#[test]
fn optimal_realizations_are_valid() {
    for r in scan_2000().iter().step_by(13) {
        for c in &r.argmin {
            check_realization(c);
        }
    }
}

#[test]
fn serial_and_parallel_scans_agree() {
    let a = scan(1, 400, 5, Execution::Serial);
    let b = scan(1, 400, 5, Execution::Parallel);
    assert_eq!(a, b);
    let (mut ja, mut jb) = (Vec::new(), Vec::new());
    write_jsonl(&a, &mut ja).unwrap();
    write_jsonl(&b, &mut jb).unwrap();
    assert_eq!(ja, jb);
}

fn any_config() -> impl Strategy<Value = ClassConfig> {
    (1u32..=40, prop_oneof![Just(0u32), 2u32..=14], 0usize..3, 0u32..=4, 0u32..=4, 0u32..=5).prop_map(
        |(w, h, p, s, sm, d)| ClassConfig::new(w, h, RowPattern::ALL[p], s, sm.min(s), d),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn realization_matches_config(c in any_config().prop_filter("valid", |c| c.is_valid())) {
        check_realization(&c);
    }

    #[test]
    fn area_is_width_times_height(c in any_config().prop_filter("valid", |c| c.is_valid())) {
        let h = c.height();
        prop_assert_eq!(c.area(), QuadInt::new(h.p * c.width_units() as i64, h.q * c.width_units() as i64));
        prop_assert!(c.density() > 0.0 && c.density() < 1.0);
        let a = c.aspect_ratio();
        prop_assert!(a > 0.0 && a <= 1.0);
    }

    #[test]
    fn star_pairs_are_equivalent(w in 3u32..40, k in 1u32..6, d in 1u32..4) {
        let h = 2 * k + 1;
        let offset = ClassConfig::hex(w, h, RowPattern::ShortOffset).with_holes(d);
        let outer = ClassConfig::hex(w, h, RowPattern::ShortOuter).with_holes(d - 1);
        prop_assume!(offset.is_valid() && outer.is_valid());
        prop_assert_eq!(offset.n_of().unwrap(), outer.n_of().unwrap());
        prop_assert_eq!(offset.area(), outer.area());
    }

    #[test]
    fn config_json_round_trip(c in any_config().prop_filter("valid", |c| c.is_valid())) {
        let text = serde_json::to_string(&c).unwrap();
        let back: ClassConfig = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn best_is_minimal_over_all_members(n in 1u64..400) {
        let r = best(n, 5);
        for c in rectpack::search::enumerate_candidates(n, 5) {
            prop_assert!(c.area() >= r.min_area);
        }
    }

    #[test]
    fn jsonl_round_trip(lo in 1u64..3000, len in 0u64..20) {
        let results = scan(lo, lo + len, 5, Execution::Serial);
        let mut buf = Vec::new();
        write_jsonl(&results, &mut buf).unwrap();
        prop_assert_eq!(read_jsonl(buf.as_slice()).unwrap(), results);
    }
}
