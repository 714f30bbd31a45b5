use std::f64::consts::PI;

use proptest::prelude::*;
use rectpack::compactor::{best_of, compact, random_start, CompactorParams, Termination, FEASIBILITY_TOL};
use rectpack::{Error, Execution};

#[test]
fn identical_params_reproduce_bit_for_bit() {
    let p = CompactorParams::new(10, 3);
    let (a, b) = (compact(&p).unwrap(), compact(&p).unwrap());
    assert_eq!(a.trace_csv(), b.trace_csv());
    assert_eq!(a, b);
    let other = compact(&CompactorParams::new(10, 4)).unwrap();
    assert_ne!(a.trace_csv(), other.trace_csv());
}

#[test]
fn accepted_states_are_feasible_and_densify() {
    for seed in 0..5 {
        let run = compact(&CompactorParams::new(9, seed)).unwrap();
        run.realization.validate(FEASIBILITY_TOL).unwrap();
        assert_eq!(run.realization.centers.len(), 9);
        assert_eq!(run.trace.len(), run.moves_accepted + 1);
        assert!(run.trace.windows(2).all(|w| w[1].density >= w[0].density && w[1].move_index > w[0].move_index));
        assert!(run.moves_accepted <= run.proposals);
        assert!((run.trace.last().unwrap().density - run.density).abs() < 1e-15);
    }
}

#[test]
fn two_circles_fill_a_two_by_four_box() {
    let b = best_of(2, 10, &CompactorParams::new(2, 0), Execution::Serial).unwrap();
    assert!((b.max_density - PI / 4.0).abs() < 1e-3);
    let r = &b.best.realization;
    let (lo, hi) = (r.width.min(r.height), r.width.max(r.height));
    assert!((lo - 2.0).abs() < 1e-3 && (hi - 4.0).abs() < 1e-3, "{lo} x {hi}");
}

#[test]
fn four_circles_within_two_percent() {
    let b = best_of(4, 50, &CompactorParams::new(4, 0), Execution::Parallel).unwrap();
    assert!(b.gap <= 0.02, "gap {}", b.gap);
    assert!(!b.anomaly);
}

#[test]
fn eleven_circles_find_the_three_row_block() {
    let template = CompactorParams { max_moves: 1000, ..CompactorParams::new(11, 0) };
    let b = best_of(11, 50, &template, Execution::Parallel).unwrap();
    assert!(!b.anomaly);
    if b.gap < 0.01 {
        let r = &b.best.realization;
        let aspect = r.width.min(r.height) / r.width.max(r.height);
        let target = (2.0 + 2.0 * 3f64.sqrt()) / 8.0;
        assert!((aspect - target).abs() < 0.02, "aspect {aspect}");
    }
}

#[test]
fn twenty_five_circles_best_of_one_hundred() {
    // short move budget: long runs are slow crawls near jamming
    let template = CompactorParams { max_moves: 150, ..CompactorParams::new(25, 0) };
    let b = best_of(25, 100, &template, Execution::Parallel).unwrap();
    assert!(b.max_density >= 0.80, "best {}", b.max_density);
    assert!(!b.anomaly);
}

#[test]
fn best_of_is_execution_independent() {
    let p = CompactorParams::new(6, 100);
    let a = best_of(6, 8, &p, Execution::Serial).unwrap();
    let b = best_of(6, 8, &p, Execution::Parallel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn best_of_reports_lowest_seed_among_ties() {
    // one circle always jams in the same 2 × 2 box up to rounding
    let b = best_of(1, 6, &CompactorParams::new(1, 20), Execution::Serial).unwrap();
    assert!(b.best.seed >= 20 && b.best.seed < 26);
    assert_eq!(b.best.terminated, Termination::StepFloor);
}

#[test]
fn errors() {
    assert!(matches!(
        best_of(3, 0, &CompactorParams::new(3, 1), Execution::Serial),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(random_start(30, 1, 1.0001), Err(Error::PlacementFailed { .. })));
    let bad = [
        CompactorParams { slack: 1.0, ..CompactorParams::new(3, 1) },
        CompactorParams { shrink_step: 1.5, ..CompactorParams::new(3, 1) },
        CompactorParams { step_floor: 0.5, ..CompactorParams::new(3, 1) },
        CompactorParams::new(0, 1),
    ];
    for p in bad {
        assert!(compact(&p).is_err(), "{p:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_starts_are_sparse_and_valid(n in 1u64..40, seed in any::<u64>(), slack in 2.0f64..5.0) {
        let r = random_start(n, seed, slack).unwrap();
        prop_assert_eq!(r.centers.len() as u64, n);
        r.validate(0.0).unwrap();
        prop_assert!(r.width >= 2.0 && r.height >= 2.0);
        let class = rectpack::best(n, 5).min_area.to_f64();
        prop_assert!((r.width * r.height - slack * class).abs() < 1e-9 * slack * class || r.height == 2.0);
    }

    #[test]
    fn runs_stay_feasible(n in 1u64..8, seed in 0u64..1000) {
        let run = compact(&CompactorParams { max_moves: 400, ..CompactorParams::new(n, seed) }).unwrap();
        run.realization.validate(FEASIBILITY_TOL).unwrap();
        prop_assert!(run.density <= rectpack::best(n, 5).density() + 1e-6);
    }
}

#[test]
fn thin_strip_start_recovers_from_blocked_fill() {
    let r = random_start(4, 5872694164571959840, 2.0).unwrap();
    assert_eq!(r.centers.len(), 4);
    r.validate(0.0).unwrap();
}
