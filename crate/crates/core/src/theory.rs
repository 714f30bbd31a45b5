//! Closed-form results: the two-row versus square-grid threshold, the
//! side-waste model behind the limiting aspect ratio, and the convergent
//! family of circle counts whose optimum is a full hexagonal block.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{QuadInt, SQRT_3};
use crate::packclass::{ClassConfig, RowPattern};
use crate::search::{self, Classification};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// `n = 2m + 1`: rows of `m + 1` and `m`.
    Odd,
    /// `n = 2m`: two rows of `m`.
    Even,
}

/// Whether the two-row hexagonal packing for `n = 2m + 1` (odd) or `n = 2m`
/// (even) has strictly smaller area than the single-row square grid.
pub fn two_row_beats_square(m: u64, parity: Parity) -> bool {
    let m = m as i64;
    let row_height = QuadInt::new(2, 1);
    let (hex, square) = match parity {
        Parity::Odd => (row_height.mul_scalar(2 * (m + 1)), QuadInt::integer(4 * (2 * m + 1))),
        Parity::Even => (row_height.mul_scalar(2 * m + 1), QuadInt::integer(8 * m)),
    };
    hex < square
}

/// Smallest `m` for which both two-row inequalities hold.
pub fn smallest_two_row_m() -> u64 {
    (1..)
        .find(|&m| two_row_beats_square(m, Parity::Odd) && two_row_beats_square(m, Parity::Even))
        .expect("inequalities hold for large m")
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WasteConstants {
    /// Uncovered curved triangle between three touching circles.
    pub s_triangle: f64,
    /// Extra waste per unit length along the top and bottom sides.
    pub a: f64,
    /// Extra waste per unit length along the left and right sides.
    pub b: f64,
    pub limit_ratio: f64,
}

/// `x + y·π/2` with `x` in `Z[√3]`, enough to carry the waste bookkeeping
/// exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct WithHalfPi {
    base: QuadInt,
    half_pi: i64,
}

impl WithHalfPi {
    fn sub(self, o: Self) -> Self {
        WithHalfPi { base: self.base - o.base, half_pi: self.half_pi - o.half_pi }
    }
    fn add(self, o: Self) -> Self {
        WithHalfPi { base: self.base + o.base, half_pi: self.half_pi + o.half_pi }
    }
}

/// `a/b = 2 − √3`, derived without rounding.
///
/// With `s = √3 − π/2`: `2a = 2 − π/2 − s` and `2√3·b = π/2 + s`. The π
/// terms cancel in both, and `a/b = (2a)(2√3) / (2·(2√3·b))`.
pub fn limit_ratio_exact() -> QuadInt {
    let s = WithHalfPi { base: QuadInt::SQRT3, half_pi: -1 };
    let two_a = WithHalfPi { base: QuadInt::integer(2), half_pi: -1 }.sub(s);
    let b_times_2sqrt3 = WithHalfPi { base: QuadInt::ZERO, half_pi: 1 }.add(s);
    assert_eq!((two_a.half_pi, b_times_2sqrt3.half_pi), (0, 0), "π must cancel");
    let numer = two_a.base * QuadInt::new(0, 2);
    let denom = b_times_2sqrt3.base.mul_scalar(2);
    // denom is a rational multiple of √3 here: divide coefficientwise.
    assert!(denom.p == 0 && denom.q != 0);
    // (p + q√3) / (k√3) = q/k + (p/(3k))√3
    let k = denom.q;
    assert!(numer.q % k == 0 && numer.p % (3 * k) == 0, "ratio must be integral");
    QuadInt::new(numer.q / k, numer.p / (3 * k))
}

pub fn waste_constants() -> WasteConstants {
    let s_triangle = SQRT_3 - PI / 2.0;
    let a = (2.0 - PI / 2.0 - s_triangle) / 2.0;
    let b = (PI / 2.0 + s_triangle) / (2.0 * SQRT_3);
    WasteConstants { s_triangle, a, b, limit_ratio: a / b }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ReferenceDensities {
    pub square: f64,
    pub hex: f64,
}

pub fn reference_densities() -> ReferenceDensities {
    ReferenceDensities { square: PI / 4.0, hex: PI / (2.0 * SQRT_3) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergentEntry {
    pub k: u32,
    pub v_k: u64,
    pub a_k: u64,
    pub b_k: u64,
    pub n_k: u64,
}

/// Entries `k = 1..=k_max` of `v₀ = 0, v₁ = 1, v_{k+2} = 4v_{k+1} − v_k`,
/// `a_k = 2v_{k+1} − v_k`, `b_k = 2v_k`, `N_k = a_k·b_k`.
pub fn convergents(k_max: u32) -> Vec<ConvergentEntry> {
    let mut v = vec![0u64, 1];
    while v.len() < k_max as usize + 2 {
        let len = v.len();
        v.push(4 * v[len - 1] - v[len - 2]);
    }
    (1..=k_max)
        .map(|k| {
            let (vk, vk1) = (v[k as usize], v[k as usize + 1]);
            let a_k = 2 * vk1 - vk;
            let b_k = 2 * vk;
            ConvergentEntry { k, v_k: vk, a_k, b_k, n_k: a_k * b_k }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergentCheck {
    pub entry: ConvergentEntry,
    pub classification: Classification,
    pub expected: ClassConfig,
    pub contains_expected: bool,
    pub argmin: Vec<ClassConfig>,
}

impl ConvergentCheck {
    pub fn holds(&self) -> bool {
        self.classification.is_regular() && self.contains_expected
    }
}

/// Searches `N_k` and checks its optimum is the full `a_k × b_k` block.
/// Only `k ≥ 2` is covered; `N_1 = 14` has a different optimum.
pub fn verify_convergent_regularity(k: u32) -> Result<ConvergentCheck> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k = {k}: the family starts at k = 2")));
    }
    let entry = *convergents(k).last().expect("k >= 1");
    if entry.n_k > 5000 {
        return Err(Error::InvalidParameter(format!("N_{k} = {} exceeds 5000", entry.n_k)));
    }
    let expected = ClassConfig::hex(entry.a_k as u32, entry.b_k as u32, RowPattern::Full);
    let r = search::best(entry.n_k, search::DEFAULT_D_MAX);
    Ok(ConvergentCheck {
        entry,
        classification: r.classification,
        expected,
        contains_expected: r.contains(&expected),
        argmin: r.argmin,
    })
}
