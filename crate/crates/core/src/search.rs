//! Exhaustive minimum-area search over the class, with exact tie sets.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::exactmath::QuadInt;
use crate::packclass::{ClassConfig, RowPattern};
use crate::par::{map_range, Execution};

/// Default monovacancy limit. Nothing up to n = 5000 needs more than five.
pub const DEFAULT_D_MAX: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    /// No optimal config has a hole.
    #[serde(rename = "regular")]
    Regular,
    /// Optimal configs exist both with and without holes.
    #[serde(rename = "may_hole")]
    MayHaveHole,
    /// Every optimal config has a hole.
    #[serde(rename = "must_hole")]
    MustHaveHole,
}

impl Classification {
    pub fn is_regular(self) -> bool {
        self == Classification::Regular
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Regular => "regular",
            Classification::MayHaveHole => "may_hole",
            Classification::MustHaveHole => "must_hole",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub n: u64,
    pub min_area: QuadInt,
    /// Every config attaining `min_area`, in canonical sort order.
    pub argmin: Vec<ClassConfig>,
    pub classification: Classification,
    pub min_d: u32,
    /// Distinct `(width, height)` pairs among `argmin`.
    pub shape_count: usize,
}

impl SearchResult {
    pub fn from_argmin(n: u64, min_area: QuadInt, mut argmin: Vec<ClassConfig>) -> Self {
        assert!(!argmin.is_empty(), "argmin must be nonempty");
        argmin.sort_by_key(sort_key);
        argmin.dedup();
        let holed = argmin.iter().filter(|c| c.d > 0).count();
        let classification = if holed == 0 {
            Classification::Regular
        } else if holed == argmin.len() {
            Classification::MustHaveHole
        } else {
            Classification::MayHaveHole
        };
        let min_d = argmin.iter().map(|c| c.d).min().unwrap_or(0);
        let shape_count = argmin
            .iter()
            .map(|c| (c.width_units(), c.height()))
            .collect::<BTreeSet<_>>()
            .len();
        SearchResult { n, min_area, argmin, classification, min_d, shape_count }
    }

    /// Representative optimum: the first config in canonical order.
    pub fn primary(&self) -> &ClassConfig {
        &self.argmin[0]
    }

    pub fn density(&self) -> f64 {
        self.n as f64 * std::f64::consts::PI / self.min_area.to_f64()
    }

    pub fn contains(&self, c: &ClassConfig) -> bool {
        self.argmin.contains(c)
    }
}

fn sort_key(c: &ClassConfig) -> (u32, RowPattern, u32, u32, u32, u32, u32) {
    (c.width_units(), c.pattern, c.s, c.d, c.w, c.h, c.s_minus)
}

fn pattern_allowed(w: u32, h: u32, pattern: RowPattern) -> bool {
    match pattern {
        RowPattern::Full => true,
        RowPattern::ShortOffset => w >= 2,
        RowPattern::ShortOuter => w >= 2 && h % 2 == 1,
    }
}

/// Calls `emit` for every class member with `n_of = n` and at most `d_max`
/// holes. Square grids are generated in their wide orientation only.
///
/// With `smallest_s_only`, each `(w, h, pattern)` stops after its smallest
/// feasible `s`: area grows strictly with `s`, so larger values can never
/// reach the minimum for this `n`.
fn for_each_candidate(n: u64, d_max: u32, smallest_s_only: bool, mut emit: impl FnMut(ClassConfig)) {
    if n == 0 {
        return;
    }
    let n = n as i64;
    for w in 1..=n {
        // Square grids: w × s with s_minus short rows, s ≤ w.
        let mut s = (n + w - 1) / w;
        while s <= w {
            let k = w * s - n;
            let cap = if w >= 2 { s - 1 } else { 0 };
            if k > cap {
                break;
            }
            emit(ClassConfig::new(w as u32, 0, RowPattern::Full, s as u32, k as u32, 0));
            if smallest_s_only {
                break;
            }
            s += 1;
        }

        // Hexagonal blocks, optionally with square rows on top.
        let mut h = 2i64;
        while h <= n {
            if w * h - (h / 2 + 1) - d_max as i64 > n {
                break;
            }
            for pattern in RowPattern::ALL {
                if !pattern_allowed(w as u32, h as u32, pattern) {
                    continue;
                }
                let base_cfg = ClassConfig::hex(w as u32, h as u32, pattern);
                let dcap = if h >= 3 && w >= 3 {
                    (d_max as i64).min(base_cfg.hole_capacity() as i64)
                } else {
                    0
                };
                let base = w * h - pattern.h_minus(h as u32) as i64;
                let s_start = if n > base { (n - base + w - 1) / w } else { 0 };
                let mut s = s_start;
                loop {
                    if s > 0 && pattern == RowPattern::ShortOuter {
                        break;
                    }
                    if h + s > n {
                        break;
                    }
                    let k = base + w * s - n;
                    let scap = if w >= 2 { s } else { 0 };
                    if k > scap + dcap {
                        break;
                    }
                    for s_minus in (k - dcap).max(0)..=k.min(scap) {
                        let d = k - s_minus;
                        emit(ClassConfig::new(
                            w as u32,
                            h as u32,
                            pattern,
                            s as u32,
                            s_minus as u32,
                            d as u32,
                        ));
                    }
                    if smallest_s_only {
                        break;
                    }
                    s += 1;
                }
            }
            h += 1;
        }
    }
}

/// All class members holding exactly `n` circles with at most `d_max` holes.
pub fn enumerate_candidates(n: u64, d_max: u32) -> impl Iterator<Item = ClassConfig> {
    let mut out = Vec::new();
    for_each_candidate(n, d_max, false, |c| out.push(c));
    out.into_iter()
}

/// Minimum-area members of the class for `n` circles.
pub fn best(n: u64, d_max: u32) -> SearchResult {
    assert!(n >= 1, "n must be at least 1");
    let mut min_area: Option<QuadInt> = None;
    let mut argmin = Vec::new();
    for_each_candidate(n, d_max, true, |c| {
        debug_assert!(c.is_valid() && c.circle_count() == n, "{c}");
        let a = c.area();
        match min_area {
            Some(m) if a > m => {}
            Some(m) if a == m => argmin.push(c),
            _ => {
                min_area = Some(a);
                argmin.clear();
                argmin.push(c);
            }
        }
    });
    let min_area = min_area.expect("the single row always exists");
    SearchResult::from_argmin(n, min_area, argmin)
}

pub fn classify(n: u64, d_max: u32) -> Classification {
    best(n, d_max).classification
}

/// `best` for every n in `lo..=hi`, ascending.
pub fn scan(lo: u64, hi: u64, d_max: u32, exec: Execution) -> Vec<SearchResult> {
    assert!(lo >= 1, "n must be at least 1");
    map_range(lo, hi, exec, |n| best(n, d_max))
}

/// Every non-regular n in `lo..=hi`, ascending.
pub fn irregular_scan(lo: u64, hi: u64, d_max: u32, exec: Execution) -> Vec<u64> {
    irregular_of(&scan(lo, hi, d_max, exec))
}

pub fn irregular_of(results: &[SearchResult]) -> Vec<u64> {
    results.iter().filter(|r| !r.classification.is_regular()).map(|r| r.n).collect()
}

pub fn shape_census(lo: u64, hi: u64, exec: Execution) -> BTreeMap<u64, usize> {
    scan(lo, hi, DEFAULT_D_MAX, exec).into_iter().map(|r| (r.n, r.shape_count)).collect()
}

/// First occurrences of notable hole counts in a scan.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Milestones {
    /// Smallest n whose optimum is a holed even-h block with short rows
    /// (`h₋ > 0`); holed even-h blocks with `h₋ = 0` occur earlier.
    pub even_h_hole: Option<Milestone>,
    /// `by_min_d[i]`: smallest n whose optimum needs at least `i + 1` holes.
    pub by_min_d: Vec<Option<Milestone>>,
    /// Largest `min_d` seen anywhere in the scan.
    pub max_min_d: u32,
    pub n_hi: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Milestone {
    pub n: u64,
    pub config: ClassConfig,
}

impl Milestones {
    pub fn from_results(results: &[SearchResult], d_max: u32) -> Self {
        let mut even_h_hole = None;
        let mut by_min_d: Vec<Option<Milestone>> = vec![None; d_max as usize];
        let mut max_min_d = 0;
        let mut n_hi = 0;
        for r in results {
            n_hi = n_hi.max(r.n);
            max_min_d = max_min_d.max(r.min_d);
            if even_h_hole.is_none() {
                if let Some(c) = r.argmin.iter().find(|c| c.d > 0 && c.h % 2 == 0 && c.h_minus() > 0) {
                    even_h_hole = Some(Milestone { n: r.n, config: *c });
                }
            }
            if r.min_d >= 1 {
                let slot = &mut by_min_d[r.min_d as usize - 1];
                if slot.is_none() {
                    let c = r.argmin.iter().find(|c| c.d == r.min_d).expect("min_d attained");
                    *slot = Some(Milestone { n: r.n, config: *c });
                }
            }
        }
        Milestones { even_h_hole, by_min_d, max_min_d, n_hi }
    }

    /// First n needing exactly `d` holes at minimum.
    pub fn first_with_min_d(&self, d: u32) -> Option<&Milestone> {
        self.by_min_d.get(d.checked_sub(1)? as usize)?.as_ref()
    }
}

pub fn milestones(n_hi: u64, d_max: u32, exec: Execution) -> Milestones {
    Milestones::from_results(&scan(1, n_hi, d_max, exec), d_max)
}
