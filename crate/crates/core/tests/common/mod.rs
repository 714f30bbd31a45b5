//! Naive class enumerator shared by the oracle and acceptance targets. It
//! shares none of the search's loop bounds or area arithmetic.

use std::collections::BTreeSet;

use rectpack::{ClassConfig, RowPattern};

/// `(p, q)` for `p + q√3`.
pub type Exact = (i64, i64);

fn naive_h_minus(h: u32, pattern: RowPattern) -> u32 {
    match pattern {
        RowPattern::Full => 0,
        RowPattern::ShortOffset => h / 2,
        RowPattern::ShortOuter => h / 2 + 1,
    }
}

pub fn naive_area(c: &ClassConfig) -> Exact {
    let (w, h, s) = (c.w as i64, c.h as i64, c.s as i64);
    if h == 0 {
        return (2 * w * 2 * s, 0);
    }
    let width = if c.pattern == RowPattern::Full { 2 * w + 1 } else { 2 * w };
    (width * (2 + 2 * s), width * (h - 1))
}

/// Sign of `a − b` by squaring, independent of `QuadInt`.
pub fn cmp_exact(a: Exact, b: Exact) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    let (p, q) = ((a.0 - b.0) as i128, (a.1 - b.1) as i128);
    let sign = |x: i128| x.cmp(&0);
    match (sign(p), sign(q)) {
        (Equal, s) | (s, Equal) => s,
        (s, t) if s == t => s,
        // opposite signs: compare p² with 3q²
        (s, _) => {
            if p * p > 3 * q * q {
                s
            } else {
                s.reverse()
            }
        }
    }
}

pub fn naive_members(n: u64, d_max: u32) -> Vec<ClassConfig> {
    let n32 = n as u32;
    let mut out = Vec::new();
    for w in 1..=n32 {
        for h in std::iter::once(0).chain(2..=n32) {
            for pattern in RowPattern::ALL {
                for s in 0..=n32 {
                    // every row but at most one site per row is occupied
                    if (w as u64 - 1) * (h + s) as u64 > n + d_max as u64 {
                        break;
                    }
                    for s_minus in 0..=s {
                        for d in 0..=d_max {
                            let sites = w as i64 * (h + s) as i64 - naive_h_minus(h, pattern) as i64 - s_minus as i64;
                            if sites - d as i64 != n as i64 {
                                continue;
                            }
                            // square grids only in their wide orientation
                            if h == 0 && s > w {
                                continue;
                            }
                            let c = ClassConfig::new(w, h, pattern, s, s_minus, d);
                            if c.is_valid() {
                                out.push(c);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn naive_best(n: u64, d_max: u32) -> (Exact, BTreeSet<String>) {
    let members = naive_members(n, d_max);
    let min = members.iter().map(naive_area).min_by(|a, b| cmp_exact(*a, *b)).expect("row exists");
    let argmin = members
        .iter()
        .filter(|c| cmp_exact(naive_area(c), min).is_eq())
        .map(|c| c.to_string())
        .collect();
    (min, argmin)
}
