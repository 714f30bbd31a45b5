//! Side-circle relocation moves that consume a monovacancy and shorten the
//! rectangle. Widths after a move involve nested radicals, so everything
//! here is floating point.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::SQRT_3;
use crate::packclass::{ClassConfig, RowPattern};
use crate::search::SearchResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    /// Move the side circle into the hole and slide its neighbours along
    /// the side; shortens the width by `2 − √(2√3)`.
    OddHSideRelocation,
    /// Five-row variant with both outer rows short.
    H5ShortOuterRelocation,
    None,
}

impl Move {
    pub fn delta(self) -> f64 {
        match self {
            Move::OddHSideRelocation => delta_side_relocation(),
            Move::H5ShortOuterRelocation => delta_h5_relocation(),
            Move::None => 0.0,
        }
    }
}

/// `2 − √(2√3)` ≈ 0.13879.
pub fn delta_side_relocation() -> f64 {
    2.0 - (2.0 * SQRT_3).sqrt()
}

/// `2 − √3/2 − 3^{1/4}(2√3 − 1) / (2√(4 − √3))` ≈ 0.05728.
pub fn delta_h5_relocation() -> f64 {
    2.0 - 0.5 * SQRT_3 - 3f64.powf(0.25) * (2.0 * SQRT_3 - 1.0) / (2.0 * (4.0 - SQRT_3).sqrt())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImprovementReport {
    pub config: ClassConfig,
    #[serde(rename = "move")]
    pub kind: Move,
    pub delta: f64,
    pub new_width: f64,
    pub new_area: f64,
    pub new_density: f64,
    /// Relocated packings may leave circles free to rattle.
    pub rattler_note: bool,
    /// Holes left unused; only one relocation is applied.
    pub remaining_holes: u32,
}

/// Which relocation applies to a holed config.
///
/// Odd `h` with a full pattern, and three-row blocks, use the side
/// relocation. Five-row blocks with short rows use the short-outer variant
/// (the short-offset hole-bearing form is equivalent in area and count).
/// No construction is known here for even `h` or longer short blocks.
pub fn applicable_move(c: &ClassConfig) -> Result<Move> {
    c.validate()?;
    if c.d == 0 {
        return Err(Error::NotImprovable { config: c.to_string(), reason: "no monovacancy".into() });
    }
    let m = match (c.h % 2, c.h, c.pattern) {
        (0, _, _) => Move::None,
        (_, _, RowPattern::Full) => Move::OddHSideRelocation,
        (_, 3, _) => Move::OddHSideRelocation,
        (_, 5, _) => Move::H5ShortOuterRelocation,
        _ => Move::None,
    };
    Ok(m)
}

pub fn improved_metrics(c: &ClassConfig) -> Result<ImprovementReport> {
    let kind = applicable_move(c)?;
    if kind == Move::None {
        let reason = if c.h.is_multiple_of(2) {
            "no relocation is known for even h"
        } else {
            "no relocation is known for this short-row block"
        };
        return Err(Error::NotImprovable { config: c.to_string(), reason: reason.into() });
    }
    let delta = kind.delta();
    let new_width = c.width_units() as f64 - delta;
    let new_area = new_width * c.height().to_f64();
    Ok(ImprovementReport {
        config: *c,
        kind,
        delta,
        new_width,
        new_area,
        new_density: c.circle_count() as f64 * PI / new_area,
        rattler_note: true,
        remaining_holes: c.d - 1,
    })
}

/// Best available improvement over the holed optima of a search result.
pub fn improvement_for(result: &SearchResult) -> Option<ImprovementReport> {
    result
        .argmin
        .iter()
        .filter(|c| c.d > 0)
        .filter_map(|c| improved_metrics(c).ok())
        .max_by(|a, b| a.new_density.total_cmp(&b.new_density))
}
