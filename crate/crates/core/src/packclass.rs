//! The candidate class: hexagonal row blocks, square-stacked rows on top,
//! short rows and interior monovacancies.
//!
//! Units are circle radii throughout. A config with `h ≥ 2` has a block of
//! `h` alternating rows spaced `√3` apart, followed by `s` square rows spaced
//! `2` apart. `h = 0` is a plain square grid of `s` rows.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{QuadInt, SQRT_3};

/// Which hexagonal rows are one circle short.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowPattern {
    /// Every row has `w` circles; rows overhang each other by one radius.
    Full,
    /// `⌊h/2⌋` rows are short: the offset rows between full ones.
    ShortOffset,
    /// `⌊h/2⌋ + 1` rows are short, including both outer rows (odd `h`).
    ShortOuter,
}

impl RowPattern {
    pub const ALL: [RowPattern; 3] = [RowPattern::Full, RowPattern::ShortOffset, RowPattern::ShortOuter];

    /// Number of short hexagonal rows for a block of `h` rows.
    pub fn h_minus(self, h: u32) -> u32 {
        match self {
            RowPattern::Full => 0,
            RowPattern::ShortOffset => h / 2,
            RowPattern::ShortOuter => h / 2 + 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RowPattern::Full => "full",
            RowPattern::ShortOffset => "short_offset",
            RowPattern::ShortOuter => "short_outer",
        }
    }
}

/// A member of the candidate class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassConfig {
    /// Circles in the longest row.
    pub w: u32,
    /// Hexagonally alternating rows (0 for a pure square grid).
    pub h: u32,
    pub pattern: RowPattern,
    /// Square-stacked rows.
    pub s: u32,
    /// Square rows holding `w - 1` circles.
    pub s_minus: u32,
    /// Monovacancies.
    pub d: u32,
}

impl fmt::Display for ClassConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(w={}, h={}, {}, s={}, s_minus={}, d={})",
            self.w,
            self.h,
            self.pattern.as_str(),
            self.s,
            self.s_minus,
            self.d
        )
    }
}

/// One horizontal row of lattice sites.
#[derive(Clone, Debug, PartialEq)]
struct Row {
    y: f64,
    x0: f64,
    len: u32,
    hex_index: Option<u32>,
}

impl ClassConfig {
    pub const fn new(w: u32, h: u32, pattern: RowPattern, s: u32, s_minus: u32, d: u32) -> Self {
        ClassConfig { w, h, pattern, s, s_minus, d }
    }

    /// Pure hexagonal block without square rows, short square rows or holes.
    pub const fn hex(w: u32, h: u32, pattern: RowPattern) -> Self {
        Self::new(w, h, pattern, 0, 0, 0)
    }

    /// Square grid of `w × s`.
    pub const fn grid(w: u32, s: u32) -> Self {
        Self::new(w, 0, RowPattern::Full, s, 0, 0)
    }

    pub const fn with_s(mut self, s: u32) -> Self {
        self.s = s;
        self
    }

    pub const fn with_holes(mut self, d: u32) -> Self {
        self.d = d;
        self
    }

    pub fn h_minus(&self) -> u32 {
        self.pattern.h_minus(self.h)
    }

    fn invalid(&self, reason: impl Into<String>) -> Error {
        Error::InvalidConfig { config: self.to_string(), reason: reason.into() }
    }

    pub fn validate(&self) -> Result<()> {
        let c = self;
        if c.w == 0 {
            return Err(c.invalid("w must be at least 1"));
        }
        if c.h == 1 {
            return Err(c.invalid("a single row is written h=0, s=1"));
        }
        if c.s_minus > c.s {
            return Err(c.invalid("s_minus exceeds s"));
        }
        if c.s_minus > 0 && c.w < 2 {
            return Err(c.invalid("short square rows need w >= 2"));
        }
        if c.h == 0 {
            if c.pattern != RowPattern::Full {
                return Err(c.invalid("square grids use the full pattern"));
            }
            if c.s == 0 {
                return Err(c.invalid("square grid needs s >= 1"));
            }
            if c.d > 0 {
                return Err(c.invalid("holes need a hexagonal block"));
            }
            if c.s_minus == c.s {
                return Err(c.invalid("a square grid needs one full row"));
            }
        }
        if c.pattern != RowPattern::Full && c.w < 2 {
            return Err(c.invalid("short rows need w >= 2"));
        }
        if c.pattern == RowPattern::ShortOuter && (c.h.is_multiple_of(2) || c.h < 3) {
            return Err(c.invalid("short outer rows need odd h >= 3"));
        }
        if c.s > 0 && c.h >= 2 && c.pattern == RowPattern::ShortOuter {
            return Err(c.invalid("square rows sit on a full outer hexagonal row"));
        }
        if c.d > 0 {
            if c.h < 3 || c.w < 3 {
                return Err(c.invalid("monovacancies need h >= 3 and w >= 3"));
            }
            if c.d > c.hole_capacity() {
                return Err(c.invalid("more holes than interior sites"));
            }
        }
        if c.lattice_sites() <= c.d as u64 {
            return Err(c.invalid("configuration holds no circles"));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    fn lattice_sites(&self) -> u64 {
        let rows = (self.h + self.s) as u64;
        (self.w as u64) * rows - self.h_minus() as u64 - self.s_minus as u64
    }

    /// `n = w(h + s) − h₋ − s₋ − d`, without validation.
    pub fn circle_count(&self) -> u64 {
        self.lattice_sites() - self.d as u64
    }

    /// Number of circles; rejects invalid configs.
    pub fn n_of(&self) -> Result<u64> {
        self.validate()?;
        Ok(self.circle_count())
    }

    /// Rectangle width in radii.
    pub fn width_units(&self) -> u32 {
        if self.h >= 2 && self.pattern == RowPattern::Full {
            2 * self.w + 1
        } else {
            2 * self.w
        }
    }

    /// Rectangle height: `(2 + 2s) + (h − 1)√3`, or `2s` for a square grid.
    pub fn height(&self) -> QuadInt {
        if self.h == 0 {
            QuadInt::integer(2 * self.s as i64)
        } else {
            QuadInt::new(2 + 2 * self.s as i64, self.h as i64 - 1)
        }
    }

    pub fn area(&self) -> QuadInt {
        self.height().mul_scalar(self.width_units() as i64)
    }

    pub fn density(&self) -> f64 {
        self.circle_count() as f64 * PI / self.area().to_f64()
    }

    /// Height over width, folded into `(0, 1]`.
    pub fn aspect_ratio(&self) -> f64 {
        let r = self.height().to_f64() / self.width_units() as f64;
        if r > 1.0 {
            1.0 / r
        } else {
            r
        }
    }

    /// Interior hexagonal sites available for monovacancies: sites off the
    /// outer hexagonal rows and off the row ends.
    pub fn hole_capacity(&self) -> u32 {
        if self.h < 3 {
            return 0;
        }
        let outer_full = self.hex_row_is_full(0) as u32 + self.hex_row_is_full(self.h - 1) as u32;
        let inner_full = self.h - self.h_minus() - outer_full;
        let inner_short = self.h - 2 - inner_full;
        inner_full * self.w.saturating_sub(2) + inner_short * self.w.saturating_sub(3)
    }

    fn hex_row_is_full(&self, k: u32) -> bool {
        match self.pattern {
            RowPattern::Full => true,
            RowPattern::ShortOffset => {
                if self.h % 2 == 1 {
                    k.is_multiple_of(2)
                } else {
                    // top row full so square rows can sit on it
                    (self.h - 1 - k).is_multiple_of(2)
                }
            }
            RowPattern::ShortOuter => k % 2 == 1,
        }
    }

    fn hex_row_len(&self, k: u32) -> u32 {
        if self.hex_row_is_full(k) {
            self.w
        } else {
            self.w - 1
        }
    }

    fn hex_row_x0(&self, k: u32) -> f64 {
        match self.pattern {
            RowPattern::Full => {
                if k.is_multiple_of(2) {
                    1.0
                } else {
                    2.0
                }
            }
            _ => {
                if self.hex_row_is_full(k) {
                    1.0
                } else {
                    2.0
                }
            }
        }
    }

    fn rows(&self) -> Vec<Row> {
        let mut rows = Vec::with_capacity((self.h + self.s) as usize);
        let square_len = |j: u32| {
            if j >= self.s - self.s_minus {
                self.w - 1
            } else {
                self.w
            }
        };
        if self.h == 0 {
            for j in 0..self.s {
                rows.push(Row { y: 1.0 + 2.0 * j as f64, x0: 1.0, len: square_len(j), hex_index: None });
            }
            return rows;
        }
        for k in 0..self.h {
            rows.push(Row {
                y: 1.0 + k as f64 * SQRT_3,
                x0: self.hex_row_x0(k),
                len: self.hex_row_len(k),
                hex_index: Some(k),
            });
        }
        let top_y = 1.0 + (self.h - 1) as f64 * SQRT_3;
        let top_x0 = self.hex_row_x0(self.h - 1);
        for j in 0..self.s {
            rows.push(Row { y: top_y + 2.0 * (j + 1) as f64, x0: top_x0, len: square_len(j), hex_index: None });
        }
        rows
    }

    /// Canonical hole sites as `(hex row, index in row)`: middle row first,
    /// leftmost interior site first.
    fn hole_sites(&self) -> Vec<(u32, u32)> {
        if self.d == 0 {
            return Vec::new();
        }
        let mid2 = self.h as i64 - 1; // twice the middle row index
        let mut interior: Vec<u32> = (1..self.h - 1).collect();
        interior.sort_by_key(|&k| ((2 * k as i64 - mid2).abs(), k));
        let mut sites = Vec::with_capacity(self.d as usize);
        for k in interior {
            for i in 1..self.hex_row_len(k).saturating_sub(1) {
                if sites.len() == self.d as usize {
                    return sites;
                }
                sites.push((k, i));
            }
        }
        sites
    }

    /// Explicit circle centers for this config.
    pub fn coordinates(&self) -> Result<PackingRealization> {
        self.validate()?;
        let holes = self.hole_sites();
        let mut centers = Vec::with_capacity(self.circle_count() as usize);
        let mut hole_points = Vec::with_capacity(holes.len());
        for row in self.rows() {
            for i in 0..row.len {
                let pt = (row.x0 + 2.0 * i as f64, row.y);
                match row.hex_index {
                    Some(k) if holes.contains(&(k, i)) => hole_points.push(pt),
                    _ => centers.push(pt),
                }
            }
        }
        Ok(PackingRealization {
            centers,
            width: self.width_units() as f64,
            height: self.height().to_f64(),
            radius: 1.0,
            holes: hole_points,
        })
    }
}

/// The two equal-area packings for `n = 15 + 4k`: a two-row hexagonal
/// block and a three-row block with one square row on top.
pub fn hybrid_pair(k: u32) -> (ClassConfig, ClassConfig) {
    (
        ClassConfig::hex(8 + 2 * k, 2, RowPattern::ShortOffset),
        ClassConfig::hex(4 + k, 3, RowPattern::ShortOffset).with_s(1),
    )
}

/// Circle centers in a rectangle `[0, width] × [0, height]`, radius 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PackingRealization {
    pub centers: Vec<(f64, f64)>,
    pub width: f64,
    pub height: f64,
    pub radius: f64,
    /// Lattice sites deliberately left empty.
    #[serde(default)]
    pub holes: Vec<(f64, f64)>,
}

impl PackingRealization {
    pub fn density(&self) -> f64 {
        self.centers.len() as f64 * PI * self.radius * self.radius / (self.width * self.height)
    }

    /// Largest containment or overlap violation, in radii.
    pub fn max_violation(&self) -> f64 {
        let r = self.radius;
        let mut worst: f64 = 0.0;
        for &(x, y) in &self.centers {
            worst = worst.max(r - x).max(r - y).max(x + r - self.width).max(y + r - self.height);
        }
        let min_sq = 4.0 * r * r;
        for (i, &(xi, yi)) in self.centers.iter().enumerate() {
            for &(xj, yj) in &self.centers[i + 1..] {
                let d2 = (xi - xj).powi(2) + (yi - yj).powi(2);
                if d2 < min_sq {
                    worst = worst.max(2.0 * r - d2.sqrt());
                }
            }
        }
        worst
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        if !(self.width.is_finite() && self.height.is_finite()) || self.width <= 0.0 || self.height <= 0.0 {
            return Err(Error::InvalidRealization("non-positive rectangle".into()));
        }
        if self.centers.iter().any(|&(x, y)| !x.is_finite() || !y.is_finite()) {
            return Err(Error::InvalidRealization("non-finite center".into()));
        }
        let v = self.max_violation();
        if v > tol {
            return Err(Error::InvalidRealization(format!("violation {v:e} exceeds {tol:e}")));
        }
        Ok(())
    }
}
