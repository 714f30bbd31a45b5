//! Minimum-area rectangles for `n` congruent circles.
//!
//! The engine searches a class of square-grid, hexagonal and hybrid row
//! packings with optional monovacancies, comparing areas exactly in
//! `Z[√3]`. Around the search sit the relocation moves that beat holed
//! optima, closed-form asymptotics, a stochastic wall-pressing compactor
//! and SVG/CSV output.

pub mod compactor;
pub mod error;
pub mod exactmath;
pub mod improve;
pub mod packclass;
pub mod par;
pub mod render;
pub mod results;
pub mod search;
pub mod tables;
pub mod theory;

pub use error::{Error, Result};
pub use exactmath::QuadInt;
pub use packclass::{ClassConfig, PackingRealization, RowPattern};
pub use par::Execution;
pub use search::{best, Classification, SearchResult, DEFAULT_D_MAX};
