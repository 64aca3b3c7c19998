//! Exact genus-0 and genus-1 curve counts for Calabi-Yau 5-folds.
//!
//! Gromov-Witten input goes in through a [`Geometry`]; the [`engine`]
//! evaluates meeting numbers and psi-class counts by recursion on degree,
//! and [`genus1`] turns the resulting Chern integrals into integer
//! invariants. All arithmetic is over `BigRational`.

pub mod cohomology;
pub mod engine;
pub mod error;
pub mod exact;
pub mod genus1;
pub mod geometry;
pub mod localp2;

pub use cohomology::{CohClass, CurveClass, Ring};
pub use engine::{Engine, MemoStore};
pub use error::{Error, Result};
pub use exact::{DegreeSeries, Rational};
pub use genus1::{compute_bps_table, martin_check, BpsReport, MartinRow};
pub use geometry::Geometry;
