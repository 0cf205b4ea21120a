//! Sunlit settlements on a rectangular grid.
//!
//! A house needs light from at least one of its eastern, southern or western
//! neighbours. This crate checks configurations against that rule, builds the
//! classic periodic layouts, evaluates the analytic occupancy bounds, and
//! computes the exact extremal occupancies `E(m, n)` (most houses in any
//! permissible configuration) and `I(m, n)` (fewest houses in a maximal one).

pub mod bounds;
pub mod cli;
pub mod error;
pub mod grid;
pub mod io;
pub mod modelgen;
pub mod patterns;
pub mod solvers;

pub use error::{Error, Result};
pub use grid::{BoundaryMode, Configuration, Coord, Dims, Proposition};
