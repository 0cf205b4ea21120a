use thiserror::Error;

use crate::grid::Coord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("grid dimensions must be positive, got {rows}x{cols}")]
    EmptyGrid { rows: usize, cols: usize },

    #[error("{what} requires at least {min} rows and columns, got {rows}x{cols}")]
    TooSmall {
        what: &'static str,
        min: usize,
        rows: usize,
        cols: usize,
    },

    #[error("coordinate ({}, {}) lies outside the {rows}x{cols} grid", at.i, at.j)]
    OutOfRange { at: Coord, rows: usize, cols: usize },

    #[error("lot ({}, {}) is already occupied", at.i, at.j)]
    Occupied { at: Coord },

    #[error("configuration is not maximal")]
    NotMaximal,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("{cols} columns exceeds the configured cap of {cap} for this solver")]
    ColumnCap { cols: usize, cap: usize },

    #[error("grid of {cells} lots is too large for exhaustive enumeration (limit {limit})")]
    GridTooLarge { cells: usize, limit: usize },

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("pattern generator produced occupancy {got}, closed form says {expected}")]
    PatternMismatch { expected: u64, got: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
