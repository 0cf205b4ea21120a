//! Exact extremal occupancies.
//!
//! [`solve_max`] finds `E(m, n)`, the largest permissible configuration;
//! [`solve_min_maximal`] finds `I(m, n)`, the smallest maximal one. Both are
//! row-profile dynamic programs built on the same [`RowKernel`] rules as the
//! checkers. [`brute_force`] enumerates every configuration of a small grid
//! and serves as their oracle.
//!
//! [`RowKernel`]: crate::grid::profile::RowKernel

mod brute;
mod max;
mod min;
mod table;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Configuration, Dims};

pub use brute::{brute_force, BRUTE_FORCE_MAX_LOTS};
pub use max::{max_by_rows, solve_max};
pub use min::solve_min_maximal;
pub use table::{table, Table};

/// Column cap for [`solve_max`] when nothing overrides it.
pub const DEFAULT_MAX_COLS_E: usize = 24;
/// Column cap for [`solve_min_maximal`] when nothing overrides it.
pub const DEFAULT_MAX_COLS_I: usize = 12;
/// State memory budget when nothing overrides it (1 GiB).
pub const DEFAULT_MAX_STATE_BYTES: usize = 1 << 30;
/// Environment variable overriding both column caps.
pub const MAX_COLS_ENV: &str = "SETTLE_MAX_COLS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Objective {
    /// Most houses over permissible configurations.
    MaxPermissible,
    /// Fewest houses over maximal configurations.
    MinMaximal,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::MaxPermissible => "max",
            Objective::MinMaximal => "min",
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "max" | "max-permissible" => Ok(Objective::MaxPermissible),
            "min" | "min-maximal" => Ok(Objective::MinMaximal),
            other => Err(Error::InvalidArgument(format!(
                "unknown objective `{other}` (expected max or min)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    /// Overrides the column cap (and `SETTLE_MAX_COLS`).
    pub max_cols: Option<usize>,
    /// Overrides [`DEFAULT_MAX_STATE_BYTES`].
    pub max_state_bytes: Option<usize>,
    pub max_time: Option<Duration>,
}

impl Limits {
    /// The effective column cap for `objective`.
    pub fn col_cap(&self, objective: Objective) -> usize {
        if let Some(cap) = self.max_cols {
            return cap;
        }
        if let Some(cap) = std::env::var(MAX_COLS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            return cap;
        }
        match objective {
            Objective::MaxPermissible => DEFAULT_MAX_COLS_E,
            Objective::MinMaximal => DEFAULT_MAX_COLS_I,
        }
    }

    pub fn state_bytes(&self) -> usize {
        self.max_state_bytes.unwrap_or(DEFAULT_MAX_STATE_BYTES)
    }

    pub(crate) fn check_cols(&self, objective: Objective, cols: usize) -> Result<()> {
        let cap = self.col_cap(objective);
        if cols > cap {
            return Err(Error::ColumnCap { cols, cap });
        }
        Ok(())
    }

    /// Fails when `bytes` (None meaning overflow) exceeds the budget.
    pub(crate) fn check_bytes(&self, bytes: Option<usize>) -> Result<()> {
        let budget = self.state_bytes();
        match bytes {
            Some(b) if b <= budget => Ok(()),
            Some(b) => Err(Error::LimitExceeded(format!(
                "state space needs {b} bytes, budget is {budget}"
            ))),
            None => Err(Error::LimitExceeded(format!(
                "state space does not fit in memory, budget is {budget} bytes"
            ))),
        }
    }
}

/// Wall-clock guard checked between row layers.
pub(crate) struct Deadline(Option<(Instant, Duration)>);

impl Deadline {
    pub(crate) fn new(limits: &Limits) -> Self {
        Self(limits.max_time.map(|d| (Instant::now(), d)))
    }

    pub(crate) fn check(&self) -> Result<()> {
        match self.0 {
            Some((start, budget)) if start.elapsed() > budget => Err(Error::LimitExceeded(
                format!("wall time exceeded {:.3}s", budget.as_secs_f64()),
            )),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveRequest {
    pub dims: Dims,
    pub objective: Objective,
    pub want_witness: bool,
    pub limits: Limits,
}

impl SolveRequest {
    pub fn new(dims: Dims, objective: Objective) -> Self {
        Self {
            dims,
            objective,
            want_witness: true,
            limits: Limits::default(),
        }
    }

    pub fn without_witness(mut self) -> Self {
        self.want_witness = false;
        self
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Value-table entries computed.
    pub states: u64,
    /// Candidate transitions (or configurations) examined.
    pub transitions: u64,
    /// Not serialized, so machine output stays byte-deterministic.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub optimum: u64,
    pub witness: Option<Configuration>,
    pub stats: Stats,
}

/// Dispatches to the dynamic program matching `req.objective`.
pub fn solve(req: &SolveRequest) -> Result<SolveResult> {
    match req.objective {
        Objective::MaxPermissible => solve_max(req),
        Objective::MinMaximal => solve_min_maximal(req),
    }
}

#[inline]
pub(crate) fn pop(mask: u64) -> u64 {
    u64::from(mask.count_ones())
}
