//! Configurations on an `m x n` tract and the sunlight rules.
//!
//! Rows are numbered 1..=m from the north, columns 1..=n from the west. Light
//! arrives from the east, south and west; the northern side never matters.

pub mod profile;

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use profile::{Profile, RowKernel, RowSet};

/// What lies beyond the eastern, southern and western edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryMode {
    /// Open land: off-grid lots always let light through.
    #[default]
    Free,
    /// A wall: off-grid lots count as occupied.
    Bricked,
}

impl BoundaryMode {
    /// The occupancy value an off-grid lot takes.
    pub fn fill(self) -> bool {
        matches!(self, BoundaryMode::Bricked)
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundaryMode::Free => "free",
            BoundaryMode::Bricked => "bricked",
        }
    }
}

impl std::str::FromStr for BoundaryMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "free" => Ok(BoundaryMode::Free),
            "bricked" => Ok(BoundaryMode::Bricked),
            other => Err(Error::InvalidArgument(format!(
                "unknown boundary mode `{other}` (expected free or bricked)"
            ))),
        }
    }
}

impl fmt::Display for BoundaryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dims {
    pub rows: usize,
    pub cols: usize,
    pub boundary: BoundaryMode,
}

impl Dims {
    pub fn new(rows: usize, cols: usize, boundary: BoundaryMode) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyGrid { rows, cols });
        }
        Ok(Self {
            rows,
            cols,
            boundary,
        })
    }

    pub fn free(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, BoundaryMode::Free)
    }

    pub fn lots(&self) -> usize {
        self.rows * self.cols
    }

    pub(crate) fn kernel(&self) -> RowKernel {
        RowKernel::new(self.cols, self.boundary.fill())
    }

    fn check(&self, at: Coord) -> Result<()> {
        if at.i == 0 || at.j == 0 || at.i > self.rows || at.j > self.cols {
            return Err(Error::OutOfRange {
                at,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }
}

/// A lot, 1-based: `i` is the row from the north, `j` the column from the west.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coord {
    pub i: usize,
    pub j: usize,
}

impl Coord {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// The four reasons an empty lot of a maximal configuration stays empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Proposition {
    /// The lot is the only light left for its eastern neighbour.
    East,
    /// The lot is the only light left for its western neighbour.
    West,
    /// The lot is the only light left for its northern neighbour.
    North,
    /// A house on the lot would itself be blocked.
    Center,
}

impl Proposition {
    pub const ALL: [Proposition; 4] = [
        Proposition::East,
        Proposition::West,
        Proposition::North,
        Proposition::Center,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Proposition::East => "E",
            Proposition::West => "W",
            Proposition::North => "N",
            Proposition::Center => "C",
        }
    }
}

/// An occupancy assignment of one tract.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    dims: Dims,
    rows: Vec<RowSet>,
}

impl Configuration {
    pub fn empty(dims: Dims) -> Self {
        Self {
            dims,
            rows: vec![RowSet::empty(dims.cols); dims.rows],
        }
    }

    pub fn full(dims: Dims) -> Self {
        Self {
            dims,
            rows: vec![RowSet::filled(dims.cols, true); dims.rows],
        }
    }

    /// Builds a configuration cell by cell; `house` receives 1-based lots.
    pub fn from_fn(dims: Dims, mut house: impl FnMut(Coord) -> bool) -> Self {
        let mut config = Self::empty(dims);
        for i in 1..=dims.rows {
            for j in 1..=dims.cols {
                if house(Coord::new(i, j)) {
                    config.rows[i - 1].set(j - 1, true);
                }
            }
        }
        config
    }

    /// Builds a configuration from single-word row masks (bit 0 = column 1).
    pub fn from_masks(dims: Dims, masks: &[u64]) -> Result<Self> {
        if masks.len() != dims.rows || dims.cols > 64 {
            return Err(Error::InvalidArgument(format!(
                "{} masks for a {}x{} grid",
                masks.len(),
                dims.rows,
                dims.cols
            )));
        }
        Ok(Self {
            dims,
            rows: masks
                .iter()
                .map(|&m| RowSet::from_mask(dims.cols, m))
                .collect(),
        })
    }

    /// Row `i` (1-based) as single-word masks; `None` when wider than 64.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.dims.cols <= 64).then(|| self.rows.iter().map(RowSet::as_mask).collect())
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn rows(&self) -> usize {
        self.dims.rows
    }

    pub fn cols(&self) -> usize {
        self.dims.cols
    }

    pub fn boundary(&self) -> BoundaryMode {
        self.dims.boundary
    }

    /// The same cells read under another boundary mode.
    pub fn with_boundary(&self, boundary: BoundaryMode) -> Self {
        Self {
            dims: Dims {
                boundary,
                ..self.dims
            },
            rows: self.rows.clone(),
        }
    }

    /// Occupied columns of row `i` (1-based).
    pub fn row_profile(&self, i: usize) -> &RowSet {
        &self.rows[i - 1]
    }

    pub fn house(&self, at: Coord) -> Result<bool> {
        self.dims.check(at)?;
        Ok(self.rows[at.i - 1].contains(at.j - 1))
    }

    /// Unchecked lookup used on hot paths; `at` must be in range.
    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i - 1].contains(j - 1)
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i - 1].set(j - 1, value);
    }

    /// A copy with lot `at` set to `value`.
    pub fn with(&self, at: Coord, value: bool) -> Result<Self> {
        self.dims.check(at)?;
        let mut next = self.clone();
        next.set(at.i, at.j, value);
        Ok(next)
    }

    /// Occupied lots in row-major order.
    pub fn houses(&self) -> impl Iterator<Item = Coord> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.columns().map(move |j| Coord::new(i + 1, j + 1))
        })
    }

    pub fn occupancy(&self) -> u64 {
        self.rows.iter().map(RowSet::count).sum()
    }

    pub fn density(&self) -> Ratio<u64> {
        Ratio::new(self.occupancy(), self.dims.lots() as u64)
    }

    /// East-west mirror image.
    pub fn mirrored(&self) -> Self {
        let n = self.dims.cols;
        Self::from_fn(self.dims, |c| self.get(c.i, n + 1 - c.j))
    }

    fn above(&self, i: usize) -> RowSet {
        if i == 1 {
            RowSet::empty(self.dims.cols)
        } else {
            self.rows[i - 2].clone()
        }
    }

    fn south(&self, i: usize) -> RowSet {
        if i == self.dims.rows {
            self.dims.kernel().south_border()
        } else {
            self.rows[i].clone()
        }
    }

    /// Houses in row `i` that receive no light.
    pub fn blocked_in_row(&self, i: usize) -> RowSet {
        self.dims.kernel().blocked(&self.rows[i - 1], &self.south(i))
    }

    /// Empty lots in row `i` where a house can be added.
    pub fn addable_in_row(&self, i: usize) -> RowSet {
        self.dims
            .kernel()
            .addable(&self.above(i), &self.rows[i - 1], &self.south(i))
    }

    /// Lots in row `i` where proposition `which` holds.
    pub fn proposition_row(&self, i: usize, which: Proposition) -> RowSet {
        let kernel = self.dims.kernel();
        let row = &self.rows[i - 1];
        let south = self.south(i);
        match which {
            Proposition::East => kernel.prop_east(row, &south),
            Proposition::West => kernel.prop_west(row, &south),
            Proposition::North => kernel.prop_north(&self.above(i)),
            Proposition::Center => kernel.prop_center(row, &south),
        }
    }

    /// All blocked houses, row-major.
    pub fn blocked_houses(&self) -> Vec<Coord> {
        (1..=self.dims.rows)
            .flat_map(|i| {
                self.blocked_in_row(i)
                    .columns()
                    .map(move |j| Coord::new(i, j + 1))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// All addable empty lots, row-major.
    pub fn addable_lots(&self) -> Vec<Coord> {
        (1..=self.dims.rows)
            .flat_map(|i| {
                self.addable_in_row(i)
                    .columns()
                    .map(move |j| Coord::new(i, j + 1))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn is_blocked(&self, at: Coord) -> Result<bool> {
        self.dims.check(at)?;
        Ok(self.blocked_in_row(at.i).contains(at.j - 1))
    }

    pub fn is_permissible(&self) -> bool {
        self.dims.kernel().grid_is_permissible(&self.rows)
    }

    /// Evaluates one of the four propositions at `at`. Off-grid terms take
    /// the boundary value; a proposition about an off-grid neighbour is false.
    pub fn proposition(&self, at: Coord, which: Proposition) -> Result<bool> {
        self.dims.check(at)?;
        Ok(self.proposition_row(at.i, which).contains(at.j - 1))
    }

    /// Propositions holding at `at`, in E, W, N, C order.
    pub fn propositions_at(&self, at: Coord) -> Result<Vec<Proposition>> {
        self.dims.check(at)?;
        Ok(Proposition::ALL
            .into_iter()
            .filter(|&p| self.proposition_row(at.i, p).contains(at.j - 1))
            .collect())
    }

    /// True iff none of the four propositions holds at the empty lot `at`.
    /// For a permissible configuration this is exactly "adding a house at
    /// `at` keeps it permissible".
    pub fn is_addable(&self, at: Coord) -> Result<bool> {
        self.dims.check(at)?;
        if self.get(at.i, at.j) {
            return Err(Error::Occupied { at });
        }
        Ok(self.addable_in_row(at.i).contains(at.j - 1))
    }

    pub fn is_maximal(&self) -> bool {
        self.dims.kernel().grid_is_maximal(&self.rows)
    }

    /// Fills every addable lot in a single west-to-east, north-to-south scan.
    /// Propositions only grow as houses are added, so one pass reaches a
    /// maximal configuration whenever the input is permissible.
    pub fn complete_greedily(&self) -> Self {
        let mut out = self.clone();
        self.dims.kernel().complete_greedily(&mut out.rows);
        out
    }

    /// Placements of the forbidden pattern: a house with houses directly to
    /// its west, east and south. Scanned cell by cell with an explicit
    /// template, independently of the row kernel.
    pub fn forbidden_pattern_placements(&self) -> Vec<Coord> {
        const TEMPLATE: [(isize, isize); 4] = [(0, 0), (0, -1), (0, 1), (1, 0)];
        let (m, n) = (self.dims.rows as isize, self.dims.cols as isize);
        let fill = self.dims.boundary.fill();
        let lot = |i: isize, j: isize| -> bool {
            if i < 1 {
                false
            } else if i > m || j < 1 || j > n {
                fill
            } else {
                self.get(i as usize, j as usize)
            }
        };
        let mut found = Vec::new();
        for i in 1..=m {
            for j in 1..=n {
                if TEMPLATE.iter().all(|&(di, dj)| lot(i + di, j + dj)) {
                    found.push(Coord::new(i as usize, j as usize));
                }
            }
        }
        found
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Configuration {}x{} ({})",
            self.dims.rows, self.dims.cols, self.dims.boundary
        )?;
        for i in 1..=self.dims.rows {
            let line: String = (1..=self.dims.cols)
                .map(|j| if self.get(i, j) { '#' } else { '.' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

pub fn occupancy(config: &Configuration) -> u64 {
    config.occupancy()
}

pub fn density(config: &Configuration) -> Ratio<u64> {
    config.density()
}

pub fn is_blocked(config: &Configuration, at: Coord) -> Result<bool> {
    config.is_blocked(at)
}

pub fn is_permissible(config: &Configuration) -> bool {
    config.is_permissible()
}

pub fn proposition(config: &Configuration, at: Coord, which: Proposition) -> Result<bool> {
    config.proposition(at, which)
}

pub fn is_addable(config: &Configuration, at: Coord) -> Result<bool> {
    config.is_addable(at)
}

pub fn is_maximal(config: &Configuration) -> bool {
    config.is_maximal()
}
