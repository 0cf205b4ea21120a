//! Named periodic layouts, their closed-form occupancies, and the
//! brick/comb side-by-side search.
//!
//! Every generator works on the open (`Free`) border and returns a maximal
//! configuration whose occupancy equals [`pattern_occupancy`]. A generator
//! that cannot hit its closed form returns [`Error::PatternMismatch`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::profile::RowKernel;
use crate::grid::{Configuration, Coord, Dims};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    Brick,
    Comb,
    Rake,
    Stripe,
    RakeStripe,
    Check,
}

impl PatternKind {
    pub const ALL: [PatternKind; 6] = [
        PatternKind::Brick,
        PatternKind::Comb,
        PatternKind::Rake,
        PatternKind::Stripe,
        PatternKind::RakeStripe,
        PatternKind::Check,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Brick => "brick",
            PatternKind::Comb => "comb",
            PatternKind::Rake => "rake",
            PatternKind::Stripe => "stripe",
            PatternKind::RakeStripe => "rake-stripe",
            PatternKind::Check => "check",
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        PatternKind::ALL
            .into_iter()
            .find(|k| k.name() == lower || k.name().replace('-', "") == lower)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown pattern `{s}` (expected brick, comb, rake, stripe, rake-stripe, check)"
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    BrickBlock,
    CombBlock,
}

/// One vertical block of a brick/comb combination.
///
/// `phase` selects the restriction window of the infinite pattern: for a
/// brick block the column offset is `phase % 4` and the row offset
/// `phase / 4` (so `0..8`); for a comb block it shifts the empty columns
/// (`0..3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub kind: BlockKind,
    pub width: usize,
    pub phase: u8,
}

impl Segment {
    fn phases(kind: BlockKind) -> u8 {
        match kind {
            BlockKind::BrickBlock => 8,
            BlockKind::CombBlock => 3,
        }
    }

    /// Whether the block has a house at 0-based `(row, col)` of an
    /// `m`-row grid, `col` counted from the block's west edge.
    fn house(&self, m: usize, row: usize, col: usize) -> bool {
        let p = self.phase as usize;
        match self.kind {
            BlockKind::BrickBlock => brick_cell(row + p / 4, col + p % 4),
            BlockKind::CombBlock => row + 1 == m || (col + p) % 3 != 2,
        }
    }
}

/// Blocks laid side by side, west to east.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SegmentSpec {
    pub segments: Vec<Segment>,
}

impl SegmentSpec {
    pub fn width(&self) -> usize {
        self.segments.iter().map(|s| s.width).sum()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.segments.iter().any(|s| s.width < 2) {
            return Err(Error::InvalidArgument(
                "every segment must be at least 2 columns wide".into(),
            ));
        }
        if let Some(s) = self
            .segments
            .iter()
            .find(|s| s.phase >= Segment::phases(s.kind))
        {
            return Err(Error::InvalidArgument(format!(
                "phase {} out of range for {:?}",
                s.phase, s.kind
            )));
        }
        if self.width() != n {
            return Err(Error::InvalidArgument(format!(
                "segment widths sum to {}, grid has {n} columns",
                self.width()
            )));
        }
        Ok(())
    }

    /// The side-by-side restriction before completion.
    pub fn layout(&self, m: usize) -> Result<Configuration> {
        let n = self.width();
        self.validate(n)?;
        let dims = Dims::free(m, n)?;
        let mut owner = Vec::with_capacity(n);
        for seg in &self.segments {
            owner.extend((0..seg.width).map(|c| (seg, c)));
        }
        Ok(Configuration::from_fn(dims, |at| {
            let (seg, c) = owner[at.j - 1];
            seg.house(m, at.i - 1, c)
        }))
    }
}

impl fmt::Display for SegmentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.segments.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            let tag = match s.kind {
                BlockKind::BrickBlock => "brick",
                BlockKind::CombBlock => "comb",
            };
            write!(f, "{tag}:{}@{}", s.width, s.phase)?;
        }
        Ok(())
    }
}

fn check_size(what: &'static str, m: usize, n: usize) -> Result<()> {
    if m < 2 || n < 2 {
        return Err(Error::TooSmall {
            what,
            min: 2,
            rows: m,
            cols: n,
        });
    }
    Ok(())
}

/// Houses per row of the rake pattern on `n` columns.
pub fn rake_row_count(n: usize) -> u64 {
    let n = n as u64;
    match n % 4 {
        0 => n / 2,
        1 => (n - 1) / 2 + 1,
        2 => (n - 2) / 2 + 2,
        _ => (n - 3) / 2 + 2,
    }
}

fn comb_row_count(n: u64) -> u64 {
    match n % 3 {
        0 => 2 * n / 3,
        1 => 2 * (n - 1) / 3 + 1,
        _ => 2 * (n - 2) / 3 + 2,
    }
}

/// The closed-form occupancy of a pattern on an `m x n` grid.
pub fn pattern_occupancy(kind: PatternKind, m: usize, n: usize) -> Result<u64> {
    check_size("pattern occupancy", m, n)?;
    let (mu, nu) = (m as u64, n as u64);
    let k = rake_row_count(n);
    Ok(match kind {
        PatternKind::Brick => {
            if n == 2 {
                2 * mu
            } else {
                let half = nu / 2;
                let mut v = mu * nu.div_ceil(2)
                    + half.div_ceil(2) * mu.div_ceil(2)
                    + (half / 2) * (mu / 2);
                if n % 4 == 0 || (n % 4 == 2 && m % 2 == 0) {
                    v += 1;
                }
                v
            }
        }
        PatternKind::Comb => nu + (mu - 1) * comb_row_count(nu),
        PatternKind::Rake => nu + (mu - 1) * k,
        PatternKind::Stripe => {
            if m % 2 == 0 {
                2 * mu + (mu / 2) * (nu - 2)
            } else {
                2 * (mu - 1) + (mu / 2) * (nu - 2) + k
            }
        }
        PatternKind::RakeStripe => nu + 2 + (mu - 2) * k,
        PatternKind::Check => {
            2 * (mu - 1)
                + nu
                + ((mu - 1) / 2) * (nu - 2).div_ceil(2)
                + (mu - 1).div_ceil(2) * ((nu - 2) / 2)
        }
    })
}

/// The infinite brick pattern at 0-based `(i, j)`: even columns are full,
/// odd columns alternate by row and by column pair.
fn brick_cell(i: usize, j: usize) -> bool {
    j % 2 == 0 || ((j % 4 == 1) == (i % 2 == 0))
}

/// Rake teeth: 1-based columns 2, 3, 6, 7, ...
fn rake_tooth(j: usize) -> bool {
    matches!((j - 1) % 4, 1 | 2)
}

fn accept(kind: PatternKind, config: Configuration) -> Result<Configuration> {
    let expected = pattern_occupancy(kind, config.rows(), config.cols())?;
    let got = config.occupancy();
    if got != expected || !config.is_maximal() {
        return Err(Error::PatternMismatch { expected, got });
    }
    Ok(config)
}

/// A maximal configuration realizing `pattern_occupancy(kind, m, n)`.
pub fn generate_pattern(kind: PatternKind, m: usize, n: usize) -> Result<Configuration> {
    check_size("pattern generation", m, n)?;
    let dims = Dims::free(m, n)?;
    let edge = |at: Coord| at.j == 1 || at.j == n;
    match kind {
        PatternKind::Brick => generate_brick(dims),
        PatternKind::Comb => accept(
            kind,
            Configuration::from_fn(dims, |at| at.i == m || at.j % 3 != 0),
        ),
        PatternKind::Rake => accept(
            kind,
            Configuration::from_fn(dims, |at| at.i == m || rake_tooth(at.j)).complete_greedily(),
        ),
        PatternKind::RakeStripe => accept(
            kind,
            Configuration::from_fn(dims, |at| {
                if at.i == m {
                    edge(at)
                } else {
                    at.i == m - 1 || rake_tooth(at.j)
                }
            })
            .complete_greedily(),
        ),
        PatternKind::Stripe => accept(
            kind,
            Configuration::from_fn(dims, |at| {
                if m % 2 == 1 && at.i == 1 {
                    rake_tooth(at.j)
                } else if (at.i % 2 == 1) == (m % 2 == 0) {
                    true
                } else {
                    edge(at)
                }
            })
            .complete_greedily(),
        ),
        PatternKind::Check => {
            let expected = pattern_occupancy(kind, m, n)?;
            let mut last = None;
            for phase in 0..2 {
                let config = Configuration::from_fn(dims, |at| {
                    at.i == m || edge(at) || (at.i + at.j + phase) % 2 == 0
                });
                if config.occupancy() == expected && config.is_maximal() {
                    return Ok(config);
                }
                last = Some(config.occupancy());
            }
            Err(Error::PatternMismatch {
                expected,
                got: last.unwrap_or(0),
            })
        }
    }
}

fn generate_brick(dims: Dims) -> Result<Configuration> {
    let (m, n) = (dims.rows, dims.cols);
    let expected = pattern_occupancy(PatternKind::Brick, m, n)?;
    if n == 2 {
        return Ok(Configuration::full(dims));
    }
    let mut best = 0;
    for dx in 0..4 {
        for dy in 0..2 {
            for mirror in [false, true] {
                let restricted = Configuration::from_fn(dims, |at| {
                    let j = if mirror { n - at.j } else { at.j - 1 };
                    brick_cell(at.i - 1 + dy, j + dx)
                });
                if !restricted.is_permissible() {
                    continue;
                }
                let done = restricted.complete_greedily();
                if done.occupancy() == expected {
                    return Ok(done);
                }
                best = best.max(done.occupancy());
            }
        }
    }
    Err(Error::PatternMismatch {
        expected,
        got: best,
    })
}

/// Compositions of `n` into at most `parts` summands, each at least 2.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for w in 2..=rest {
            prefix.push(w);
            rec(rest - w, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, parts, &mut Vec::new(), &mut out);
    out
}

/// Exhaustive search over brick and comb blocks laid side by side.
///
/// Every split of the columns into at most `max_segments` blocks of width
/// at least 2 is tried with every block kind and phase. Each permissible
/// layout is completed greedily; the first layout with the highest
/// completed occupancy wins.
pub fn brick_comb_best(
    m: usize,
    n: usize,
    max_segments: usize,
) -> Result<(Configuration, SegmentSpec)> {
    check_size("brick-comb search", m, n)?;
    if max_segments == 0 {
        return Err(Error::InvalidArgument("max_segments must be at least 1".into()));
    }
    if n > 64 {
        return Err(Error::ColumnCap { cols: n, cap: 64 });
    }
    let kernel = RowKernel::new(n, false);
    let choices: Vec<(BlockKind, u8)> = [BlockKind::BrickBlock, BlockKind::CombBlock]
        .into_iter()
        .flat_map(|k| (0..Segment::phases(k)).map(move |p| (k, p)))
        .collect();

    let mut best: Option<(u64, Vec<u64>, SegmentSpec)> = None;
    for widths in compositions(n, max_segments) {
        let mut pick = vec![0usize; widths.len()];
        loop {
            let spec = SegmentSpec {
                segments: widths
                    .iter()
                    .zip(&pick)
                    .map(|(&width, &c)| Segment {
                        kind: choices[c].0,
                        width,
                        phase: choices[c].1,
                    })
                    .collect(),
            };
            let mut rows = vec![0u64; m];
            let mut base = 0;
            for seg in &spec.segments {
                for (i, row) in rows.iter_mut().enumerate() {
                    for c in 0..seg.width {
                        if seg.house(m, i, c) {
                            *row |= 1 << (base + c);
                        }
                    }
                }
                base += seg.width;
            }
            if kernel.grid_is_permissible(&rows) {
                kernel.complete_greedily(&mut rows);
                let occ: u64 = rows.iter().map(|r| u64::from(r.count_ones())).sum();
                if best.as_ref().is_none_or(|(b, _, _)| occ > *b) {
                    best = Some((occ, rows, spec));
                }
            }

            // odometer over block choices
            let mut k = 0;
            while k < pick.len() {
                pick[k] += 1;
                if pick[k] < choices.len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
            if k == pick.len() {
                break;
            }
        }
    }
    let (_, rows, spec) = best.ok_or(Error::PatternMismatch {
        expected: 0,
        got: 0,
    })?;
    Ok((Configuration::from_masks(Dims::free(m, n)?, &rows)?, spec))
}
