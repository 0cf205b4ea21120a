//! Analytic occupancy bounds and audits of the structural counting facts
//! that every maximal configuration obeys.
//!
//! All arithmetic is exact: integers, or [`Ratio`] where a bound is not
//! integral.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grid::{BoundaryMode, Configuration, Dims};

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

/// `(lower, upper)` from counting light sources: every empty lot lights at
/// most three houses.
pub fn crude_bounds(m: usize, n: usize) -> Result<(Ratio<u64>, Ratio<u64>)> {
    check_size("crude bounds", m, n)?;
    let (m, n) = (m as u64, n as u64);
    let lower = Ratio::new(m * n, 2);
    let upper = Ratio::new(3 * m * n, 4) + Ratio::new(m - 1, 2) + Ratio::new(n, 4);
    Ok((lower, upper))
}

/// The smallest occupancy any maximal configuration can have. Attained by
/// the rake-stripe layout.
pub fn i_lower_bound(m: usize, n: usize) -> Result<u64> {
    check_size("minimum-occupancy bound", m, n)?;
    let (m, n) = (m as u64, n as u64);
    Ok(match n % 4 {
        0 => m * n / 2 + 2,
        2 => m * (n + 2) / 2,
        _ => m * (n + 1) / 2 + 1,
    })
}

/// Upper bound from tiling each row into 1x4 blocks that cannot all be
/// occupied below the first row.
pub fn e_upper_block(m: usize, n: usize) -> Result<u64> {
    check_size("block bound", m, n)?;
    let (mu, nu) = (m as u64, n as u64);
    let mut v = mu * nu - (nu / 4) * (mu - 1);
    if n % 4 == 3 {
        v -= mu / 2;
    }
    Ok(v)
}

/// Most houses the row above a row holding `k` houses can carry.
pub fn row_above_cap(k: usize, n: usize) -> Result<u64> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "row count {k} exceeds width {n}"
        )));
    }
    Ok((n - k / 3) as u64)
}

fn step(n: u64, prev: u64, prev2: u64) -> u64 {
    n + (2 * prev + prev2).div_ceil(3)
}

/// `R(m, n)`: `R(0) = 0`, `R(1) = n`, then
/// `R(m) = n + ceil((2 R(m-1) + R(m-2)) / 3)`.
pub fn r_recurrence(m: usize, n: usize) -> u64 {
    let n = n as u64;
    let (mut prev2, mut prev) = (0u64, n);
    if m == 0 {
        return 0;
    }
    for _ in 1..m {
        let next = step(n, prev, prev2);
        prev2 = prev;
        prev = next;
    }
    prev
}

/// The recurrence restarted from known values.
///
/// `seeds` maps row counts to exact values (or valid upper bounds). The
/// iteration starts at the first pair of consecutive seeded row counts and
/// takes any later seed in place of the computed value.
pub fn seeded_recurrence(n: usize, seeds: &BTreeMap<usize, u64>, m: usize) -> Result<u64> {
    if let Some(&v) = seeds.get(&m) {
        return Ok(v);
    }
    let start = seeds
        .keys()
        .copied()
        .find(|&r| r < m && seeds.contains_key(&(r + 1)))
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "seeds need two consecutive row counts below {m}"
            ))
        })?;
    let n = n as u64;
    let (mut prev2, mut prev) = (seeds[&start], seeds[&(start + 1)]);
    for r in start + 2..=m {
        let next = seeds
            .get(&r)
            .copied()
            .unwrap_or_else(|| step(n, prev, prev2));
        prev2 = prev;
        prev = next;
    }
    Ok(prev)
}

/// A bound value tagged with where it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tagged<T> {
    pub value: T,
    pub source: &'static str,
}

fn ratio_str<S: Serializer>(r: &Tagged<Ratio<u64>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    Tagged {
        value: r.value.to_string(),
        source: r.source,
    }
    .serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub dims: Dims,
    #[serde(serialize_with = "ratio_str")]
    pub crude_lower: Tagged<Ratio<u64>>,
    #[serde(serialize_with = "ratio_str")]
    pub crude_upper: Tagged<Ratio<u64>>,
    pub i_lower: Tagged<u64>,
    pub e_upper_block: Tagged<u64>,
    pub e_upper_recurrence: Tagged<u64>,
}

impl BoundsReport {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let (lo, hi) = crude_bounds(m, n)?;
        Ok(Self {
            dims: Dims::new(m, n, BoundaryMode::Free)?,
            crude_lower: Tagged {
                value: lo,
                source: "light counting, lower",
            },
            crude_upper: Tagged {
                value: hi,
                source: "light counting, upper",
            },
            i_lower: Tagged {
                value: i_lower_bound(m, n)?,
                source: "rake-stripe lower bound",
            },
            e_upper_block: Tagged {
                value: e_upper_block(m, n)?,
                source: "1x4 block bound",
            },
            e_upper_recurrence: Tagged {
                value: r_recurrence(m, n),
                source: "row-above recurrence",
            },
        })
    }

    /// `crude_lower <= i_lower <= recurrence <= block <= ceil(crude_upper)`.
    pub fn is_ordered(&self) -> bool {
        let lo = self.crude_lower.value;
        let hi = self.crude_upper.value.ceil().to_integer();
        lo <= Ratio::from_integer(self.i_lower.value)
            && self.i_lower.value <= self.e_upper_recurrence.value
            && self.e_upper_recurrence.value <= self.e_upper_block.value
            && self.e_upper_block.value <= hi
    }

    /// Aligned human-readable lines.
    pub fn to_text(&self) -> String {
        let rows = [
            ("crude lower", self.crude_lower.value.to_string(), self.crude_lower.source),
            ("I lower", self.i_lower.value.to_string(), self.i_lower.source),
            (
                "E upper (recurrence)",
                self.e_upper_recurrence.value.to_string(),
                self.e_upper_recurrence.source,
            ),
            (
                "E upper (block)",
                self.e_upper_block.value.to_string(),
                self.e_upper_block.source,
            ),
            ("crude upper", self.crude_upper.value.to_string(), self.crude_upper.source),
        ];
        let mut out = format!("bounds for {}x{}\n", self.dims.rows, self.dims.cols);
        for (name, value, source) in rows {
            out.push_str(&format!("  {name:<22}{value:>8}   {source}\n"));
        }
        out
    }
}

/// Outcome of one structural check; `None` when the grid is too small for
/// the check to apply.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaAudit {
    /// The two southern rows hold at least `n + 2` houses.
    pub southern_rows: Option<bool>,
    /// Every northern strip of the two west (or east) columns and depth `l`
    /// holds at least `l` houses.
    pub border_width2: Option<bool>,
    /// Same with three border columns and at least `2l` houses.
    pub border_width3: Option<bool>,
    /// Every northern strip of four adjacent columns holds at least `2l`.
    pub width4_strips: Option<bool>,
}

impl LemmaAudit {
    pub fn all_pass(&self) -> bool {
        [
            self.southern_rows,
            self.border_width2,
            self.border_width3,
            self.width4_strips,
        ]
        .iter()
        .all(|v| v.unwrap_or(true))
    }
}

/// Checks the counting facts on a maximal `Free` configuration.
pub fn audit_structural_lemmas(config: &Configuration) -> Result<LemmaAudit> {
    if !config.is_maximal() {
        return Err(Error::NotMaximal);
    }
    if config.boundary() != BoundaryMode::Free {
        return Err(Error::InvalidArgument(
            "structural audit applies to the open border only".into(),
        ));
    }
    let (m, n) = (config.rows(), config.cols());
    let mut audit = LemmaAudit::default();
    if m < 2 || n < 2 {
        return Ok(audit);
    }
    let rows: Vec<Vec<bool>> = (1..=m)
        .map(|i| {
            let p = config.row_profile(i);
            (0..n).map(|c| p.contains(c)).collect()
        })
        .collect();
    let row_count = |i: usize| rows[i].iter().filter(|&&h| h).count();
    audit.southern_rows = Some(row_count(m - 1) + row_count(m - 2) >= n + 2);

    // Every prefix depth l of the columns start..start+width holds at least
    // need_per_row * l houses.
    let strip_ok = |start: usize, width: usize, need_per_row: usize| {
        let mut total = 0;
        (0..m).all(|i| {
            total += rows[i][start..start + width].iter().filter(|&&h| h).count();
            total >= need_per_row * (i + 1)
        })
    };
    audit.border_width2 = Some(strip_ok(0, 2, 1) && strip_ok(n - 2, 2, 1));
    if n >= 3 {
        audit.border_width3 = Some(strip_ok(0, 3, 2) && strip_ok(n - 3, 3, 2));
    }
    if n >= 4 {
        audit.width4_strips = Some((0..=n - 4).all(|t| strip_ok(t, 4, 2)));
    }
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crude_values() {
        assert_eq!(
            crude_bounds(2, 2).unwrap(),
            (Ratio::from_integer(2), Ratio::from_integer(4))
        );
        assert_eq!(
            crude_bounds(4, 4).unwrap(),
            (Ratio::from_integer(8), Ratio::new(29, 2))
        );
    }

    #[test]
    fn closed_forms() {
        assert_eq!(i_lower_bound(6, 8).unwrap(), 26);
        assert_eq!(i_lower_bound(5, 5).unwrap(), 16);
        assert_eq!(i_lower_bound(7, 2).unwrap(), 14);
        assert_eq!(e_upper_block(3, 3).unwrap(), 8);
        assert_eq!(e_upper_block(2, 4).unwrap(), 7);
        assert_eq!(e_upper_block(4, 3).unwrap(), 10);
        assert_eq!(row_above_cap(0, 9).unwrap(), 9);
        assert_eq!(row_above_cap(7, 7).unwrap(), 5);
        assert_eq!(row_above_cap(3, 5).unwrap(), 4);
        assert!(row_above_cap(6, 5).is_err());
    }

    #[test]
    fn recurrence_column_seven() {
        let r: Vec<u64> = (2..=10).map(|m| r_recurrence(m, 7)).collect();
        assert_eq!(r, [12, 18, 23, 29, 34, 40, 45, 51, 56]);
        assert_eq!(r_recurrence(0, 7), 0);
        assert_eq!(r_recurrence(1, 7), 7);
    }

    #[test]
    fn seeding() {
        let seeds = BTreeMap::from([(3, 17), (4, 22)]);
        assert_eq!(seeded_recurrence(7, &seeds, 5).unwrap(), 28);
        assert_eq!(seeded_recurrence(7, &seeds, 10).unwrap(), 55);
        assert_eq!(seeded_recurrence(7, &seeds, 4).unwrap(), 22);
        let plain = BTreeMap::from([(0, 0), (1, 7)]);
        for m in 0..20 {
            assert_eq!(seeded_recurrence(7, &plain, m).unwrap(), r_recurrence(m, 7));
        }
        assert!(seeded_recurrence(7, &BTreeMap::from([(3, 17), (5, 28)]), 8).is_err());
        assert!(seeded_recurrence(7, &seeds, 3).is_ok());
        assert!(seeded_recurrence(7, &BTreeMap::from([(3, 17)]), 6).is_err());
    }

    #[test]
    fn report_is_ordered() {
        for m in 2..=30 {
            for n in 2..=30 {
                assert!(BoundsReport::new(m, n).unwrap().is_ordered(), "{m}x{n}");
            }
        }
    }

    #[test]
    fn audit_rejects_non_maximal() {
        let dims = Dims::free(3, 3).unwrap();
        assert_eq!(
            audit_structural_lemmas(&Configuration::empty(dims)),
            Err(Error::NotMaximal)
        );
        let full = Configuration::full(Dims::free(5, 2).unwrap());
        let audit = audit_structural_lemmas(&full).unwrap();
        assert_eq!(audit.border_width2, Some(true));
        assert_eq!(audit.border_width3, None);
        assert!(audit.all_pass());
    }
}
