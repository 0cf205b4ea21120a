//! Grids of exact optima over ranges of rows and columns.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::{max_by_rows, solve_min_maximal, Limits, Objective, SolveRequest};
use crate::error::Result;
use crate::grid::{BoundaryMode, Dims};

/// `cells[r][c]` holds the optimum for `rows[r] x cols[c]`, or the error that
/// made the cell unavailable.
#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub objective: Objective,
    pub boundary: BoundaryMode,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub cells: Vec<Vec<std::result::Result<u64, String>>>,
}

impl Table {
    /// The value at `(m, n)` if it is in range and was computed.
    pub fn get(&self, m: usize, n: usize) -> Option<u64> {
        let r = self.rows.iter().position(|&x| x == m)?;
        let c = self.cols.iter().position(|&x| x == n)?;
        self.cells[r][c].as_ref().ok().copied()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().flatten().all(|c| c.is_ok())
    }

    /// Aligned text with a header row of column counts; unavailable cells
    /// print as `-`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{:>4}", "m\\n");
        for n in &self.cols {
            out.push_str(&format!("{n:>5}"));
        }
        out.push('\n');
        for (m, row) in self.rows.iter().zip(&self.cells) {
            out.push_str(&format!("{m:>4}"));
            for cell in row {
                match cell {
                    Ok(v) => out.push_str(&format!("{v:>5}")),
                    Err(_) => out.push_str(&format!("{:>5}", "-")),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Runs the matching solver for every cell. For the max objective one sweep
/// per column count yields every row count at once; column counts run in
/// parallel and the result is assembled in range order.
pub fn table(
    objective: Objective,
    rows: RangeInclusive<usize>,
    cols: RangeInclusive<usize>,
    boundary: BoundaryMode,
    limits: &Limits,
) -> Result<Table> {
    let row_list: Vec<usize> = rows.collect();
    let col_list: Vec<usize> = cols.collect();
    let m_max = row_list.iter().copied().max().unwrap_or(0);

    let columns: Vec<Vec<std::result::Result<u64, String>>> = col_list
        .par_iter()
        .map(|&n| match objective {
            Objective::MaxPermissible => match max_by_rows(n, m_max, boundary, limits) {
                Ok(values) => row_list
                    .iter()
                    .map(|&m| {
                        if m == 0 {
                            Err("empty grid".to_string())
                        } else {
                            Ok(values[m - 1])
                        }
                    })
                    .collect(),
                Err(e) => row_list.iter().map(|_| Err(e.to_string())).collect(),
            },
            Objective::MinMaximal => row_list
                .par_iter()
                .map(|&m| {
                    let dims = Dims::new(m, n, boundary).map_err(|e| e.to_string())?;
                    let req = SolveRequest::new(dims, objective)
                        .without_witness()
                        .with_limits(*limits);
                    solve_min_maximal(&req)
                        .map(|r| r.optimum)
                        .map_err(|e| e.to_string())
                })
                .collect(),
        })
        .collect();

    let cells = (0..row_list.len())
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    Ok(Table {
        objective,
        boundary,
        rows: row_list,
        cols: col_list,
        cells,
    })
}
