//! Exhaustive enumeration over every configuration of a small grid.

use std::time::Instant;

use super::{pop, Objective, SolveRequest, SolveResult, Stats};
use crate::error::{Error, Result};
use crate::grid::profile::{width_mask, RowKernel};
use crate::grid::Configuration;

/// Largest lot count [`brute_force`] accepts.
pub const BRUTE_FORCE_MAX_LOTS: usize = 22;

/// Enumerates all `2^(mn)` configurations.
///
/// Candidates are visited in increasing order of their row-major 0/1 cell
/// string (north-west lot first) and only strict improvements replace the
/// incumbent, so the witness is the lexicographically smallest optimum.
pub fn brute_force(req: &SolveRequest) -> Result<SolveResult> {
    let start = Instant::now();
    let (m, n) = (req.dims.rows, req.dims.cols);
    let lots = m * n;
    if lots > BRUTE_FORCE_MAX_LOTS {
        return Err(Error::GridTooLarge {
            cells: lots,
            limit: BRUTE_FORCE_MAX_LOTS,
        });
    }
    let kernel = RowKernel::new(n, req.dims.boundary.fill());
    let mask = width_mask(n);
    let maximize = req.objective == Objective::MaxPermissible;
    let mut rows = vec![0u64; m];
    let mut best: Option<(u64, Vec<u64>)> = None;
    for key in 0..1u64 << lots {
        for (i, row) in rows.iter_mut().enumerate() {
            let chunk = (key >> (lots - (i + 1) * n)) & mask;
            *row = chunk.reverse_bits() >> (64 - n);
        }
        let occ = pop(key);
        let better = match &best {
            None => true,
            Some((b, _)) if maximize => occ > *b,
            Some((b, _)) => occ < *b,
        };
        if !better {
            continue;
        }
        let ok = if maximize {
            kernel.grid_is_permissible(&rows)
        } else {
            kernel.grid_is_maximal(&rows)
        };
        if ok {
            best = Some((occ, rows.clone()));
        }
    }
    let (optimum, rows) = best.expect("the empty grid is always permissible");
    let witness = if req.want_witness {
        Some(Configuration::from_masks(req.dims, &rows)?)
    } else {
        None
    };
    Ok(SolveResult {
        optimum,
        witness,
        stats: Stats {
            states: 1 << lots,
            transitions: 1 << lots,
            elapsed: start.elapsed(),
        },
    })
}
