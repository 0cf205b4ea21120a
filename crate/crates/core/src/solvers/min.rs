//! Minimum occupancy over maximal configurations by a pair-state DP.
//!
//! Whether an empty lot may stay empty depends on the rows above and below
//! it, so the state is the pair `(above, cur)`. Moving to `(cur, next)` is
//! allowed iff no house of `cur` is blocked by `next` and every empty lot of
//! `cur` that nothing in `cur`/`next` explains is explained from above:
//!
//! ```text
//! needs_north(cur, next) ⊆ triple(above)
//! ```
//!
//! For a fixed `cur`, grouping predecessors by `triple(above)` and taking a
//! superset-minimum transform answers every `next` with one lookup.

use std::time::Instant;

use rayon::prelude::*;

use super::{pop, Deadline, Objective, SolveRequest, SolveResult, Stats};
use crate::error::{Error, Result};
use crate::grid::profile::RowKernel;
use crate::grid::Configuration;

const INF: u16 = u16::MAX;

/// In place: `g[Y] = min { g[X] : X superset of Y }`.
fn superset_min(g: &mut [u16]) {
    let mut bit = 1;
    while bit < g.len() {
        for chunk in g.chunks_mut(bit * 2) {
            let (lo, hi) = chunk.split_at_mut(bit);
            for (l, &h) in lo.iter_mut().zip(hi.iter()) {
                if h < *l {
                    *l = h;
                }
            }
        }
        bit *= 2;
    }
}

/// Layer layout: `f[cur * size + above]`.
fn advance(kernel: &RowKernel, triples: &[u64], f: &[u16]) -> Vec<u16> {
    let size = triples.len();
    let per_cur: Vec<Option<Vec<u16>>> = (0..size)
        .into_par_iter()
        .map(|r| {
            let row = &f[r * size..(r + 1) * size];
            let mut g = vec![INF; size];
            let mut any = false;
            for (a, &v) in row.iter().enumerate() {
                if v != INF {
                    let t = triples[a] as usize;
                    g[t] = g[t].min(v);
                    any = true;
                }
            }
            if !any {
                return None;
            }
            superset_min(&mut g);
            let r = r as u64;
            Some(
                (0..size as u64)
                    .map(|s| {
                        if kernel.blocked(&r, &s) != 0 {
                            return INF;
                        }
                        let v = g[kernel.needs_north(&r, &s) as usize];
                        if v == INF {
                            INF
                        } else {
                            v + pop(s) as u16
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    let mut next = vec![INF; size * size];
    next.par_chunks_mut(size).enumerate().for_each(|(s, out)| {
        for (r, col) in per_cur.iter().enumerate() {
            if let Some(col) = col {
                out[r] = col[s];
            }
        }
    });
    next
}

/// `I(m, n)` and, if requested, a maximal witness of that occupancy. Ties
/// go to the smallest south row mask, then the smallest mask above it.
pub fn solve_min_maximal(req: &SolveRequest) -> Result<SolveResult> {
    if req.objective != Objective::MinMaximal {
        return Err(Error::InvalidArgument(
            "solve_min_maximal needs the min objective".into(),
        ));
    }
    let start = Instant::now();
    let (m, n) = (req.dims.rows, req.dims.cols);
    req.limits.check_cols(Objective::MinMaximal, n)?;
    if m * n >= usize::from(INF) {
        return Err(Error::GridTooLarge {
            cells: m * n,
            limit: usize::from(INF) - 1,
        });
    }
    if m == 1 {
        return single_row(req, start);
    }
    let kept = if req.want_witness { m } else { 1 };
    let size = 1usize.checked_shl(n as u32).filter(|_| n < 32);
    let bytes = size
        .and_then(|s| s.checked_mul(s))
        .and_then(|states| states.checked_mul(2 * (kept + 2)));
    req.limits.check_bytes(bytes)?;
    let size = size.unwrap_or(0);
    let deadline = Deadline::new(&req.limits);

    let kernel = RowKernel::new(n, req.dims.boundary.fill());
    let triples: Vec<u64> = (0..size as u64).map(|a| kernel.triple(&a)).collect();
    let mut stats = Stats::default();
    let per_layer = (size * size) as u64;

    // Row 1 sits below an empty virtual row.
    let mut f = vec![INF; size * size];
    for r in 0..size {
        f[r * size] = pop(r as u64) as u16;
    }
    stats.states += per_layer;
    let mut layers: Vec<Vec<u16>> = Vec::new();
    for _ in 1..m {
        deadline.check()?;
        let next = advance(&kernel, &triples, &f);
        stats.states += per_layer;
        stats.transitions += per_layer * (n as u64 + 2);
        if req.want_witness {
            layers.push(std::mem::replace(&mut f, next));
        } else {
            f = next;
        }
    }

    let border: u64 = kernel.south_border();
    let mut best: Option<(u16, u64, u64)> = None;
    for r in 0..size as u64 {
        if kernel.blocked(&r, &border) != 0 {
            continue;
        }
        let need = kernel.needs_north(&r, &border);
        for a in 0..size as u64 {
            let v = f[r as usize * size + a as usize];
            if v == INF || need & !triples[a as usize] != 0 {
                continue;
            }
            if best.is_none_or(|(b, _, _)| v < b) {
                best = Some((v, r, a));
            }
        }
    }
    let (optimum, last, above) = best.ok_or_else(|| {
        Error::InvalidArgument("no maximal configuration found".into())
    })?;

    let witness = if req.want_witness {
        let mut rows = vec![0u64; m];
        rows[m - 1] = last;
        if m >= 2 {
            rows[m - 2] = above;
        }
        let mut target = optimum;
        for k in (2..m).rev() {
            let (cur, prev) = (rows[k], rows[k - 1]);
            let want = target - pop(cur) as u16;
            let need = kernel.needs_north(&prev, &cur);
            let layer = &layers[k - 1];
            let a = (0..size)
                .find(|&a| {
                    layer[prev as usize * size + a] == want && need & !triples[a] == 0
                })
                .expect("DP layers are consistent");
            rows[k - 2] = a as u64;
            target = want;
        }
        Some(Configuration::from_masks(req.dims, &rows)?)
    } else {
        None
    };
    stats.elapsed = start.elapsed();
    Ok(SolveResult {
        optimum: u64::from(optimum),
        witness,
        stats,
    })
}

/// One row sits between an empty virtual row and the south border, so the
/// row alone is the state.
fn single_row(req: &SolveRequest, start: Instant) -> Result<SolveResult> {
    let n = req.dims.cols;
    if n >= 63 {
        return Err(Error::ColumnCap { cols: n, cap: 62 });
    }
    let kernel = RowKernel::new(n, req.dims.boundary.fill());
    let border: u64 = kernel.south_border();
    let (optimum, row) = (0..1u64 << n)
        .filter(|r| kernel.row_is_settled(&0, r, &border))
        .map(|r| (pop(r), r))
        .min()
        .expect("greedy completion of the empty row is maximal");
    let witness = if req.want_witness {
        Some(Configuration::from_masks(req.dims, &[row])?)
    } else {
        None
    };
    Ok(SolveResult {
        optimum,
        witness,
        stats: Stats {
            states: 1 << n,
            transitions: 1 << n,
            elapsed: start.elapsed(),
        },
    })
}
