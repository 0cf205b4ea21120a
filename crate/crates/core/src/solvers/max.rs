//! Maximum permissible occupancy by a row-profile DP.
//!
//! Let `f_i[q]` be the best occupancy of rows `1..=i` with row `i` equal to
//! `q` and rows `1..i` free of blocked houses. A house of row `p` is blocked
//! exactly on `triple(p) & south`, so row `p` may sit above `q` iff
//! `triple(p) & q == 0`. Writing `h[X] = max { f_i[p] : triple(p) = X }` and
//! `H` for its subset-maximum transform,
//!
//! ```text
//! f_{i+1}[q] = popcount(q) + H[!q]
//! ```
//!
//! which costs `O(n 2^n)` per row.

use std::time::Instant;

use rayon::prelude::*;

use super::{pop, Deadline, Limits, Objective, SolveRequest, SolveResult, Stats};
use crate::error::{Error, Result};
use crate::grid::profile::RowKernel;
use crate::grid::{BoundaryMode, Configuration};

const NEG: i32 = i32::MIN / 2;
const PAR_MIN: usize = 1 << 14;

/// In place: `g[Y] = max { g[X] : X subset of Y }`.
fn subset_max(g: &mut [i32]) {
    let size = g.len();
    let mut bit = 1;
    while bit < size {
        let span = bit * 2;
        let body = |chunk: &mut [i32]| {
            let (lo, hi) = chunk.split_at_mut(bit);
            for (h, &l) in hi.iter_mut().zip(lo.iter()) {
                if l > *h {
                    *h = l;
                }
            }
        };
        if size >= PAR_MIN {
            g.par_chunks_mut(span).for_each(body);
        } else {
            g.chunks_mut(span).for_each(body);
        }
        bit = span;
    }
}

struct Layers<'a> {
    kernel: RowKernel,
    size: usize,
    deadline: Deadline,
    stats: &'a mut Stats,
}

impl Layers<'_> {
    fn first(&mut self) -> Vec<i32> {
        self.stats.states += self.size as u64;
        (0..self.size).map(|q| pop(q as u64) as i32).collect()
    }

    fn advance(&mut self, prev: &[i32]) -> Result<Vec<i32>> {
        self.deadline.check()?;
        let mut g = vec![NEG; self.size];
        for (p, &v) in prev.iter().enumerate() {
            let t = self.kernel.triple(&(p as u64)) as usize;
            if v > g[t] {
                g[t] = v;
            }
        }
        subset_max(&mut g);
        let mask = self.size - 1;
        let next = (0..self.size)
            .into_par_iter()
            .with_min_len(4096)
            .map(|q| g[!q & mask] + pop(q as u64) as i32)
            .collect();
        self.stats.states += self.size as u64;
        self.stats.transitions += (self.size * (self.kernel.width + 2)) as u64;
        Ok(next)
    }

    /// Best final-row value and the smallest row attaining it.
    fn finish(&self, f: &[i32]) -> (i32, usize) {
        let border: u64 = self.kernel.south_border();
        let mut best = (NEG, 0);
        for (q, &v) in f.iter().enumerate() {
            if v > best.0 && self.kernel.blocked(&(q as u64), &border) == 0 {
                best = (v, q);
            }
        }
        best
    }
}

fn prepare(n: usize, limits: &Limits, layers_kept: usize) -> Result<usize> {
    limits.check_cols(Objective::MaxPermissible, n)?;
    let size = 1usize.checked_shl(n as u32).filter(|_| n < 63);
    let bytes = size.and_then(|s| s.checked_mul(4 * (layers_kept + 2)));
    limits.check_bytes(bytes)?;
    Ok(size.unwrap_or(0))
}

/// `E(m, n)` and, if requested, a witness that is both permissible and
/// maximal. Among optimal witnesses the DP picks the numerically smallest
/// row mask at each step, starting from the south row.
pub fn solve_max(req: &SolveRequest) -> Result<SolveResult> {
    if req.objective != Objective::MaxPermissible {
        return Err(Error::InvalidArgument("solve_max needs the max objective".into()));
    }
    let start = Instant::now();
    let (m, n) = (req.dims.rows, req.dims.cols);
    let size = prepare(n, &req.limits, if req.want_witness { m } else { 0 })?;
    let mut stats = Stats::default();
    let mut run = Layers {
        kernel: RowKernel::new(n, req.dims.boundary.fill()),
        size,
        deadline: Deadline::new(&req.limits),
        stats: &mut stats,
    };

    let mut kept: Vec<Vec<i32>> = Vec::new();
    let mut f = run.first();
    for _ in 1..m {
        let next = run.advance(&f)?;
        if req.want_witness {
            kept.push(std::mem::replace(&mut f, next));
        } else {
            f = next;
        }
    }
    let (best, last) = run.finish(&f);
    let kernel = run.kernel;
    if best < 0 {
        return Err(Error::InvalidArgument("no permissible configuration".into()));
    }

    let witness = if req.want_witness {
        let mut rows = vec![0u64; m];
        rows[m - 1] = last as u64;
        let mut target = best;
        for i in (0..m - 1).rev() {
            let q = rows[i + 1];
            let want = target - pop(q) as i32;
            let layer = &kept[i];
            let p = (0..size)
                .find(|&p| {
                    layer[p] == want && kernel.triple(&(p as u64)) & q == 0
                })
                .expect("DP layers are consistent");
            rows[i] = p as u64;
            target = want;
        }
        Some(Configuration::from_masks(req.dims, &rows)?)
    } else {
        None
    };
    stats.elapsed = start.elapsed();
    Ok(SolveResult {
        optimum: best as u64,
        witness,
        stats,
    })
}

/// `E(m, n)` for every `m` in `1..=m_max` from a single sweep; entry `k` is
/// `E(k + 1, n)`.
pub fn max_by_rows(
    n: usize,
    m_max: usize,
    boundary: BoundaryMode,
    limits: &Limits,
) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::EmptyGrid { rows: m_max, cols: n });
    }
    let size = prepare(n, limits, 0)?;
    let mut stats = Stats::default();
    let mut run = Layers {
        kernel: RowKernel::new(n, boundary.fill()),
        size,
        deadline: Deadline::new(limits),
        stats: &mut stats,
    };
    let mut out = Vec::with_capacity(m_max);
    let mut f = Vec::new();
    for m in 1..=m_max {
        f = if m == 1 { run.first() } else { run.advance(&f)? };
        out.push(run.finish(&f).0.max(0) as u64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Dims;

    fn e(m: usize, n: usize) -> u64 {
        let req = SolveRequest::new(Dims::free(m, n).unwrap(), Objective::MaxPermissible);
        let r = solve_max(&req).unwrap();
        let w = r.witness.unwrap();
        assert!(w.is_maximal());
        assert_eq!(w.occupancy(), r.optimum);
        r.optimum
    }

    #[test]
    fn small_values() {
        assert_eq!(e(2, 2), 4);
        assert_eq!(e(2, 3), 5);
        assert_eq!(e(4, 4), 13);
        assert_eq!(e(3, 7), 17);
        assert_eq!(e(4, 7), 22);
        assert_eq!(e(5, 10), 39);
        assert_eq!(e(7, 1), 7);
        assert_eq!(e(1, 5), 5);
    }

    #[test]
    fn sweep_matches_single_solves() {
        let sweep = max_by_rows(6, 8, BoundaryMode::Bricked, &Limits::default()).unwrap();
        for (k, &v) in sweep.iter().enumerate() {
            let dims = Dims::new(k + 1, 6, BoundaryMode::Bricked).unwrap();
            let req = SolveRequest::new(dims, Objective::MaxPermissible);
            assert_eq!(solve_max(&req).unwrap().optimum, v);
        }
    }

    #[test]
    fn caps_and_budgets() {
        let dims = Dims::free(2, 30).unwrap();
        let req = SolveRequest::new(dims, Objective::MaxPermissible);
        assert!(matches!(
            solve_max(&req),
            Err(Error::ColumnCap { cols: 30, cap: 24 })
        ));
        let tight = Limits {
            max_state_bytes: Some(1024),
            ..Limits::default()
        };
        let req = SolveRequest::new(Dims::free(4, 12).unwrap(), Objective::MaxPermissible)
            .with_limits(tight);
        assert!(matches!(solve_max(&req), Err(Error::LimitExceeded(_))));
    }
}
