//! Smallest maximal configuration, checked against the brute-force oracle
//! when the grid is small enough.
//!
//! cargo run --release --example solve_inefficient [ROWS COLS]

use settle::bounds::i_lower_bound;
use settle::io::{render, RenderStyle};
use settle::solvers::{brute_force, solve, Objective, SolveRequest, BRUTE_FORCE_MAX_LOTS};
use settle::Dims;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (m, n) = match args[..] {
        [m, n] => (m, n),
        _ => (4, 5),
    };
    let req = SolveRequest::new(Dims::free(m, n)?, Objective::MinMaximal);
    let r = solve(&req)?;
    println!("I {m}x{n} = {} (lower bound {})", r.optimum, i_lower_bound(m, n)?);
    if let Some(w) = &r.witness {
        print!("{}", render(w, RenderStyle::AsciiPlain));
    }
    if m * n <= BRUTE_FORCE_MAX_LOTS {
        let oracle = brute_force(&req)?;
        println!("brute force agrees: {}", oracle.optimum == r.optimum);
    }
    Ok(())
}
