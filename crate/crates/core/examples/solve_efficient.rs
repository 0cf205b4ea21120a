//! Largest permissible configuration, for both border modes.
//!
//! cargo run --release --example solve_efficient [ROWS COLS]

use settle::io::{render, RenderStyle};
use settle::solvers::{solve, Objective, SolveRequest};
use settle::{BoundaryMode, Dims};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (m, n) = match args[..] {
        [m, n] => (m, n),
        _ => (7, 9),
    };
    for boundary in [BoundaryMode::Free, BoundaryMode::Bricked] {
        let req = SolveRequest::new(Dims::new(m, n, boundary)?, Objective::MaxPermissible);
        let r = solve(&req)?;
        println!(
            "E {m}x{n} ({boundary}) = {}  [{} states, {:.2?}]",
            r.optimum, r.stats.states, r.stats.elapsed
        );
        if let Some(w) = r.witness {
            print!("{}", render(&w, RenderStyle::AsciiPlain));
        }
    }
    Ok(())
}
