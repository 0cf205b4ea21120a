//! Analytic bounds next to the exact optima.
//!
//! cargo run --release --example bounds_report [ROWS COLS]

use settle::bounds::BoundsReport;
use settle::solvers::{solve, Objective, SolveRequest};
use settle::Dims;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (m, n) = match args[..] {
        [m, n] => (m, n),
        _ => (9, 10),
    };
    let report = BoundsReport::new(m, n)?;
    print!("{}", report.to_text());
    let dims = Dims::free(m, n)?;
    for objective in [Objective::MinMaximal, Objective::MaxPermissible] {
        match solve(&SolveRequest::new(dims, objective).without_witness()) {
            Ok(r) => println!("  exact {:<16}{:>8}", objective.name(), r.optimum),
            Err(e) => println!("  exact {:<16}{:>8}   {e}", objective.name(), "-"),
        }
    }
    Ok(())
}
