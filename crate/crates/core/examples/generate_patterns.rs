//! Every pattern on one grid, with occupancy and density.
//!
//! cargo run --example generate_patterns [ROWS COLS]

use settle::io::{render, RenderStyle};
use settle::patterns::{generate_pattern, pattern_occupancy, PatternKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (m, n) = match args[..] {
        [m, n] => (m, n),
        _ => (6, 8),
    };
    for kind in PatternKind::ALL {
        let grid = generate_pattern(kind, m, n)?;
        println!(
            "{kind}: occupancy {} (formula {}), density {}",
            grid.occupancy(),
            pattern_occupancy(kind, m, n)?,
            grid.density()
        );
        print!("{}", render(&grid, RenderStyle::AsciiPlain));
        println!();
    }
    Ok(())
}
