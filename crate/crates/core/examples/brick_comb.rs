//! Search column splits into brick and comb blocks for the best layout.
//!
//! cargo run --release --example brick_comb [ROWS COLS MAX_SEGMENTS]

use settle::io::{render, RenderStyle};
use settle::patterns::{brick_comb_best, generate_pattern, PatternKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (m, n, k) = match args[..] {
        [m, n, k] => (m, n, k),
        _ => (5, 10, 4),
    };
    let (grid, spec) = brick_comb_best(m, n, k)?;
    println!("best layout {spec}: occupancy {}", grid.occupancy());
    print!("{}", render(&grid, RenderStyle::AsciiPlain));
    let brick = generate_pattern(PatternKind::Brick, m, n)?.occupancy();
    let comb = generate_pattern(PatternKind::Comb, m, n)?.occupancy();
    println!("plain brick {brick}, plain comb {comb}");
    Ok(())
}
