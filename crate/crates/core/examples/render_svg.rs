//! Render a pattern as SVG.
//!
//! cargo run --example render_svg [PATTERN ROWS COLS] > grid.svg

use settle::io::{render, RenderStyle};
use settle::patterns::{generate_pattern, PatternKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (kind, m, n) = match &args[..] {
        [k, m, n] => (k.parse::<PatternKind>()?, m.parse()?, n.parse()?),
        _ => (PatternKind::RakeStripe, 6, 8),
    };
    let grid = generate_pattern(kind, m, n)?;
    print!("{}", render(&grid, RenderStyle::Svg));
    eprintln!("{kind} {m}x{n}: occupancy {}", grid.occupancy());
    Ok(())
}
