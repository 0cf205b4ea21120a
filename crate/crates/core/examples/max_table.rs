//! The maximum-occupancy table for 2..16 x 2..16.
//!
//! cargo run --release --example max_table

use std::time::Instant;

use settle::solvers::{table, Limits, Objective};
use settle::BoundaryMode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = Instant::now();
    let t = table(Objective::MaxPermissible, 2..=16, 2..=16, BoundaryMode::Free, &Limits::default())?;
    print!("{}", t.to_text());
    println!("{} cells in {:.2?}", 15 * 15, start.elapsed());
    Ok(())
}
