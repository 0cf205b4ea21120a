//! Parse a grid and report blocked houses, addable lots and why each empty
//! lot stays empty.
//!
//! cargo run --example check_grid [FILE]

use settle::io::parse_grid;

const DEFAULT: &str = "\
5 6 free
###.##
#.###.
##.###
#.##.#
######
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let grid = parse_grid(&text)?;
    println!("{}x{} occupancy {}", grid.rows(), grid.cols(), grid.occupancy());
    println!("permissible: {}", grid.is_permissible());
    println!("maximal: {}", grid.is_maximal());
    for at in grid.blocked_houses() {
        println!("blocked house at {at}");
    }
    for i in 1..=grid.rows() {
        for j in 1..=grid.cols() {
            let at = settle::Coord::new(i, j);
            if grid.house(at)? {
                continue;
            }
            let why: Vec<_> = grid.propositions_at(at)?.iter().map(|p| p.tag()).collect();
            if why.is_empty() {
                println!("{at}: addable");
            } else {
                println!("{at}: held empty by {}", why.join(" "));
            }
        }
    }
    Ok(())
}
