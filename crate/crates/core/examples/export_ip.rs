//! Write both integer programs in LP format and solve the small ones by
//! enumeration.
//!
//! cargo run --example export_ip [ROWS COLS [DIR]]

use std::path::PathBuf;

use settle::modelgen::{export_efficient, export_inefficient};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let m: usize = args.first().map_or(Ok(3), |a| a.parse())?;
    let n: usize = args.get(1).map_or(Ok(4), |a| a.parse())?;
    let dir = args.get(2).map_or_else(std::env::temp_dir, PathBuf::from);
    for (tag, model) in [("max", export_efficient(m, n)?), ("min", export_inefficient(m, n)?)] {
        let path = dir.join(format!("settle_{m}x{n}_{tag}.lp"));
        std::fs::write(&path, model.to_lp())?;
        print!(
            "{tag}: {} variables, {} constraints -> {}",
            model.variables.len(),
            model.constraints.len(),
            path.display()
        );
        match model.optimum_by_enumeration() {
            Ok(Some(v)) => println!(", optimum {v}"),
            Ok(None) => println!(", infeasible"),
            Err(_) => println!(),
        }
    }
    Ok(())
}
