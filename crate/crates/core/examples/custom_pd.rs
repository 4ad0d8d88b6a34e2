//! Reads a signed PD code (argument or stdin) and prints its presentation
//! and Fox coloring counts.
//!
//!     cargo run --example custom_pd -- "X+[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]"

use std::io::Read;

use quandle_poly::algebra::dihedral_quandle;
use quandle_poly::links::{parse_pd, quandle_colorings, Diagram};

fn main() {
    let text = match std::env::args().nth(1) {
        Some(t) => t,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).unwrap();
            s
        }
    };
    let pd = match parse_pd(&text) {
        Ok(pd) => pd,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    let d = Diagram::new(&pd);
    println!("{} crossings, {} components", pd.crossings().len(), pd.component_count());
    println!("{}", d.presentation());
    for p in [3, 5, 7] {
        let r = dihedral_quandle(p).unwrap().table;
        println!("R{p}: {} colorings", quandle_colorings(&d, &r).len());
    }
}
