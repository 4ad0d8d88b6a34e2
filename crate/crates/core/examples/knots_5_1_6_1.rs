//! 5_1 and 6_1 have the same coloring count by T' and the same (1,1)
//! value; m = 2 separates them.

use quandle_poly::algebra::orbits;
use quandle_poly::io::read_table;
use quandle_poly::links::{builtin_diagram, colorings, phi, Diagram};
use quandle_poly::Kind;

fn main() {
    let path = format!("{}/data/tprime.txt", env!("CARGO_MANIFEST_DIR"));
    let t = read_table(path, Kind::Quandle).unwrap();
    let quandle_poly::Table::Quandle(tq) = &t else { unreachable!() };
    println!("orbits: {:?}", orbits(tq).iter().map(ToString::to_string).collect::<Vec<_>>());

    let k5 = Diagram::new(&builtin_diagram("knot_5_1").unwrap());
    let k6 = Diagram::new(&builtin_diagram("knot_6_1").unwrap());
    println!("|Hom(5_1)| = {}, |Hom(6_1)| = {}", colorings(&k5, &t).len(), colorings(&k6, &t).len());
    println!("(1,1): {}", phi(&k5, &t, 1, 1).unwrap());
    println!("       {}", phi(&k6, &t, 1, 1).unwrap());
    for n in 0..4 {
        println!("n={n}");
        println!("  5_1 {}", phi(&k5, &t, 2, n).unwrap());
        println!("  6_1 {}", phi(&k6, &t, 2, n).unwrap());
    }
}
