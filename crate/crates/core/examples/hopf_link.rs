//! Biquandle colorings of the Hopf link and the (1,1) subbiquandle
//! invariant.

use quandle_poly::io::read_table;
use quandle_poly::links::{builtin_diagram, colorings, hom_image, phi, phi_matrix, Diagram};
use quandle_poly::Kind;

fn main() {
    let path = format!("{}/data/t_hopf.txt", env!("CARGO_MANIFEST_DIR"));
    let t = read_table(path, Kind::Biquandle).unwrap();
    let pd = builtin_diagram("hopf").unwrap();
    println!("{pd}  ({} components)", pd.component_count());
    let d = Diagram::new(&pd);

    let cs = colorings(&d, &t);
    println!("{} colorings", cs.len());
    for c in &cs {
        println!("  {:?} -> image {}", c.colors, hom_image(c, &t));
    }
    println!("phi_(1,1) = {}", phi(&d, &t, 1, 1).unwrap());

    for (m, row) in phi_matrix(&d, &t).unwrap().iter().enumerate() {
        for (n, ms) in row.iter().enumerate() {
            println!("({m},{n}) {ms}");
        }
    }
}
