//! Z_2[t]/(t^2+1) as an Alexander quandle: table, polynomials, matrix.

use quandle_poly::algebra::{alexander_quandle_poly, validate_quandle};
use quandle_poly::invariants::{period, poly_matrix, profile, qp};

fn main() {
    let q = alexander_quandle_poly(2, &[1, 0, 1]).unwrap();
    for (i, l) in q.labels.iter().enumerate() {
        println!("x{} = {l}", i + 1);
    }
    print!("{}", q.table);
    println!("{}", validate_quandle(&q.table));

    for x in 1..=4 {
        let p = profile(&q.table, x, 1, 1);
        println!("x{x}: r_1 = {}, c_1 = {}", p.r[0], p.c[0]);
    }
    for (m, n) in [(0, 0), (0, 1), (1, 0), (1, 1), (-3, 5)] {
        println!("qp_{{{m},{n}}} = {}", qp(&q.table, m, n));
    }
    println!("N = {}", period(&q.table).unwrap());
    print!("{}", poly_matrix(&q.table).unwrap());
}
