//! The three Latin quandles of order 5. Two share a polynomial matrix but
//! are not isomorphic.

use quandle_poly::algebra::{is_latin, QuandleTable};
use quandle_poly::invariants::{period, poly_matrix, qp};
use quandle_poly::io::read_table;
use quandle_poly::iso::is_isomorphic;
use quandle_poly::{Kind, Table};

fn load(name: &str) -> QuandleTable {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    match read_table(path, Kind::Quandle).unwrap() {
        Table::Quandle(q) => q,
        Table::Biquandle(_) => unreachable!(),
    }
}

fn main() {
    let qs: Vec<QuandleTable> = (1..=3).map(|i| load(&format!("latin5_{i}.txt"))).collect();
    for (i, q) in qs.iter().enumerate() {
        println!("Q{}: latin={} N={} qp_{{1,1}}={}", i + 1, is_latin(q), period(q).unwrap(), qp(q, 1, 1));
        print!("{}", poly_matrix(q).unwrap());
    }
    let same = poly_matrix(&qs[0]).unwrap() == poly_matrix(&qs[1]).unwrap();
    println!("M(Q1) == M(Q2): {same}");
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        println!("Q{} ≅ Q{}: {}", a + 1, b + 1, is_isomorphic(&qs[a], &qs[b]).unwrap().isomorphic);
    }
}
