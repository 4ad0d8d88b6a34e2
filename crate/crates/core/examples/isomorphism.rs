//! Relabels a quandle at random and recovers the bijection; then sorts the
//! Alexander quandles of order 7 into isomorphism classes.

use rand::seq::SliceRandom;
use rand::SeedableRng;

use quandle_poly::algebra::{alexander_quandle, conjugation_quandle};
use quandle_poly::iso::is_isomorphic;

fn main() {
    // S_3 with x ▷ y = y^{-1} x y, elements in lexicographic order
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap() + 1;
    let rows = perms
        .iter()
        .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
        .collect();
    let q = conjugation_quandle(rows, 1).unwrap().table;

    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut sigma: Vec<usize> = (1..=6).collect();
    sigma.shuffle(&mut rng);
    let r = q.relabel(&sigma).unwrap();
    let res = is_isomorphic(&q, &r).unwrap();
    println!("sigma   = {sigma:?}");
    println!("witness = {:?}", res.witness.unwrap());

    let mut classes: Vec<Vec<i64>> = Vec::new();
    for t in 2..7 {
        let a = alexander_quandle(7, t).unwrap().table;
        match classes.iter_mut().find(|c| {
            let b = alexander_quandle(7, c[0]).unwrap().table;
            is_isomorphic(&a, &b).unwrap().isomorphic
        }) {
            Some(c) => c.push(t),
            None => classes.push(vec![t]),
        }
    }
    println!("Z_7 Alexander quandles by t: {classes:?}");
}
