//! Alexander biquandles, their polynomial matrices, and a quandle viewed
//! as a biquandle.

use quandle_poly::algebra::{
    alexander_biquandle, dihedral_quandle, quandle_to_biquandle, validate_biquandle, Embedding,
};
use quandle_poly::invariants::{bp, poly_matrix, qp};
use quandle_poly::poly::Var;

fn main() {
    let z4 = alexander_biquandle(4, 3, 1).unwrap();
    println!("Z_4, s=3, t=1, elements {:?}", z4.labels);
    print!("{}", z4.table);
    println!("{}", validate_biquandle(&z4.table));
    print!("{}", poly_matrix(&z4.table).unwrap());

    let z3 = alexander_biquandle(3, 2, 1).unwrap().table;
    println!("Z_3, s=2, t=1: bp_{{1,1}} = {}", bp(&z3, 1, 1));

    // s_2 = s, t_2 = t, everything else 1 recovers qp
    let r3 = dihedral_quandle(3).unwrap().table;
    for e in Embedding::ALL {
        let b = quandle_to_biquandle(&r3, e);
        println!("R3 as {e:?}: valid={} bp_{{1,1}} = {}", validate_biquandle(&b).is_valid(), bp(&b, 1, 1));
    }
    let b = quandle_to_biquandle(&r3, Embedding::Upper);
    let one = |v| (v, 1);
    let p = bp(&b, 1, 1)
        .specialize(&[Var::Si(1), Var::Si(3), Var::Si(4), Var::Ti(1), Var::Ti(3), Var::Ti(4)].map(one))
        .unwrap();
    println!("specialized: {p}   qp_{{1,1}}(R3) = {}", qp(&r3, 1, 1));
}
