//! Acceptance checks, one line per criterion. Expected values are copied
//! verbatim from the published tables and parsed, never produced by the
//! code under test.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use quandle_poly::algebra::{
    alexander_biquandle, alexander_quandle_poly, is_latin, orbits, quandle_to_biquandle,
    validate_biquandle, validate_quandle, Embedding,
};
use quandle_poly::invariants::{bp, period, poly_matrix, polynomial, qp};
use quandle_poly::iso::is_isomorphic;
use quandle_poly::links::{
    builtin_diagram, colorings, phi, phi_matrix, quandle_colorings, Diagram,
};
use quandle_poly::poly::{Subst, Var};
use quandle_poly::{Algebra, Kind, Poly, PolyMatrix, PolyMultiset};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(text: &str) -> Poly {
    Poly::parse(Kind::Quandle, text).unwrap()
}

fn b(text: &str) -> Poly {
    Poly::parse(Kind::Biquandle, text).unwrap()
}

fn matrix(kind: Kind, rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::new(
        rows.iter()
            .map(|r| r.iter().map(|e| Poly::parse(kind, e).unwrap()).collect())
            .collect(),
    )
    .unwrap()
}

fn c1_alexander_quandle() -> Check {
    let paper = vec![
        vec![1, 4, 4, 1],
        vec![3, 2, 2, 3],
        vec![2, 3, 3, 2],
        vec![4, 1, 1, 4],
    ];
    let built = alexander_quandle_poly(2, &[1, 0, 1]).map_err(|e| e.to_string())?;
    let t = built.table;
    ensure!(t.rows() == paper, "table {:?}", t.rows());
    ensure!(built.labels == ["0", "1", "t", "1+t"], "labels {:?}", built.labels);
    ensure!(validate_quandle(&t).is_valid(), "not a quandle");
    for (m, n, want) in [(0, 0, "4s^4t^4"), (0, 1, "4s^2t^4"), (1, 0, "4s^4t^2"), (1, 1, "4s^2t^2")] {
        ensure!(qp(&t, m, n) == q(want), "qp_{{{m},{n}}} = {}", qp(&t, m, n));
    }
    ensure!(period(&t) == Ok(2), "period");
    let want = matrix(Kind::Quandle, &[&["4s^4t^4", "4s^2t^4"], &["4s^4t^2", "4s^2t^2"]]);
    ensure!(poly_matrix(&t).unwrap() == want, "matrix");
    Ok(())
}

fn c2_table1() -> Check {
    let tabs: Vec<_> = (1..=3)
        .map(|i| common::quandle_file(&format!("latin5_{i}.txt")))
        .collect();
    let big = matrix(
        Kind::Quandle,
        &[
            &["5s^5t^5", "5st^5", "5st^5", "5st^5"],
            &["5s^5t", "5st", "5st", "5st"],
            &["5s^5t", "5st", "5st", "5st"],
            &["5s^5t", "5st", "5st", "5st"],
        ],
    );
    let small = matrix(Kind::Quandle, &[&["5s^5t^5", "5st^5"], &["5s^5t", "5st"]]);
    let expected = [(4, &big), (4, &big), (2, &small)];
    for (i, (t, (p, want))) in tabs.iter().zip(expected).enumerate() {
        ensure!(validate_quandle(t).is_valid(), "Q{} invalid", i + 1);
        ensure!(is_latin(t), "Q{} not Latin", i + 1);
        ensure!(period(t) == Ok(p), "Q{} period {:?}", i + 1, period(t));
        ensure!(&poly_matrix(t).unwrap() == want, "Q{} matrix", i + 1);
    }
    ensure!(poly_matrix(&tabs[0]).unwrap() == poly_matrix(&tabs[1]).unwrap(), "Q1 vs Q2 matrices");
    ensure!(!is_isomorphic(&tabs[0], &tabs[1]).unwrap().isomorphic, "Q1 ≅ Q2");
    Ok(())
}

fn c3_z4_biquandle() -> Check {
    let paper = [
        [3, 1, 3, 1, 3, 1, 3, 1],
        [4, 2, 4, 2, 4, 2, 4, 2],
        [1, 3, 1, 3, 1, 3, 1, 3],
        [2, 4, 2, 4, 2, 4, 2, 4],
        [3, 3, 3, 3, 3, 3, 3, 3],
        [2, 2, 2, 2, 2, 2, 2, 2],
        [1, 1, 1, 1, 1, 1, 1, 1],
        [4, 4, 4, 4, 4, 4, 4, 4],
    ];
    let built = alexander_biquandle(4, 3, 1).unwrap();
    let t = built.table;
    let rows: Vec<Vec<usize>> = paper.iter().map(|r| r.to_vec()).collect();
    ensure!(t.block_matrix() == rows, "block matrix {:?}", t.block_matrix());
    ensure!(built.labels == ["1", "2", "3", "0"], "labels {:?}", built.labels);
    ensure!(validate_biquandle(&t).is_valid(), "not a biquandle");
    let want = matrix(
        Kind::Biquandle,
        &[
            &[
                "4s_1^4t_1^4s_2^4t_2^4s_3^4t_3^4s_4^4t_4^4",
                "2s_1^2t_1^4s_2^2t_2^4t_3^4t_4^4+2s_1^2t_1^4s_2^2t_2^4s_3^4t_3^4s_4^4t_4^4",
            ],
            &[
                "2s_1^4s_2^4s_3^4t_3^2s_4^4t_4^2+2s_1^4t_1^4s_2^4t_2^4s_3^4t_3^2s_4^4t_4^2",
                "2s_1^2s_2^2t_3^2t_4^2+2s_1^2t_1^4s_2^2t_2^4s_3^4t_3^2s_4^4t_4^2",
            ],
        ],
    );
    let got = poly_matrix(&t).unwrap();
    ensure!(got == want, "matrix\n{got}");
    Ok(())
}

fn c4_z3_biquandle() -> Check {
    let t = alexander_biquandle(3, 2, 1).unwrap().table;
    ensure!(
        t.block_matrix() == common::biquandle_file("z3_s2_t1.txt").block_matrix(),
        "block matrix"
    );
    let got = bp(&t, 1, 1);
    ensure!(got == b("2s_1s_2t_3t_4 + s_1t_1^3s_2t_2^3s_3^3t_3s_4^3t_4"), "bp_{{1,1}} = {got}");
    Ok(())
}

fn c5_hopf() -> Check {
    let t = common::biquandle_file("t_hopf.txt");
    ensure!(validate_biquandle(&t).is_valid(), "T invalid");
    let d = Diagram::new(&builtin_diagram("hopf").unwrap());
    let n = colorings(&d, &t).len();
    ensure!(n == 9, "{n} colorings");
    let want = PolyMultiset::parse(
        Kind::Biquandle,
        "q^{s_1^3t_1s_2^3t_2s_3^3t_3s_4^3t_4}\
         +4q^{s_1^3t_1s_2^3t_2s_3^3t_3s_4^3t_4+2s_1^2t_1^3s_2^2t_2^3s_3^2t_3^3s_4^2t_4^3}\
         +2q^{s_1^2t_1^3s_2^2t_2^3s_3^2t_3^3s_4^2t_4^3}\
         +2q^{2s_1^2t_1^3s_2^2t_2^3s_3^2t_3^3s_4^2t_4^3}",
    )
    .unwrap();
    let got = phi(&d, &t, 1, 1).unwrap();
    ensure!(got == want, "phi = {got}");
    ensure!(period(&t) == Ok(2), "period");
    let grid = phi_matrix(&d, &t).unwrap();
    ensure!(grid.len() == 2 && grid.iter().all(|r| r.len() == 2), "matrix shape");
    Ok(())
}

fn c6_knots() -> Check {
    let t = common::quandle_file("tprime.txt");
    let k5 = Diagram::new(&builtin_diagram("knot_5_1").unwrap());
    let k6 = Diagram::new(&builtin_diagram("knot_6_1").unwrap());
    ensure!(k5.pd().crossings().len() == 5 && k6.pd().crossings().len() == 6, "crossing counts");
    let (n5, n6) = (colorings(&k5, &t).len(), colorings(&k6, &t).len());
    ensure!(n5 == 30 && n6 == 30, "counts {n5}, {n6}");
    ensure!(phi(&k5, &t, 1, 1).unwrap() == phi(&k6, &t, 1, 1).unwrap(), "(1,1) values differ");
    let table = [
        ("5q^{s^{10}t^{10}}+20q^{5s^{10}t^{10}}+5q^{s^{10}t^2}", "5q^{s^{10}t^2}+20q^{5s^{10}t^2}+5q^{s^{10}t^{10}}"),
        ("5q^{s^2t^{10}}+20q^{5s^2t^{10}}+5q^{s^2t^2}", "5q^{s^2t^2}+20q^{5s^2t^2}+5q^{s^2t^{10}}"),
        ("5q^{s^6t^{10}}+20q^{5s^6t^{10}}+5q^{s^6t^2}", "5q^{s^6t^2}+20q^{5s^6t^2}+5q^{s^6t^{10}}"),
        ("5q^{s^2t^{10}}+20q^{5s^2t^{10}}+5q^{s^2t^2}", "5q^{s^2t^2}+20q^{5s^2t^2}+5q^{s^2t^{10}}"),
    ];
    for (n, (w5, w6)) in table.iter().enumerate() {
        let g5 = phi(&k5, &t, 2, n as i64).unwrap();
        let g6 = phi(&k6, &t, 2, n as i64).unwrap();
        ensure!(g5 == PolyMultiset::parse(Kind::Quandle, w5).unwrap(), "5_1, n={n}: {g5}");
        ensure!(g6 == PolyMultiset::parse(Kind::Quandle, w6).unwrap(), "6_1, n={n}: {g6}");
        ensure!(g5 != g6, "n={n} does not separate");
    }
    Ok(())
}

fn c7_specialization() -> Check {
    let mut checked = 0;
    for (name, t) in common::quandle_corpus() {
        for m in -1..3 {
            for n in -1..3 {
                let p = qp(&t, m, n);
                let ones: Vec<(Var, i64)> = Var::all(Kind::Quandle).into_iter().map(|v| (v, 1)).collect();
                ensure!(p.evaluate(&ones) == Ok(t.order() as i64), "{name} ({m},{n})");
                checked += 1;
            }
        }
    }
    for (name, t) in common::biquandle_corpus() {
        for m in -1..3 {
            for n in -1..3 {
                let p = bp(&t, m, n);
                let ones: Vec<(Var, i64)> = Var::all(Kind::Biquandle).into_iter().map(|v| (v, 1)).collect();
                ensure!(p.evaluate(&ones) == Ok(t.order() as i64), "{name} ({m},{n})");
                checked += 1;
            }
        }
    }
    ensure!(checked >= 100, "only {checked} cases");
    Ok(())
}

fn periodic<A: Algebra>(t: &A) -> bool {
    let big = period(t).unwrap() as i64;
    (0..3 * big).all(|m| {
        (0..3 * big).all(|n| polynomial(t, m, n) == polynomial(t, m % big, n % big))
    })
}

fn c7_periodicity() -> Check {
    for (name, t) in common::quandle_corpus() {
        ensure!(periodic(&t), "{name}");
    }
    for (name, t) in common::biquandle_corpus() {
        ensure!(periodic(&t), "{name}");
    }
    Ok(())
}

fn c7_relabelling() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let qs = common::quandle_corpus();
    let bs = common::biquandle_corpus();
    for case in 0..120 {
        let (name, t) = qs.choose(&mut rng).unwrap();
        let mut sigma: Vec<usize> = (1..=t.order()).collect();
        sigma.shuffle(&mut rng);
        ensure!(
            poly_matrix(t).unwrap() == poly_matrix(&t.relabel(&sigma).unwrap()).unwrap(),
            "case {case}: {name} under {sigma:?}"
        );
        let (name, t) = bs.choose(&mut rng).unwrap();
        let mut sigma: Vec<usize> = (1..=t.order()).collect();
        sigma.shuffle(&mut rng);
        ensure!(
            poly_matrix(t).unwrap() == poly_matrix(&t.relabel(&sigma).unwrap()).unwrap(),
            "case {case}: {name} under {sigma:?}"
        );
    }
    Ok(())
}

fn c7_embedding() -> Check {
    let map = [
        Subst::Const(1),
        Subst::Var(Var::S),
        Subst::Const(1),
        Subst::Const(1),
        Subst::Const(1),
        Subst::Var(Var::T),
        Subst::Const(1),
        Subst::Const(1),
    ];
    for (name, t) in common::quandle_corpus() {
        let bq = quandle_to_biquandle(&t, Embedding::Upper);
        let big = period(&t).unwrap() as i64;
        for m in 0..big {
            for n in 0..big {
                let got = bp(&bq, m, n).substitute(Kind::Quandle, &map).unwrap();
                ensure!(got == qp(&t, m, n), "{name} ({m},{n})");
            }
        }
    }
    Ok(())
}

fn c7_reidemeister() -> Check {
    let targets = vec![
        ("R3", quandle_poly::algebra::dihedral_quandle(3).unwrap().table),
        ("Z5 t=2", quandle_poly::algebra::alexander_quandle(5, 2).unwrap().table),
        ("S3", quandle_poly::algebra::conjugation_quandle(common::s3_rows(), 1).unwrap().table),
        ("T'", common::quandle_file("tprime.txt")),
    ];
    let ds: Vec<Diagram> = ["trefoil", "trefoil_r1", "trefoil_r2"]
        .iter()
        .map(|n| Diagram::new(&builtin_diagram(n).unwrap()))
        .collect();
    for (name, t) in &targets {
        let base = phi_matrix(&ds[0], t).unwrap();
        for d in &ds[1..] {
            ensure!(phi_matrix(d, t).unwrap() == base, "{name}");
        }
    }
    Ok(())
}

fn c7_orbits() -> Check {
    let t = common::quandle_file("tprime.txt");
    let parts = orbits(&t);
    ensure!(parts.len() == 2 && parts.iter().all(|p| p.len() == 5), "orbits {parts:?}");
    for k in ["trefoil", "figure8", "knot_5_1", "knot_6_1"] {
        let d = Diagram::new(&builtin_diagram(k).unwrap());
        let whole = quandle_colorings(&d, &t).len();
        let split: usize = parts
            .iter()
            .map(|o| quandle_colorings(&d, &t.subtable(o).unwrap()).len())
            .sum();
        ensure!(whole == split, "{k}: {whole} vs {split}");
    }
    Ok(())
}

/// Exhaustive count over all arc assignments, for the oracle check.
fn brute_count(d: &Diagram, t: &quandle_poly::QuandleTable) -> usize {
    let n = t.order();
    let arcs = d.arc_count();
    (0..n.pow(arcs as u32))
        .filter(|&code| {
            let col: Vec<usize> = (0..arcs).map(|i| code / n.pow(i as u32) % n + 1).collect();
            d.crossings().iter().all(|c| {
                let k = if c.sign == quandle_poly::links::Sign::Positive { 1 } else { -1 };
                col[d.arc_of(c.under_out)]
                    == t.pow(col[d.arc_of(c.under_in)], col[d.arc_of(c.over_in)], k)
            })
        })
        .count()
}

fn c7_oracle() -> Check {
    let targets: Vec<_> = (1..=4).flat_map(common::all_quandles).collect();
    for k in ["unknot", "hopf", "trefoil", "figure8", "trefoil_r1"] {
        let d = Diagram::new(&builtin_diagram(k).unwrap());
        for t in &targets {
            let (fast, slow) = (quandle_colorings(&d, t).len(), brute_count(&d, t));
            ensure!(fast == slow, "{k}: {fast} vs {slow} for {t:?}");
        }
    }
    Ok(())
}

fn main() {
    let criteria: Vec<(&str, fn() -> Check)> = vec![
        ("1 Alexander quandle Z2[t]/(t^2+1)", c1_alexander_quandle),
        ("2 Latin quandles of order 5", c2_table1),
        ("3 Alexander biquandle Z4, s=3, t=1", c3_z4_biquandle),
        ("4 Alexander biquandle Z3, s=2, t=1", c4_z3_biquandle),
        ("5 Hopf link and T", c5_hopf),
        ("6 knots 5_1 and 6_1 with T'", c6_knots),
        ("7a specialization", c7_specialization),
        ("7b periodicity", c7_periodicity),
        ("7c relabelling invariance", c7_relabelling),
        ("7d quandle embedding", c7_embedding),
        ("7e Reidemeister robustness", c7_reidemeister),
        ("7f orbit decomposition", c7_orbits),
        ("7g coloring oracle", c7_oracle),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let result = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match result {
            Ok(()) => println!("PASS {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
