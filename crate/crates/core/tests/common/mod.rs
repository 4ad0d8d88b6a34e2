#![allow(dead_code)]

use quandle_poly::algebra::{
    alexander_biquandle, alexander_quandle, alexander_quandle_poly, conjugation_quandle,
    dihedral_quandle, quandle_to_biquandle, trivial_biquandle, trivial_quandle, validate_quandle,
    BiquandleTable, Embedding, QuandleTable,
};
use quandle_poly::io::read_table;
use quandle_poly::{Kind, Table};

pub fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn quandle_file(name: &str) -> QuandleTable {
    match read_table(data(name), Kind::Quandle).unwrap() {
        Table::Quandle(q) => q,
        Table::Biquandle(_) => unreachable!(),
    }
}

pub fn biquandle_file(name: &str) -> BiquandleTable {
    match read_table(data(name), Kind::Biquandle).unwrap() {
        Table::Biquandle(b) => b,
        Table::Quandle(_) => unreachable!(),
    }
}

/// Multiplication table of S_3, elements numbered by the position of the
/// permutation in lexicographic order; `(a * b)(i) = a(b(i))`.
pub fn s3_rows() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap() + 1;
    perms
        .iter()
        .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
        .collect()
}

/// Every quandle structure on `1..=n`: each column is a permutation fixing
/// its own index, filtered by self-distributivity.
pub fn all_quandles(n: usize) -> Vec<QuandleTable> {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let all = permutations(n);
    let perms_fixing = |y: usize| -> Vec<Vec<usize>> {
        all.iter().filter(|p| p[y] == y).cloned().collect()
    };
    let choices: Vec<Vec<Vec<usize>>> = (0..n).map(perms_fixing).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; n];
    loop {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| choices[y][pick[y]][x] + 1).collect())
            .collect();
        let q = QuandleTable::from_rows(rows).unwrap();
        if validate_quandle(&q).is_valid() {
            out.push(q);
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn units(n: usize) -> Vec<i64> {
    (1..n as i64)
        .filter(|&t| (1..n as i64).any(|u| (t * u) % n as i64 == 1))
        .collect()
}

/// Valid quandles of order at most 6, plus the five-element Latin ones.
pub fn quandle_corpus() -> Vec<(String, QuandleTable)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("trivial{n}"), trivial_quandle(n)));
    }
    for n in 3..=6 {
        out.push((format!("R{n}"), dihedral_quandle(n).unwrap().table));
    }
    for n in 3..=6 {
        for t in units(n) {
            out.push((format!("Z{n}[t={t}]"), alexander_quandle(n, t).unwrap().table));
        }
    }
    out.push((
        "Z2[t]/(t^2+1)".into(),
        alexander_quandle_poly(2, &[1, 0, 1]).unwrap().table,
    ));
    out.push((
        "Z2[t]/(t^2+t+1)".into(),
        alexander_quandle_poly(2, &[1, 1, 1]).unwrap().table,
    ));
    for k in [1, 2] {
        out.push((format!("S3^{k}"), conjugation_quandle(s3_rows(), k).unwrap().table));
    }
    for i in 1..=3 {
        out.push((format!("latin5_{i}"), quandle_file(&format!("latin5_{i}.txt"))));
    }
    out
}

pub fn biquandle_corpus() -> Vec<(String, BiquandleTable)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("trivial{n}"), trivial_biquandle(n)));
    }
    for n in 2..=5 {
        for s in units(n) {
            for t in units(n) {
                if let Ok(b) = alexander_biquandle(n, s, t) {
                    out.push((format!("Z{n}[s={s},t={t}]"), b.table));
                }
            }
        }
    }
    out.push(("T".into(), biquandle_file("t_hopf.txt")));
    for (name, q) in quandle_corpus().into_iter().filter(|(_, q)| q.rows().len() <= 4) {
        for e in Embedding::ALL {
            out.push((format!("{name}/{e:?}"), quandle_to_biquandle(&q, e)));
        }
    }
    out
}
