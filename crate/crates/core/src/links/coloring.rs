//! Coloring enumeration.
//!
//! Every crossing relation has the form `out = lhs op rhs`, where `op` is
//! one of the table operations or its inverse. Since all columns are
//! permutations, `lhs` is also determined by `out` and `rhs`. The search
//! assigns the lowest unassigned variable, then propagates every relation
//! with two known ends until nothing changes.

use super::diagram::Diagram;
use super::pd::Sign;
use crate::algebra::{Algebra, BiquandleTable, Kind, Operation, QuandleTable};

/// Colors of the arcs (quandle case) or semiarcs (biquandle case), 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
struct Relation {
    out: usize,
    lhs: usize,
    rhs: usize,
    op: usize,
    inverse: bool,
}

fn forward(op: &Operation, inverse: bool, x: usize, y: usize) -> usize {
    if inverse {
        op.apply_inverse(x, y)
    } else {
        op.apply(x, y)
    }
}

fn relations(d: &Diagram, kind: Kind) -> (usize, Vec<Relation>) {
    match kind {
        Kind::Quandle => {
            let rels = d
                .crossings()
                .iter()
                .map(|c| Relation {
                    out: d.arc_of(c.under_out),
                    lhs: d.arc_of(c.under_in),
                    rhs: d.arc_of(c.over_in),
                    op: 0,
                    inverse: c.sign == Sign::Negative,
                })
                .collect();
            (d.arc_count(), rels)
        }
        Kind::Biquandle => {
            // positive: under-out = a^b (op_2), over-out = b_a (op_4);
            // negative: the barred operations op_1 and op_3
            let mut rels = Vec::new();
            for c in d.crossings() {
                let (under, over) = match c.sign {
                    Sign::Positive => (1, 3),
                    Sign::Negative => (0, 2),
                };
                rels.push(Relation {
                    out: c.under_out,
                    lhs: c.under_in,
                    rhs: c.over_in,
                    op: under,
                    inverse: false,
                });
                rels.push(Relation {
                    out: c.over_out,
                    lhs: c.over_in,
                    rhs: c.under_in,
                    op: over,
                    inverse: false,
                });
            }
            (d.semiarc_count(), rels)
        }
    }
}

struct Engine<'a> {
    ops: &'a [Operation],
    order: usize,
    rels: Vec<Relation>,
    /// Relations mentioning each variable.
    watch: Vec<Vec<usize>>,
}

impl Engine<'_> {
    fn set(&self, vals: &mut [Option<usize>], trail: &mut Vec<usize>, v: usize, x: usize) -> bool {
        match vals[v] {
            Some(y) => y == x,
            None => {
                vals[v] = Some(x);
                trail.push(v);
                true
            }
        }
    }

    /// Propagates from the variables in `trail[from..]`; false on conflict.
    fn propagate(&self, vals: &mut [Option<usize>], trail: &mut Vec<usize>, from: usize) -> bool {
        let mut i = from;
        while i < trail.len() {
            let v = trail[i];
            i += 1;
            for &r in &self.watch[v] {
                let rel = self.rels[r];
                let op = &self.ops[rel.op];
                match (vals[rel.lhs], vals[rel.rhs], vals[rel.out]) {
                    (Some(a), Some(b), _) => {
                        if !self.set(vals, trail, rel.out, forward(op, rel.inverse, a, b)) {
                            return false;
                        }
                    }
                    (None, Some(b), Some(z)) => {
                        if !self.set(vals, trail, rel.lhs, forward(op, !rel.inverse, z, b)) {
                            return false;
                        }
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn search(&self, vals: &mut [Option<usize>], out: &mut Vec<Coloring>) {
        let Some(v) = vals.iter().position(Option::is_none) else {
            out.push(Coloring {
                colors: vals.iter().map(|c| c.expect("assigned") + 1).collect(),
            });
            return;
        };
        for x in 0..self.order {
            let mut trial = vals.to_vec();
            let mut trail = Vec::new();
            trial[v] = Some(x);
            trail.push(v);
            if self.propagate(&mut trial, &mut trail, 0) {
                self.search(&mut trial, out);
            }
        }
    }
}

/// All colorings of `d` by `alg`, sorted lexicographically.
///
/// # Panics
/// Panics if some column of `alg` is not a permutation.
pub fn colorings<A: Algebra + ?Sized>(d: &Diagram, alg: &A) -> Vec<Coloring> {
    assert!(
        alg.columns_are_permutations(),
        "coloring needs every column to be a permutation"
    );
    let (vars, rels) = relations(d, alg.kind());
    let mut watch = vec![Vec::new(); vars];
    for (i, r) in rels.iter().enumerate() {
        for v in [r.out, r.lhs, r.rhs] {
            if !watch[v].contains(&i) {
                watch[v].push(i);
            }
        }
    }
    let engine = Engine {
        ops: alg.operations(),
        order: alg.order(),
        rels,
        watch,
    };
    let mut out = Vec::new();
    engine.search(&mut vec![None; vars], &mut out);
    out.sort();
    out
}

pub fn quandle_colorings(d: &Diagram, t: &QuandleTable) -> Vec<Coloring> {
    colorings(d, t)
}

pub fn biquandle_colorings(d: &Diagram, t: &BiquandleTable) -> Vec<Coloring> {
    colorings(d, t)
}
