//! Exact isomorphism testing for finite quandles and biquandles.
//!
//! Backtracking over bijections with two kinds of pruning: an element may
//! only map to an element with the same fixed-point profile (all `r_k`,
//! `c_k` for `0 <= k < N`, per operation), and every forced image
//! `φ(a op b) = φ(a) op φ(b)` is propagated as soon as both arguments are
//! mapped.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::invariants::period;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// `witness[x - 1] = φ(x)`, 1-based, when isomorphic.
    pub witness: Option<Vec<usize>>,
}

impl IsoResult {
    fn no() -> Self {
        IsoResult {
            isomorphic: false,
            witness: None,
        }
    }
}

type Signature = Vec<u32>;

fn signatures<A: Algebra + ?Sized>(alg: &A, period: u64) -> Vec<Signature> {
    let n = alg.order();
    (0..n)
        .map(|x| {
            let mut sig = Vec::new();
            for op in alg.operations() {
                for k in 0..period as i64 {
                    sig.push((0..n).filter(|&y| op.iterate_fixes(x, y, k)).count() as u32);
                    sig.push((0..n).filter(|&y| op.iterate_fixes(y, x, k)).count() as u32);
                }
            }
            sig
        })
        .collect()
}

struct Search<'a, A: ?Sized, B: ?Sized> {
    a: &'a A,
    b: &'a B,
    sig_a: Vec<Signature>,
    sig_b: Vec<Signature>,
    order: Vec<usize>,
}

#[derive(Clone)]
struct State {
    fwd: Vec<Option<usize>>,
    bwd: Vec<Option<usize>>,
    assigned: Vec<usize>,
}

impl<A: Algebra + ?Sized, B: Algebra + ?Sized> Search<'_, A, B> {
    /// Maps `x` to `y` and closes under the operations. Returns false on
    /// a contradiction.
    fn assign(&self, st: &mut State, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match (st.fwd[x], st.bwd[y]) {
                (Some(fy), _) if fy == y => continue,
                (Some(_), _) | (None, Some(_)) => return false,
                (None, None) => {}
            }
            if self.sig_a[x] != self.sig_b[y] {
                return false;
            }
            st.fwd[x] = Some(y);
            st.bwd[y] = Some(x);
            st.assigned.push(x);
            for i in 0..st.assigned.len() {
                let a = st.assigned[i];
                let fa = st.fwd[a].expect("assigned");
                for (op_a, op_b) in self.a.operations().iter().zip(self.b.operations()) {
                    queue.push((op_a.apply(a, x), op_b.apply(fa, y)));
                    queue.push((op_a.apply(x, a), op_b.apply(y, fa)));
                }
            }
        }
        true
    }

    fn solve(&self, st: State, depth: usize) -> Option<Vec<usize>> {
        let Some(&x) = self.order[depth..].iter().find(|&&x| st.fwd[x].is_none()) else {
            return Some(st.fwd.iter().map(|v| v.expect("complete")).collect());
        };
        let depth = self.order.iter().position(|&o| o == x).expect("present");
        for y in 0..self.b.order() {
            if st.bwd[y].is_some() || self.sig_a[x] != self.sig_b[y] {
                continue;
            }
            let mut next = st.clone();
            if self.assign(&mut next, x, y) {
                if let Some(found) = self.solve(next, depth + 1) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Checks that `phi` (0-based) is a homomorphism for every operation.
fn transports<A: Algebra + ?Sized, B: Algebra + ?Sized>(a: &A, b: &B, phi: &[usize]) -> bool {
    let n = a.order();
    a.operations()
        .iter()
        .zip(b.operations())
        .all(|(op_a, op_b)| {
            (0..n).all(|x| (0..n).all(|y| phi[op_a.apply(x, y)] == op_b.apply(phi[x], phi[y])))
        })
}

/// Decides whether `a` and `b` are isomorphic, returning a verified
/// witness bijection when they are.
pub fn is_isomorphic<A: Algebra + ?Sized, B: Algebra + ?Sized>(a: &A, b: &B) -> Result<IsoResult> {
    if a.kind() != b.kind() {
        return Err(Error::KindMismatch(format!(
            "cannot compare a {} with a {}",
            a.kind(),
            b.kind()
        )));
    }
    let n = a.order();
    if n != b.order() {
        return Ok(IsoResult::no());
    }
    let pa = period(a)?;
    if pa != period(b)? {
        return Ok(IsoResult::no());
    }
    let sig_a = signatures(a, pa);
    let sig_b = signatures(b, pa);

    let mut classes: BTreeMap<&Signature, (usize, usize)> = BTreeMap::new();
    for s in &sig_a {
        classes.entry(s).or_default().0 += 1;
    }
    for s in &sig_b {
        classes.entry(s).or_default().1 += 1;
    }
    if classes.values().any(|(ca, cb)| ca != cb) {
        return Ok(IsoResult::no());
    }

    // most constrained first: ascending profile-class size, then index
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (classes[&sig_a[x]].0, x));

    let search = Search {
        a,
        b,
        sig_a,
        sig_b,
        order,
    };
    let start = State {
        fwd: vec![None; n],
        bwd: vec![None; n],
        assigned: Vec::new(),
    };
    match search.solve(start, 0) {
        Some(phi) => {
            assert!(transports(a, b, &phi), "search produced a non-homomorphism");
            Ok(IsoResult {
                isomorphic: true,
                witness: Some(phi.into_iter().map(|y| y + 1).collect()),
            })
        }
        None => Ok(IsoResult::no()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        alexander_quandle, dihedral_quandle, quandle_to_biquandle, trivial_quandle, Embedding,
        QuandleTable,
    };

    #[test]
    fn relabelled_table_is_isomorphic() {
        let r5 = dihedral_quandle(5).unwrap().table;
        let sigma = [3, 5, 1, 2, 4];
        let other = r5.relabel(&sigma).unwrap();
        let res = is_isomorphic(&r5, &other).unwrap();
        assert!(res.isomorphic);
        let phi = res.witness.unwrap();
        for x in 1..=5 {
            for y in 1..=5 {
                assert_eq!(phi[r5.get(x, y) - 1], other.get(phi[x - 1], phi[y - 1]));
            }
        }
    }

    #[test]
    fn trivial_and_dihedral_differ() {
        let r3 = dihedral_quandle(3).unwrap().table;
        let t3 = trivial_quandle(3);
        assert!(!is_isomorphic(&t3, &r3).unwrap().isomorphic);
    }

    #[test]
    fn alexander_z5_quandles() {
        // t = -1 is the dihedral quandle in another element order;
        // t = 2 has period 4
        let a2 = alexander_quandle(5, 2).unwrap().table;
        let a4 = alexander_quandle(5, 4).unwrap().table;
        let r5 = dihedral_quandle(5).unwrap().table;
        assert!(is_isomorphic(&a4, &r5).unwrap().isomorphic);
        assert!(!is_isomorphic(&a2, &r5).unwrap().isomorphic);
    }

    #[test]
    fn kind_mismatch() {
        let q: QuandleTable = trivial_quandle(2);
        let b = quandle_to_biquandle(&q, Embedding::Upper);
        assert!(matches!(is_isomorphic(&q, &b), Err(Error::KindMismatch(_))));
    }

    #[test]
    fn different_orders_are_not_isomorphic() {
        let res = is_isomorphic(&trivial_quandle(2), &trivial_quandle(3)).unwrap();
        assert_eq!(res, IsoResult::no());
    }
}
