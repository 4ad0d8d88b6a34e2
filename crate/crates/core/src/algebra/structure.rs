use super::{check_set, Algebra, ElementSet, QuandleTable};
use crate::error::Result;

/// Smallest superset of `seed` closed under every operation of `alg`.
///
/// Each right translation is injective, so on a finite closed subset it is
/// a bijection; the result is therefore closed under the inverse
/// operations as well.
pub fn closure<A: Algebra + ?Sized>(alg: &A, seed: &ElementSet) -> Result<ElementSet> {
    check_set(alg, seed)?;
    let n = alg.order();
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    for x in seed.zero_based() {
        inside[x] = true;
        members.push(x);
        queue.push(x);
    }
    while let Some(x) = queue.pop() {
        // combine the new element with everything already present,
        // including itself, in both argument positions
        let snapshot = members.len();
        for i in 0..snapshot {
            let y = members[i];
            for op in alg.operations() {
                for z in [op.apply(x, y), op.apply(y, x)] {
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                        queue.push(z);
                    }
                }
            }
        }
    }
    ElementSet::new(n, members.into_iter().map(|m| m + 1))
}

pub(crate) fn is_closed<A: Algebra + ?Sized>(alg: &A, set: &ElementSet) -> bool {
    let members = set.zero_based();
    members.iter().all(|&a| {
        members.iter().all(|&b| {
            alg.operations()
                .iter()
                .all(|op| set.contains(op.apply(a, b) + 1))
        })
    })
}

/// Orbits of the right action `x ↦ x op y` (all operations, all `y`),
/// each sorted, ordered by least element.
pub fn orbits<A: Algebra + ?Sized>(alg: &A) -> Vec<ElementSet> {
    let n = alg.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for op in alg.operations() {
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, op.apply(x, y)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        if slot[r] == usize::MAX {
            slot[r] = parts.len();
            parts.push(Vec::new());
        }
        parts[slot[r]].push(x + 1);
    }
    parts
        .into_iter()
        .map(|p| ElementSet::new(n, p).expect("in range"))
        .collect()
}

/// Whether every row (as well as every column) is a permutation.
pub fn is_latin(t: &QuandleTable) -> bool {
    let op = t.operation();
    let n = op.order();
    op.columns_are_permutations()
        && (0..n).all(|x| {
            let row: Vec<u32> = (0..n).map(|y| op.apply(x, y) as u32).collect();
            crate::perm::is_permutation(&row)
        })
}
