use std::collections::BTreeMap;

use super::coloring::{colorings, Coloring};
use super::diagram::Diagram;
use crate::algebra::{closure, Algebra, ElementSet};
use crate::error::Result;
use crate::invariants::{matrix_size, sub_polynomial};
use crate::poly::PolyMultiset;

/// The closed subset generated by the colors a coloring uses.
pub fn hom_image<A: Algebra + ?Sized>(c: &Coloring, alg: &A) -> ElementSet {
    let used = ElementSet::new(alg.order(), c.colors.iter().copied())
        .expect("coloring colors are in range");
    closure(alg, &used).expect("a coloring uses at least one color")
}

/// Images of all colorings, with multiplicities.
fn images<A: Algebra + ?Sized>(d: &Diagram, alg: &A) -> BTreeMap<ElementSet, u64> {
    let mut out = BTreeMap::new();
    for c in colorings(d, alg) {
        *out.entry(hom_image(&c, alg)).or_insert(0) += 1;
    }
    out
}

fn collect<A: Algebra + ?Sized>(
    alg: &A,
    images: &BTreeMap<ElementSet, u64>,
    m: i64,
    n: i64,
) -> Result<PolyMultiset> {
    let mut ms = PolyMultiset::new();
    for (set, &count) in images {
        ms.insert_many(sub_polynomial(alg, set, m, n)?, count);
    }
    Ok(ms)
}

/// `Φ_{m,n}(L, T)`: the multiset of subalgebra polynomials of the images of
/// all colorings.
pub fn phi<A: Algebra + ?Sized>(d: &Diagram, alg: &A, m: i64, n: i64) -> Result<PolyMultiset> {
    collect(alg, &images(d, alg), m, n)
}

/// `phi` for every `0 <= m, n < N`, enumerating colorings once.
pub fn phi_matrix<A: Algebra + ?Sized>(d: &Diagram, alg: &A) -> Result<Vec<Vec<PolyMultiset>>> {
    let size = matrix_size(alg)?;
    let imgs = images(d, alg);
    (0..size)
        .map(|m| {
            (0..size)
                .map(|n| collect(alg, &imgs, m as i64, n as i64))
                .collect()
        })
        .collect()
}
