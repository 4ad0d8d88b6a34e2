//! The `(m, n)` quandle and biquandle polynomials and their matrices.
//!
//! For an element `x` and an operation `op` define
//!
//! * `c_m(x) = |{ y : op^m(y, x) = y }|`, fixed points of the `m`-th power
//!   of the column permutation of `x`;
//! * `r_n(x) = |{ y : op^n(x, y) = x }|`, the columns whose `n`-th power
//!   fixes `x`.
//!
//! The `(m, n)` polynomial sums `s^{r_n(x)} t^{c_m(x)}` over all `x`
//! (one `s_i, t_i` pair per operation for biquandles). With this indexing
//! the first index moves the `t` exponents and the second the `s`
//! exponents, so that entry `(i, j)` of the polynomial matrix is the
//! `(i-1, j-1)` polynomial.
//!
//! Counting uses the cycle structure of each column: `op^k(x, y) = x`
//! exactly when the cycle of `x` under the column of `y` has length
//! dividing `k`. That makes every count `O(n)` and handles negative
//! indices directly.

use crate::algebra::{check_set, Algebra, BiquandleTable, ElementSet, QuandleTable};
use crate::error::{Error, Result};
use crate::perm::lcm_checked;
use crate::poly::{Monomial, Poly, PolyMatrix};

/// Fixed-point counts of one element for a given `(m, n)`, one entry per
/// operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementProfile {
    /// 1-based element.
    pub element: usize,
    pub m: i64,
    pub n: i64,
    /// `r_n(x)` per operation.
    pub r: Vec<usize>,
    /// `c_m(x)` per operation.
    pub c: Vec<usize>,
}

impl ElementProfile {
    fn monomial(&self) -> Monomial {
        let exps = self.r.iter().chain(&self.c).map(|&v| v as u32).collect();
        Monomial::new(exps)
    }
}

/// # Panics
/// Panics if a column of `alg` is not a permutation or `x` is out of
/// range.
pub fn profile<A: Algebra + ?Sized>(alg: &A, x: usize, m: i64, n: i64) -> ElementProfile {
    assert!((1..=alg.order()).contains(&x), "element {x} out of range");
    let x0 = x - 1;
    let size = alg.order();
    let mut r = Vec::with_capacity(alg.operations().len());
    let mut c = Vec::with_capacity(alg.operations().len());
    for op in alg.operations() {
        r.push((0..size).filter(|&y| op.iterate_fixes(x0, y, n)).count());
        c.push((0..size).filter(|&y| op.iterate_fixes(y, x0, m)).count());
    }
    ElementProfile {
        element: x,
        m,
        n,
        r,
        c,
    }
}

fn sum_over<A: Algebra + ?Sized>(
    alg: &A,
    elements: impl Iterator<Item = usize>,
    m: i64,
    n: i64,
) -> Poly {
    let mut p = Poly::zero(alg.kind());
    for x in elements {
        p.add_term(profile(alg, x, m, n).monomial(), 1)
            .expect("coefficients bounded by the table size");
    }
    p
}

/// The `(m, n)` polynomial of either kind of table.
pub fn polynomial<A: Algebra + ?Sized>(alg: &A, m: i64, n: i64) -> Poly {
    sum_over(alg, 1..=alg.order(), m, n)
}

/// `qp_{m,n}` in the variables `s, t`.
pub fn qp(t: &QuandleTable, m: i64, n: i64) -> Poly {
    polynomial(t, m, n)
}

/// `bp_{m,n}` in the variables `s_1..s_4, t_1..t_4`.
pub fn bp(t: &BiquandleTable, m: i64, n: i64) -> Poly {
    polynomial(t, m, n)
}

/// Contribution of a closed subset to the `(m, n)` polynomial; the counts
/// still range over the whole table.
pub fn sub_polynomial<A: Algebra + ?Sized>(
    alg: &A,
    set: &ElementSet,
    m: i64,
    n: i64,
) -> Result<Poly> {
    check_set(alg, set)?;
    if !crate::algebra::closure(alg, set)?.eq(set) {
        return Err(Error::NotClosed(format!(
            "{set} is not closed under the operations"
        )));
    }
    Ok(sum_over(alg, set.iter(), m, n))
}

pub fn sqp(t: &QuandleTable, set: &ElementSet, m: i64, n: i64) -> Result<Poly> {
    sub_polynomial(t, set, m, n)
}

pub fn sbp(t: &BiquandleTable, set: &ElementSet, m: i64, n: i64) -> Result<Poly> {
    sub_polynomial(t, set, m, n)
}

/// `N`, the lcm of the orders of every column permutation of every
/// operation. Both indices of the polynomials are periodic modulo `N`.
///
/// # Panics
/// Panics if a column is not a permutation.
pub fn period<A: Algebra + ?Sized>(alg: &A) -> Result<u64> {
    let mut acc = 1u64;
    for op in alg.operations() {
        for y in 0..alg.order() {
            let ord = op
                .column_order(y)
                .ok_or(Error::Overflow("column order"))?;
            acc = lcm_checked(acc, ord).ok_or(Error::Overflow("period"))?;
        }
    }
    Ok(acc)
}

/// Largest period for which a full polynomial matrix is built.
pub const MAX_MATRIX_PERIOD: u64 = 4096;

/// The `N x N` matrix whose `(m, n)` entry (0-based) is the `(m, n)`
/// polynomial.
pub fn poly_matrix<A: Algebra + ?Sized>(alg: &A) -> Result<PolyMatrix> {
    let size = matrix_size(alg)?;
    let entries = (0..size)
        .map(|m| {
            (0..size)
                .map(|n| polynomial(alg, m as i64, n as i64))
                .collect()
        })
        .collect();
    PolyMatrix::new(entries)
}

pub(crate) fn matrix_size<A: Algebra + ?Sized>(alg: &A) -> Result<usize> {
    let n = period(alg)?;
    if n > MAX_MATRIX_PERIOD {
        return Err(Error::Parameter(format!(
            "period {n} exceeds the matrix limit {MAX_MATRIX_PERIOD}"
        )));
    }
    Ok(n as usize)
}
