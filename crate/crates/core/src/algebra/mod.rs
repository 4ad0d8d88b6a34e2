//! Finite quandles and biquandles stored as operation tables.
//!
//! Elements are labelled `1..=n` in every public interface, matching the
//! usual operation-matrix convention where entry `(i, j) = k` means
//! `x_i op x_j = x_k`. Internally tables are kept 0-based.

mod construct;
mod structure;
mod validate;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm;

pub use construct::{
    alexander_biquandle, alexander_quandle, alexander_quandle_poly, conjugation_quandle,
    dihedral_quandle, quandle_to_biquandle, trivial_biquandle, trivial_quandle, Embedding,
    Labelled,
};
pub use structure::{closure, is_latin, orbits};
pub use validate::{validate_biquandle, validate_quandle, ValidationReport, Violation};

/// Which family of algebra a table (or polynomial) belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Quandle,
    Biquandle,
}

impl Kind {
    /// Number of binary operations: one for quandles, four for biquandles.
    pub fn operation_count(self) -> usize {
        match self {
            Kind::Quandle => 1,
            Kind::Biquandle => 4,
        }
    }

    /// Number of polynomial variables (an `s` and a `t` per operation).
    pub fn variable_count(self) -> usize {
        2 * self.operation_count()
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Quandle => f.write_str("quandle"),
            Kind::Biquandle => f.write_str("biquandle"),
        }
    }
}

/// A single binary operation on `0..n`.
///
/// When every column is a permutation (the right translations are
/// bijections) the inverse columns and the per-point cycle lengths of each
/// column are precomputed. Inverse operations are always realised through
/// the inverted columns, never through a separately stored table.
#[derive(Clone, PartialEq, Eq)]
pub struct Operation {
    n: usize,
    /// Row-major, `table[x * n + y] = x op y`.
    table: Vec<u32>,
    /// Column-major, `inverse[y * n + z] = x` with `x op y = z`.
    inverse: Option<Vec<u32>>,
    /// Column-major, `cycle_len[y * n + x]` = length of the cycle of `x`
    /// under the column permutation of `y`.
    cycle_len: Option<Vec<u32>>,
}

impl Operation {
    pub(crate) fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(f(x, y) as u32);
            }
        }
        Self::from_raw(n, table)
    }

    /// `table` is row-major and 0-based, all entries already range checked.
    pub(crate) fn from_raw(n: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let mut op = Operation {
            n,
            table,
            inverse: None,
            cycle_len: None,
        };
        let columns: Vec<Vec<u32>> = (0..n).map(|y| op.column(y)).collect();
        if columns.iter().all(|c| perm::is_permutation(c)) {
            let mut inverse = Vec::with_capacity(n * n);
            let mut cycle_len = Vec::with_capacity(n * n);
            for c in &columns {
                inverse.extend(perm::inverse(c));
                cycle_len.extend(perm::cycle_lengths(c));
            }
            op.inverse = Some(inverse);
            op.cycle_len = Some(cycle_len);
        }
        op
    }

    /// Parses 1-based rows, rejecting jagged or out-of-range input.
    pub(crate) fn from_rows(rows: &[Vec<usize>], what: &str) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Structure(format!("{what} has no rows")));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Structure(format!(
                    "{what}: row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::Structure(format!(
                        "{what}: entry ({}, {}) = {v} is outside 1..={n}",
                        i + 1,
                        j + 1
                    )));
                }
                table.push((v - 1) as u32);
            }
        }
        Ok(Self::from_raw(n, table))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x op y`, 0-based.
    #[inline]
    pub(crate) fn apply(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    /// The unique `x` with `x op y = z`, 0-based.
    ///
    /// # Panics
    /// Panics if the columns are not permutations.
    #[inline]
    pub(crate) fn apply_inverse(&self, z: usize, y: usize) -> usize {
        let inv = self
            .inverse
            .as_ref()
            .expect("inverse operation requires every column to be a permutation");
        inv[y * self.n + z] as usize
    }

    pub(crate) fn column(&self, y: usize) -> Vec<u32> {
        (0..self.n).map(|x| self.table[x * self.n + y]).collect()
    }

    /// Whether every column is a permutation of the underlying set.
    pub fn columns_are_permutations(&self) -> bool {
        self.inverse.is_some()
    }

    /// Length of the cycle through `x` of the column permutation of `y`.
    #[inline]
    pub(crate) fn cycle_len(&self, x: usize, y: usize) -> u32 {
        let lens = self
            .cycle_len
            .as_ref()
            .expect("cycle data requires every column to be a permutation");
        lens[y * self.n + x]
    }

    /// Whether the `k`-fold iterate of the column permutation of `y` fixes `x`.
    #[inline]
    pub(crate) fn iterate_fixes(&self, x: usize, y: usize, k: i64) -> bool {
        k.rem_euclid(self.cycle_len(x, y) as i64) == 0
    }

    /// `x op^k y`, 0-based; negative `k` iterates the inverse operation.
    pub(crate) fn pow(&self, x: usize, y: usize, k: i64) -> usize {
        if self.inverse.is_none() {
            assert!(k >= 0, "negative powers need permutation columns");
            let mut z = x;
            for _ in 0..k {
                z = self.apply(z, y);
            }
            return z;
        }
        let len = self.cycle_len(x, y) as u64;
        let steps = k.unsigned_abs() % len;
        let mut z = x;
        for _ in 0..steps {
            z = if k >= 0 {
                self.apply(z, y)
            } else {
                self.apply_inverse(z, y)
            };
        }
        z
    }

    /// Order of the column permutation of `y`.
    pub(crate) fn column_order(&self, y: usize) -> Option<u64> {
        perm::order(&self.column(y))
    }

    /// Rows as 1-based vectors.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.apply(x, y) + 1).collect())
            .collect()
    }

    /// Relabels elements: `sigma[x]` is the new (0-based) name of `x`.
    pub(crate) fn relabel(&self, sigma: &[usize]) -> Self {
        let n = self.n;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[sigma[x] * n + sigma[y]] = sigma[self.apply(x, y)] as u32;
            }
        }
        Self::from_raw(n, table)
    }

    /// The operation restricted to `members` (0-based, sorted), relabelled
    /// to `0..members.len()` in increasing order. `members` must be closed.
    pub(crate) fn restrict(&self, members: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &m) in members.iter().enumerate() {
            index[m] = i;
        }
        Self::from_fn(members.len(), |a, b| index[self.apply(members[a], members[b])])
    }
}

impl fmt::Debug for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Operation")
            .field("n", &self.n)
            .field("rows", &self.rows())
            .finish()
    }
}

/// Common view over quandle and biquandle tables.
pub trait Algebra {
    fn kind(&self) -> Kind;

    /// The operations in fixed order: `[op]` for a quandle, `[op_1, .., op_4]`
    /// for a biquandle.
    fn operations(&self) -> &[Operation];

    /// Cardinality of the underlying set.
    fn order(&self) -> usize {
        self.operations()[0].order()
    }

    fn columns_are_permutations(&self) -> bool {
        self.operations().iter().all(Operation::columns_are_permutations)
    }
}

/// An `n x n` operation table of a (candidate) finite quandle.
///
/// Construction only checks structure; use [`validate_quandle`] for the
/// axioms.
#[derive(Clone, PartialEq, Eq)]
pub struct QuandleTable {
    op: [Operation; 1],
}

impl QuandleTable {
    /// Builds a table from 1-based rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Ok(QuandleTable {
            op: [Operation::from_rows(&rows, "quandle table")?],
        })
    }

    pub(crate) fn from_operation(op: Operation) -> Self {
        QuandleTable { op: [op] }
    }

    pub fn operation(&self) -> &Operation {
        &self.op[0]
    }

    /// `x ▷ y`, 1-based.
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.op[0].apply(x - 1, y - 1) + 1
    }

    /// `x ▷^k y`, 1-based. Negative `k` iterates `▷^{-1}`.
    ///
    /// # Panics
    /// Panics if `k < 0` and the columns are not permutations.
    pub fn pow(&self, x: usize, y: usize, k: i64) -> usize {
        self.op[0].pow(x - 1, y - 1, k) + 1
    }

    /// `x ▷^{-1} y`, 1-based.
    pub fn inverse(&self, x: usize, y: usize) -> usize {
        self.op[0].apply_inverse(x - 1, y - 1) + 1
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.op[0].rows()
    }

    /// The isomorphic table obtained by renaming `x` to `sigma[x - 1]`
    /// (a 1-based permutation).
    pub fn relabel(&self, sigma: &[usize]) -> Result<Self> {
        let s = zero_based_permutation(sigma, self.order())?;
        Ok(Self::from_operation(self.op[0].relabel(&s)))
    }

    /// Induced table on a closed subset, elements renumbered in increasing
    /// order.
    pub fn subtable(&self, set: &ElementSet) -> Result<Self> {
        let members = closed_members(self, set)?;
        Ok(Self::from_operation(self.op[0].restrict(&members)))
    }
}

impl Algebra for QuandleTable {
    fn kind(&self) -> Kind {
        Kind::Quandle
    }

    fn operations(&self) -> &[Operation] {
        &self.op
    }
}

impl fmt::Debug for QuandleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("QuandleTable").field(&self.rows()).finish()
    }
}

impl fmt::Display for QuandleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_matrix(f, &self.rows())
    }
}

/// Four `n x n` blocks `B^1..B^4`, block `k` holding `op_k`, where
/// `op_1(x,y) = x^{\bar y}`, `op_2(x,y) = x^y`, `op_3(x,y) = x_{\bar y}`,
/// `op_4(x,y) = x_y`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiquandleTable {
    ops: [Operation; 4],
}

impl BiquandleTable {
    /// Builds a table from four 1-based blocks.
    pub fn from_blocks(blocks: [Vec<Vec<usize>>; 4]) -> Result<Self> {
        let n = blocks[0].len();
        let mut ops = Vec::with_capacity(4);
        for (k, b) in blocks.iter().enumerate() {
            if b.len() != n {
                return Err(Error::Structure(format!(
                    "block B{} has {} rows, block B1 has {n}",
                    k + 1,
                    b.len()
                )));
            }
            ops.push(Operation::from_rows(b, &format!("block B{}", k + 1))?);
        }
        Ok(Self::from_operations(ops.try_into().expect("four blocks")))
    }

    /// Builds a table from the `2n x 2n` block matrix
    /// `[[B^1, B^2], [B^3, B^4]]`.
    pub fn from_block_matrix(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 || !size.is_multiple_of(2) {
            return Err(Error::Structure(format!(
                "biquandle block matrix needs an even, nonzero number of rows, got {size}"
            )));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(Error::Structure(format!(
                    "block matrix row {} has {} entries, expected {size}",
                    i + 1,
                    r.len()
                )));
            }
        }
        let n = size / 2;
        let block = |r0: usize, c0: usize| -> Vec<Vec<usize>> {
            rows[r0..r0 + n].iter().map(|r| r[c0..c0 + n].to_vec()).collect()
        };
        Self::from_blocks([block(0, 0), block(0, n), block(n, 0), block(n, n)])
    }

    pub(crate) fn from_operations(ops: [Operation; 4]) -> Self {
        BiquandleTable { ops }
    }

    /// `op_i(x, y)` with `i` in `1..=4` and 1-based elements.
    pub fn get(&self, i: usize, x: usize, y: usize) -> usize {
        self.ops[i - 1].apply(x - 1, y - 1) + 1
    }

    /// `op_i^k(x, y)`, 1-based. Negative `k` inverts the column of `y` in
    /// block `i`.
    pub fn pow(&self, i: usize, x: usize, y: usize, k: i64) -> usize {
        self.ops[i - 1].pow(x - 1, y - 1, k) + 1
    }

    pub fn block(&self, i: usize) -> Vec<Vec<usize>> {
        self.ops[i - 1].rows()
    }

    /// The `2n x 2n` block matrix.
    pub fn block_matrix(&self) -> Vec<Vec<usize>> {
        let b: Vec<_> = (1..=4).map(|i| self.block(i)).collect();
        let mut rows = Vec::with_capacity(2 * self.order());
        for (left, right) in [(&b[0], &b[1]), (&b[2], &b[3])] {
            for (l, r) in left.iter().zip(right) {
                rows.push(l.iter().chain(r).copied().collect());
            }
        }
        rows
    }

    pub fn relabel(&self, sigma: &[usize]) -> Result<Self> {
        let s = zero_based_permutation(sigma, self.order())?;
        Ok(Self::from_operations(self.ops.clone().map(|op| op.relabel(&s))))
    }

    pub fn subtable(&self, set: &ElementSet) -> Result<Self> {
        let members = closed_members(self, set)?;
        Ok(Self::from_operations(
            self.ops.clone().map(|op| op.restrict(&members)),
        ))
    }
}

impl Algebra for BiquandleTable {
    fn kind(&self) -> Kind {
        Kind::Biquandle
    }

    fn operations(&self) -> &[Operation] {
        &self.ops
    }
}

impl fmt::Debug for BiquandleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("BiquandleTable")
            .field(&self.block_matrix())
            .finish()
    }
}

impl fmt::Display for BiquandleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_matrix(f, &self.block_matrix())
    }
}

/// Either kind of table, for callers that decide the kind at runtime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Table {
    Quandle(QuandleTable),
    Biquandle(BiquandleTable),
}

impl Table {
    pub fn validate(&self) -> ValidationReport {
        match self {
            Table::Quandle(q) => validate_quandle(q),
            Table::Biquandle(b) => validate_biquandle(b),
        }
    }
}

impl Algebra for Table {
    fn kind(&self) -> Kind {
        match self {
            Table::Quandle(_) => Kind::Quandle,
            Table::Biquandle(_) => Kind::Biquandle,
        }
    }

    fn operations(&self) -> &[Operation] {
        match self {
            Table::Quandle(q) => q.operations(),
            Table::Biquandle(b) => b.operations(),
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Table::Quandle(q) => q.fmt(f),
            Table::Biquandle(b) => b.fmt(f),
        }
    }
}

impl From<QuandleTable> for Table {
    fn from(q: QuandleTable) -> Self {
        Table::Quandle(q)
    }
}

impl From<BiquandleTable> for Table {
    fn from(b: BiquandleTable) -> Self {
        Table::Biquandle(b)
    }
}

/// A subset of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    order: usize,
    members: BTreeSet<usize>,
}

impl ElementSet {
    pub fn new(order: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&m| m == 0 || m > order) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order,
            });
        }
        Ok(ElementSet { order, members })
    }

    pub fn full(order: usize) -> Self {
        ElementSet {
            order,
            members: (1..=order).collect(),
        }
    }

    /// Cardinality of the ambient set.
    pub fn parent_order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn zero_based(&self) -> Vec<usize> {
        self.iter().map(|m| m - 1).collect()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

fn zero_based_permutation(sigma: &[usize], n: usize) -> Result<Vec<usize>> {
    if sigma.len() != n {
        return Err(Error::Parameter(format!(
            "relabelling has {} entries, table has {n} elements",
            sigma.len()
        )));
    }
    let s: Vec<u32> = sigma
        .iter()
        .map(|&v| v.wrapping_sub(1) as u32)
        .collect();
    if sigma.iter().any(|&v| v == 0 || v > n) || !perm::is_permutation(&s) {
        return Err(Error::Parameter(
            "relabelling is not a permutation of 1..=n".into(),
        ));
    }
    Ok(s.into_iter().map(|v| v as usize).collect())
}

fn closed_members<A: Algebra>(alg: &A, set: &ElementSet) -> Result<Vec<usize>> {
    check_set(alg, set)?;
    if !structure::is_closed(alg, set) {
        return Err(Error::NotClosed(format!("{set} is not a subalgebra")));
    }
    Ok(set.zero_based())
}

pub(crate) fn check_set<A: Algebra + ?Sized>(alg: &A, set: &ElementSet) -> Result<()> {
    if set.parent_order() != alg.order() {
        return Err(Error::Parameter(format!(
            "element set lives in a set of order {}, table has order {}",
            set.parent_order(),
            alg.order()
        )));
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

fn write_matrix(f: &mut fmt::Formatter<'_>, rows: &[Vec<usize>]) -> fmt::Result {
    let width = rows.len().to_string().len();
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(f, "{}", line.join(" "))?;
    }
    Ok(())
}
