//! Axiom checks for quandle and biquandle tables.
//!
//! Every violation found is reported, not just the first one.

use std::fmt;

use super::{Algebra, BiquandleTable, Operation, QuandleTable};

/// One failed axiom instance.
///
/// `axiom` is a short identifier: `Q1`, `Q2`, `Q3` for the quandle axioms,
/// `B1(i)`..`B4(iii-iv)` for the biquandle axioms and `B<k>-column` for a
/// column of block `k` that is not a permutation. `witness` lists the
/// (1-based) elements exhibiting the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.axiom)?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: &'static str, witness: &[usize]) {
        self.violations.push(Violation {
            axiom,
            witness: witness.iter().map(|w| w + 1).collect(),
        });
    }

    /// Violations of one axiom.
    pub fn of(&self, axiom: &str) -> impl Iterator<Item = &Violation> {
        let axiom = axiom.to_owned();
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid");
        }
        writeln!(f, "invalid: {} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// For each column `y` that is not a permutation, the first element with
/// no preimage.
fn column_defects(op: &Operation, axiom: &'static str, report: &mut ValidationReport) {
    let n = op.order();
    for y in 0..n {
        let mut hit = vec![false; n];
        for x in 0..n {
            hit[op.apply(x, y)] = true;
        }
        if let Some(missing) = hit.iter().position(|h| !h) {
            report.push(axiom, &[y, missing]);
        }
    }
}

/// Checks idempotence (`Q1`, witness `a`), that every column is a
/// permutation (`Q2`, witness `(b, a)` with no `c` such that `c ▷ b = a`)
/// and right self-distributivity (`Q3`, witness `(a, b, c)`).
pub fn validate_quandle(t: &QuandleTable) -> ValidationReport {
    let op = t.operation();
    let n = op.order();
    let mut report = ValidationReport::default();
    for a in 0..n {
        if op.apply(a, a) != a {
            report.push("Q1", &[a]);
        }
    }
    column_defects(op, "Q2", &mut report);
    for a in 0..n {
        for b in 0..n {
            let ab = op.apply(a, b);
            for c in 0..n {
                if op.apply(ab, c) != op.apply(op.apply(a, c), op.apply(b, c)) {
                    report.push("Q3", &[a, b, c]);
                }
            }
        }
    }
    report
}

/// Checks the four biquandle axiom groups by exhaustive evaluation.
///
/// Existence in axiom 2 and existence-and-uniqueness in axiom 4 are decided
/// by searching all of `B`.
pub fn validate_biquandle(t: &BiquandleTable) -> ValidationReport {
    let ops = t.operations();
    let n = t.order();
    let mut report = ValidationReport::default();

    const COLUMN: [&str; 4] = ["B1-column", "B2-column", "B3-column", "B4-column"];
    for (k, op) in ops.iter().enumerate() {
        column_defects(op, COLUMN[k], &mut report);
    }

    // a^{\bar b} , a^b , a_{\bar b} , a_b
    let up_bar = |a: usize, b: usize| ops[0].apply(a, b);
    let up = |a: usize, b: usize| ops[1].apply(a, b);
    let down_bar = |a: usize, b: usize| ops[2].apply(a, b);
    let down = |a: usize, b: usize| ops[3].apply(a, b);

    for a in 0..n {
        for b in 0..n {
            if up_bar(up(a, b), down(b, a)) != a {
                report.push("B1(i)", &[a, b]);
            }
            if down_bar(down(b, a), up(a, b)) != b {
                report.push("B1(ii)", &[a, b]);
            }
            if up(up_bar(a, b), down_bar(b, a)) != a {
                report.push("B1(iii)", &[a, b]);
            }
            if down(down_bar(b, a), up_bar(a, b)) != b {
                report.push("B1(iv)", &[a, b]);
            }
        }
    }

    for a in 0..n {
        for b in 0..n {
            let x_exists = (0..n).any(|x| {
                x == up(a, down_bar(b, x)) && a == up_bar(x, b) && b == down(down_bar(b, x), a)
            });
            if !x_exists {
                report.push("B2(i-iii)", &[a, b]);
            }
            let y_exists = (0..n).any(|y| {
                y == up_bar(a, down(b, y)) && a == up(y, b) && b == down_bar(down(b, y), a)
            });
            if !y_exists {
                report.push("B2(iv-vi)", &[a, b]);
            }
        }
    }

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if up(up(a, b), c) != up(up(a, down(c, b)), up(b, c)) {
                    report.push("B3(i)", &[a, b, c]);
                }
                if down(down(c, b), a) != down(down(c, up(a, b)), down(b, a)) {
                    report.push("B3(ii)", &[a, b, c]);
                }
                if up(down(b, a), down(c, up(a, b))) != down(up(b, c), up(a, down(c, b))) {
                    report.push("B3(iii)", &[a, b, c]);
                }
                if up_bar(up_bar(a, b), c) != up_bar(up_bar(a, down_bar(c, b)), up_bar(b, c)) {
                    report.push("B3(iv)", &[a, b, c]);
                }
                if down_bar(down_bar(c, b), a)
                    != down_bar(down_bar(c, up_bar(a, b)), down_bar(b, a))
                {
                    report.push("B3(v)", &[a, b, c]);
                }
                if up_bar(down_bar(b, a), down_bar(c, up_bar(a, b)))
                    != down_bar(up_bar(b, c), up_bar(a, down_bar(c, b)))
                {
                    report.push("B3(vi)", &[a, b, c]);
                }
            }
        }
    }

    for a in 0..n {
        let xs: Vec<usize> = (0..n)
            .filter(|&x| x == down(a, x) && a == up(x, a))
            .collect();
        if xs.len() != 1 {
            let mut w = vec![a];
            w.extend(&xs);
            report.push("B4(i-ii)", &w);
        }
        let ys: Vec<usize> = (0..n)
            .filter(|&y| y == up_bar(a, y) && a == down_bar(y, a))
            .collect();
        if ys.len() != 1 {
            let mut w = vec![a];
            w.extend(&ys);
            report.push("B4(iii-iv)", &w);
        }
    }
    report
}
