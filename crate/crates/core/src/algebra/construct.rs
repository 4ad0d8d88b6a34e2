//! Standard families of quandles and biquandles.
//!
//! Each constructor publishes the element each label stands for through
//! [`Labelled::labels`]: `labels[i - 1]` names `x_i`.

use super::{BiquandleTable, Operation, QuandleTable};
use crate::error::{Error, Result};
use crate::perm::gcd;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labelled<T> {
    pub table: T,
    pub labels: Vec<String>,
}

/// `x ▷ y = x`.
pub fn trivial_quandle(n: usize) -> QuandleTable {
    QuandleTable::from_operation(Operation::from_fn(n, |x, _| x))
}

/// Every operation is the first projection.
pub fn trivial_biquandle(n: usize) -> BiquandleTable {
    let p = Operation::from_fn(n, |x, _| x);
    BiquandleTable::from_operations([p.clone(), p.clone(), p.clone(), p])
}

/// `Z_n` in the order `x_i = i` for `i < n` and `x_n = 0`.
fn zn_index(v: i64, n: i64) -> usize {
    let v = v.rem_euclid(n);
    if v == 0 {
        n as usize - 1
    } else {
        v as usize - 1
    }
}

fn zn_value(index: usize, n: i64) -> i64 {
    (index as i64 + 1) % n
}

fn zn_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| zn_value(i, n as i64).to_string()).collect()
}

fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    let a = a.rem_euclid(n);
    if n == 1 {
        return Some(0);
    }
    (1..n).find(|&b| (a * b).rem_euclid(n) == 1)
}

fn require_unit(name: &str, v: i64, n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::Parameter(format!("modulus must be positive, got {n}")));
    }
    if gcd(v.rem_euclid(n) as u64, n as u64) != 1 {
        return Err(Error::Parameter(format!(
            "{name} = {v} is not invertible modulo {n}"
        )));
    }
    Ok(mod_inverse(v, n).expect("unit has an inverse"))
}

/// The Alexander quandle on `Z_n`, `x ▷ y = t x + (1 - t) y`.
pub fn alexander_quandle(n: usize, t: i64) -> Result<Labelled<QuandleTable>> {
    let m = n as i64;
    require_unit("t", t, m)?;
    let op = Operation::from_fn(n, |x, y| {
        let (a, b) = (zn_value(x, m), zn_value(y, m));
        zn_index(t * a + (1 - t) * b, m)
    });
    Ok(Labelled {
        table: QuandleTable::from_operation(op),
        labels: zn_labels(n),
    })
}

/// The Alexander quandle `Z_p[t] / (f(t))` with `x ▷ y = t x + (1 - t) y`.
///
/// `modulus` lists the coefficients of the monic polynomial `f` from the
/// constant term up. Element `c_0 + c_1 t + ...` has index
/// `1 + c_0 + c_1 p + c_2 p^2 + ...`, so for `Z_2[t]/(t^2 + 1)` the order
/// is `0, 1, t, 1 + t`.
pub fn alexander_quandle_poly(p: u32, modulus: &[i64]) -> Result<Labelled<QuandleTable>> {
    if p < 2 {
        return Err(Error::Parameter(format!("characteristic must be >= 2, got {p}")));
    }
    let pm = p as i64;
    let f: Vec<i64> = modulus.iter().map(|c| c.rem_euclid(pm)).collect();
    let d = f.len().saturating_sub(1);
    if d == 0 || f[d] != 1 {
        return Err(Error::Parameter(
            "modulus must be monic of degree >= 1".into(),
        ));
    }
    if gcd(f[0] as u64, p as u64) != 1 {
        return Err(Error::Parameter(
            "t is not invertible: constant term of the modulus shares a factor with p".into(),
        ));
    }
    let size = (p as usize)
        .checked_pow(d as u32)
        .filter(|&s| s <= 1 << 16)
        .ok_or_else(|| Error::Parameter("quandle too large".into()))?;

    let digits = |mut i: usize| -> Vec<i64> {
        (0..d)
            .map(|_| {
                let c = (i % p as usize) as i64;
                i /= p as usize;
                c
            })
            .collect()
    };
    let index = |v: &[i64]| -> usize {
        v.iter()
            .rev()
            .fold(0usize, |acc, &c| acc * p as usize + c.rem_euclid(pm) as usize)
    };
    // multiply by t and reduce with t^d = -(f_0 + ... + f_{d-1} t^{d-1})
    let times_t = |v: &[i64]| -> Vec<i64> {
        let top = v[d - 1];
        let mut out = vec![0i64; d];
        for k in (1..d).rev() {
            out[k] = v[k - 1];
        }
        for k in 0..d {
            out[k] = (out[k] - top * f[k]).rem_euclid(pm);
        }
        out
    };
    let op = Operation::from_fn(size, |x, y| {
        let (a, b) = (digits(x), digits(y));
        let (ta, tb) = (times_t(&a), times_t(&b));
        let r: Vec<i64> = (0..d).map(|k| ta[k] + b[k] - tb[k]).collect();
        index(&r)
    });
    let labels = (0..size).map(|i| poly_label(&digits(i))).collect();
    Ok(Labelled {
        table: QuandleTable::from_operation(op),
        labels,
    })
}

fn poly_label(coeffs: &[i64]) -> String {
    let mut parts = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let var = match k {
            0 => String::new(),
            1 => "t".to_owned(),
            _ => format!("t^{k}"),
        };
        parts.push(match (c, k) {
            (_, 0) => c.to_string(),
            (1, _) => var,
            _ => format!("{c}{var}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// The dihedral quandle `R_n`: `Z_n` with `x ▷ y = 2y - x`, in the order
/// `x_i = i - 1`.
pub fn dihedral_quandle(n: usize) -> Result<Labelled<QuandleTable>> {
    if n == 0 {
        return Err(Error::Parameter("dihedral quandle needs n >= 1".into()));
    }
    let op = Operation::from_fn(n, |x, y| (2 * y + n - x) % n);
    Ok(Labelled {
        table: QuandleTable::from_operation(op),
        labels: (0..n).map(|i| i.to_string()).collect(),
    })
}

/// The conjugation quandle `g ▷ h = h^{-k} g h^k` of a finite group given
/// by its 1-based Cayley table (`rows[g][h] = gh`). Element labels follow
/// the group table.
pub fn conjugation_quandle(rows: Vec<Vec<usize>>, k: i64) -> Result<Labelled<QuandleTable>> {
    let mul = Operation::from_rows(&rows, "group table")?;
    let n = mul.order();
    let e = (0..n)
        .find(|&e| (0..n).all(|g| mul.apply(e, g) == g && mul.apply(g, e) == g))
        .ok_or_else(|| Error::Structure("group table has no identity".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul.apply(mul.apply(a, b), c) != mul.apply(a, mul.apply(b, c)) {
                    return Err(Error::Structure(format!(
                        "group table is not associative at ({}, {}, {})",
                        a + 1,
                        b + 1,
                        c + 1
                    )));
                }
            }
        }
    }
    let inv: Vec<usize> = (0..n)
        .map(|g| {
            (0..n)
                .find(|&h| mul.apply(g, h) == e)
                .ok_or_else(|| Error::Structure(format!("element {} has no inverse", g + 1)))
        })
        .collect::<Result<_>>()?;
    let power = |h: usize, k: i64| -> usize {
        let base = if k >= 0 { h } else { inv[h] };
        let mut acc = e;
        for _ in 0..k.unsigned_abs() {
            acc = mul.apply(acc, base);
        }
        acc
    };
    let op = Operation::from_fn(n, |g, h| {
        let hk = power(h, k);
        mul.apply(mul.apply(inv[hk], g), hk)
    });
    Ok(Labelled {
        table: QuandleTable::from_operation(op),
        labels: (1..=n).map(|g| format!("g{g}")).collect(),
    })
}

/// The Alexander biquandle on `Z_n`:
/// `a^b = t a + (1 - s t) b`, `a^{\bar b} = t^{-1} a + (1 - s^{-1} t^{-1}) b`,
/// `a_b = s a`, `a_{\bar b} = s^{-1} a`, in the order `x_i = i`, `x_n = 0`.
pub fn alexander_biquandle(n: usize, s: i64, t: i64) -> Result<Labelled<BiquandleTable>> {
    let m = n as i64;
    let s_inv = require_unit("s", s, m)?;
    let t_inv = require_unit("t", t, m)?;
    let build = |f: &dyn Fn(i64, i64) -> i64| {
        Operation::from_fn(n, |x, y| zn_index(f(zn_value(x, m), zn_value(y, m)), m))
    };
    let ops = [
        build(&|a, b| t_inv * a + (1 - s_inv * t_inv) * b),
        build(&|a, b| t * a + (1 - s * t) * b),
        build(&|a, _| s_inv * a),
        build(&|a, _| s * a),
    ];
    Ok(Labelled {
        table: BiquandleTable::from_operations(ops),
        labels: zn_labels(n),
    })
}

/// The four ways a quandle is a biquandle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Embedding {
    /// `a^b = a ▷ b`, `a^{\bar b} = a ▷^{-1} b`, `a_b = a_{\bar b} = a`.
    Upper,
    /// `a^b = a ▷^{-1} b`, `a^{\bar b} = a ▷ b`, `a_b = a_{\bar b} = a`.
    UpperInverse,
    /// `a_b = a ▷ b`, `a_{\bar b} = a ▷^{-1} b`, `a^b = a^{\bar b} = a`.
    Lower,
    /// `a_b = a ▷^{-1} b`, `a_{\bar b} = a ▷ b`, `a^b = a^{\bar b} = a`.
    LowerInverse,
}

impl Embedding {
    pub const ALL: [Embedding; 4] = [
        Embedding::Upper,
        Embedding::UpperInverse,
        Embedding::Lower,
        Embedding::LowerInverse,
    ];

    /// Variant `1..=4` in the order listed in [`Embedding::ALL`].
    pub fn from_index(i: usize) -> Result<Self> {
        Self::ALL
            .get(i.wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::Parameter(format!("embedding variant must be 1..=4, got {i}")))
    }
}

/// # Panics
/// Panics if the columns of `q` are not permutations.
pub fn quandle_to_biquandle(q: &QuandleTable, variant: Embedding) -> BiquandleTable {
    let op = q.operation();
    let n = op.order();
    let fwd = op.clone();
    let inv = Operation::from_fn(n, |x, y| op.apply_inverse(x, y));
    let proj = Operation::from_fn(n, |x, _| x);
    // order: op_1 = a^{\bar b}, op_2 = a^b, op_3 = a_{\bar b}, op_4 = a_b
    let ops = match variant {
        Embedding::Upper => [inv, fwd, proj.clone(), proj],
        Embedding::UpperInverse => [fwd, inv, proj.clone(), proj],
        Embedding::Lower => [proj.clone(), proj, inv, fwd],
        Embedding::LowerInverse => [proj.clone(), proj, fwd, inv],
    };
    BiquandleTable::from_operations(ops)
}
