//! Sparse integer polynomials in the fixed variable sets `{s, t}` and
//! `{s_1..s_4, t_1..t_4}`, plus matrices and multisets of them.
//!
//! Exponent vectors are ordered `[s, t]` for quandle polynomials and
//! `[s_1, s_2, s_3, s_4, t_1, t_2, t_3, t_4]` for biquandle polynomials.
//! Terms are kept and printed in descending lexicographic order of the
//! exponent vector. Biquandle monomials print their variables interleaved
//! as `s_1 t_1 s_2 t_2 ...`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Kind;
use crate::error::{Error, Result};

/// A polynomial variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    S,
    T,
    /// `s_i`, `i` in `1..=4`.
    Si(usize),
    /// `t_i`, `i` in `1..=4`.
    Ti(usize),
}

impl Var {
    /// Position in the exponent vector of `kind`.
    pub fn index(self, kind: Kind) -> Result<usize> {
        match (kind, self) {
            (Kind::Quandle, Var::S) => Ok(0),
            (Kind::Quandle, Var::T) => Ok(1),
            (Kind::Biquandle, Var::Si(i)) if (1..=4).contains(&i) => Ok(i - 1),
            (Kind::Biquandle, Var::Ti(i)) if (1..=4).contains(&i) => Ok(3 + i),
            _ => Err(Error::KindMismatch(format!(
                "variable {self} does not belong to {kind} polynomials"
            ))),
        }
    }

    /// The variable at exponent position `index`.
    pub fn at(kind: Kind, index: usize) -> Var {
        match kind {
            Kind::Quandle => [Var::S, Var::T][index],
            Kind::Biquandle if index < 4 => Var::Si(index + 1),
            Kind::Biquandle => Var::Ti(index - 3),
        }
    }

    /// All variables of `kind` in exponent-vector order.
    pub fn all(kind: Kind) -> Vec<Var> {
        (0..kind.variable_count()).map(|i| Var::at(kind, i)).collect()
    }

    /// Variables in printing order.
    fn print_order(kind: Kind) -> &'static [usize] {
        match kind {
            Kind::Quandle => &[0, 1],
            Kind::Biquandle => &[0, 4, 1, 5, 2, 6, 3, 7],
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::S => f.write_str("s"),
            Var::T => f.write_str("t"),
            Var::Si(i) => write!(f, "s_{i}"),
            Var::Ti(i) => write!(f, "t_{i}"),
        }
    }
}

/// An exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn kind(&self) -> Result<Kind> {
        match self.0.len() {
            2 => Ok(Kind::Quandle),
            8 => Ok(Kind::Biquandle),
            l => Err(Error::KindMismatch(format!(
                "exponent vector of length {l}; expected 2 or 8"
            ))),
        }
    }
}

/// A constant or a variable of the target ring, for [`Poly::substitute`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subst {
    Const(i64),
    Var(Var),
}

/// A sparse polynomial with nonzero `i64` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    kind: Kind,
    terms: BTreeMap<Monomial, i64>,
}

impl Poly {
    pub fn zero(kind: Kind) -> Self {
        Poly {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(kind: Kind, c: i64) -> Self {
        let mut p = Self::zero(kind);
        p.add_term(Monomial(vec![0; kind.variable_count()]), c)
            .expect("adding to zero cannot overflow");
        p
    }

    pub fn monomial(kind: Kind, exponents: Vec<u32>, coefficient: i64) -> Result<Self> {
        let mut p = Self::zero(kind);
        p.add_term(Monomial(exponents), coefficient)?;
        Ok(p)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    /// Adds `coefficient * monomial` in place, dropping a term that
    /// cancels.
    pub fn add_term(&mut self, monomial: Monomial, coefficient: i64) -> Result<()> {
        if monomial.0.len() != self.kind.variable_count() {
            return Err(Error::KindMismatch(format!(
                "monomial with {} exponents added to a {} polynomial",
                monomial.0.len(),
                self.kind
            )));
        }
        if coefficient == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(monomial);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o
                    .get()
                    .checked_add(coefficient)
                    .ok_or(Error::Overflow("polynomial coefficient"))?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Poly) -> Result<Poly> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch(format!(
                "cannot add a {} polynomial to a {} polynomial",
                other.kind, self.kind
            )));
        }
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    /// Sum of all coefficients, i.e. the value at all variables equal to 1.
    pub fn coefficient_sum(&self) -> Result<i64> {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("coefficient sum"))
    }

    /// The constant value, if the polynomial has no variables left.
    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => {
                let (m, &c) = self.terms.iter().next().expect("one term");
                m.0.iter().all(|&e| e == 0).then_some(c)
            }
            _ => None,
        }
    }

    /// Rewrites every variable of `self` into the `target` ring: `map[i]`
    /// replaces the variable at exponent position `i`.
    pub fn substitute(&self, target: Kind, map: &[Subst]) -> Result<Poly> {
        if map.len() != self.kind.variable_count() {
            return Err(Error::Parameter(format!(
                "substitution has {} entries, polynomial has {} variables",
                map.len(),
                self.kind.variable_count()
            )));
        }
        let slots: Vec<Option<usize>> = map
            .iter()
            .map(|s| match s {
                Subst::Const(_) => Ok(None),
                Subst::Var(v) => v.index(target).map(Some),
            })
            .collect::<Result<_>>()?;
        let mut out = Poly::zero(target);
        for (m, c) in self.terms() {
            let mut coeff = c;
            let mut exps = vec![0u32; target.variable_count()];
            for (i, &e) in m.0.iter().enumerate() {
                match (map[i], slots[i]) {
                    (_, Some(slot)) => {
                        exps[slot] = exps[slot]
                            .checked_add(e)
                            .ok_or(Error::Overflow("exponent"))?;
                    }
                    (Subst::Const(v), None) => {
                        let pow = v.checked_pow(e).ok_or(Error::Overflow("specialization"))?;
                        coeff = coeff
                            .checked_mul(pow)
                            .ok_or(Error::Overflow("specialization"))?;
                    }
                    (Subst::Var(_), None) => unreachable!("slot resolved above"),
                }
            }
            out.add_term(Monomial(exps), coeff)?;
        }
        Ok(out)
    }

    /// Substitutes integer constants for some variables and re-collects.
    pub fn specialize(&self, assignment: &[(Var, i64)]) -> Result<Poly> {
        let n = self.kind.variable_count();
        let mut map: Vec<Subst> = (0..n).map(|i| Subst::Var(Var::at(self.kind, i))).collect();
        for &(var, value) in assignment {
            map[var.index(self.kind)?] = Subst::Const(value);
        }
        self.substitute(self.kind, &map)
    }

    /// Value at an assignment covering every variable.
    pub fn evaluate(&self, assignment: &[(Var, i64)]) -> Result<i64> {
        let p = self.specialize(assignment)?;
        p.as_constant()
            .ok_or_else(|| Error::Parameter("assignment does not cover every variable".into()))
    }

    /// The canonical text form, e.g. `5s^5t+5st` or `4s_1^2t_1^3`.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    /// Parses polynomial text. Accepts the canonical form as well as
    /// braced exponents (`s^{10}`), `s_{1}`, whitespace, any variable order
    /// within a monomial and repeated monomials.
    pub fn parse(kind: Kind, text: &str) -> Result<Poly> {
        PolyParser::new(kind, text).parse()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let constant = m.0.iter().all(|&e| e == 0);
            if c < 0 {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let abs = c.unsigned_abs();
            if abs != 1 || constant {
                write!(f, "{abs}")?;
            }
            for &slot in Var::print_order(self.kind) {
                let e = m.0[slot];
                if e == 0 {
                    continue;
                }
                write!(f, "{}", Var::at(self.kind, slot))?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    kind: String,
    terms: Vec<(Monomial, i64)>,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            kind: self.kind.to_string(),
            terms: self.terms().map(|(m, c)| (m.clone(), c)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PolyRepr::deserialize(deserializer)?;
        let kind = match repr.kind.as_str() {
            "quandle" => Kind::Quandle,
            "biquandle" => Kind::Biquandle,
            other => return Err(D::Error::custom(format!("unknown polynomial kind `{other}`"))),
        };
        let mut p = Poly::zero(kind);
        for (m, c) in repr.terms {
            if m.kind().map_err(D::Error::custom)? != kind {
                return Err(D::Error::custom("exponent vector does not match kind"));
            }
            p.add_term(m, c).map_err(D::Error::custom)?;
        }
        Ok(p)
    }
}

struct PolyParser<'a> {
    kind: Kind,
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(kind: Kind, text: &'a str) -> Self {
        PolyParser {
            kind,
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let before = &self.text[..self.pos.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(self.pos, |nl| self.pos - nl - 1) + 1;
        Error::parse(line, column, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<Option<u64>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        self.text[start..self.pos]
            .parse()
            .map(Some)
            .map_err(|_| self.error("number too large"))
    }

    /// A number, optionally wrapped in braces.
    fn braced_number(&mut self) -> Result<u64> {
        let braced = self.eat(b'{');
        let v = self
            .number()?
            .ok_or_else(|| self.error("expected a number"))?;
        if braced && !self.eat(b'}') {
            return Err(self.error("expected `}`"));
        }
        Ok(v)
    }

    fn parse(mut self) -> Result<Poly> {
        let mut poly = Poly::zero(self.kind);
        if self.peek().is_none() {
            return Err(self.error("empty polynomial"));
        }
        let mut first = true;
        loop {
            let sign = if self.eat(b'-') {
                -1
            } else if self.eat(b'+') || first {
                1
            } else {
                break;
            };
            first = false;
            let (m, c) = self.term()?;
            let c = c.checked_mul(sign).ok_or(Error::Overflow("coefficient"))?;
            poly.add_term(m, c)?;
        }
        if self.peek().is_some() {
            return Err(self.error("unexpected character"));
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(Monomial, i64)> {
        let parsed = self.number()?;
        let coeff = match parsed {
            Some(c) => i64::try_from(c).map_err(|_| self.error("coefficient too large"))?,
            None => 1,
        };
        let mut exps = vec![0u32; self.kind.variable_count()];
        let mut any_var = false;
        while let Some(b @ (b's' | b't')) = self.peek() {
            self.pos += 1;
            let var = if self.eat(b'_') {
                let i = self.braced_number()? as usize;
                if b == b's' {
                    Var::Si(i)
                } else {
                    Var::Ti(i)
                }
            } else if b == b's' {
                Var::S
            } else {
                Var::T
            };
            let slot = var.index(self.kind).map_err(|e| self.error(e.to_string()))?;
            let e = if self.eat(b'^') {
                u32::try_from(self.braced_number()?).map_err(|_| self.error("exponent too large"))?
            } else {
                1
            };
            exps[slot] = exps[slot]
                .checked_add(e)
                .ok_or(Error::Overflow("exponent"))?;
            any_var = true;
        }
        if !any_var && parsed.is_none() {
            return Err(self.error("expected a coefficient or a variable"));
        }
        Ok((Monomial(exps), coeff))
    }
}

/// An `N x N` matrix of polynomials; entry `(m, n)` is the `(m, n)`
/// polynomial (both 0-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMatrix {
    entries: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<Poly>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(Error::Structure("polynomial matrix must be square and nonempty".into()));
        }
        let kind = entries[0][0].kind();
        if entries.iter().flatten().any(|p| p.kind() != kind) {
            return Err(Error::KindMismatch("matrix entries of mixed kind".into()));
        }
        Ok(PolyMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, m: usize, n: usize) -> &Poly {
        &self.entries[m][n]
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.entries
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(Poly::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A multiset of polynomials. Rendered as a formal sum
/// `mult q^{poly} + ...`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PolyMultiset {
    counts: BTreeMap<Poly, u64>,
}

impl PolyMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: Poly) {
        self.insert_many(p, 1);
    }

    pub fn insert_many(&mut self, p: Poly, count: u64) {
        if count > 0 {
            *self.counts.entry(p).or_insert(0) += count;
        }
    }

    pub fn multiplicity(&self, p: &Poly) -> u64 {
        self.counts.get(p).copied().unwrap_or(0)
    }

    /// Total multiplicity (the value at `q = 1`).
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of distinct polynomials.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Poly, u64)> {
        self.counts.iter().map(|(p, &c)| (p, c))
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Parses `q`-sum text such as `5q^{s^10t^10}+20q^{5s^10t^10}`.
    pub fn parse(kind: Kind, text: &str) -> Result<PolyMultiset> {
        let mut ms = PolyMultiset::new();
        let bytes = text.as_bytes();
        let mut pos = 0;
        let skip = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let err = |pos: usize, msg: &str| Error::parse(1, pos + 1, msg);
        skip(&mut pos);
        if text[pos..].trim() == "0" {
            return Ok(ms);
        }
        loop {
            skip(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mult: u64 = if start == pos {
                1
            } else {
                text[start..pos].parse().map_err(|_| err(start, "bad multiplicity"))?
            };
            skip(&mut pos);
            if !text[pos..].starts_with("q^{") {
                return Err(err(pos, "expected `q^{`"));
            }
            pos += 3;
            let open = pos;
            let mut depth = 1;
            while pos < bytes.len() && depth > 0 {
                match bytes[pos] {
                    b'{' => depth += 1,
                    b'}' => depth -= 1,
                    _ => {}
                }
                pos += 1;
            }
            if depth != 0 {
                return Err(err(open, "unbalanced braces"));
            }
            let poly = Poly::parse(kind, &text[open..pos - 1])?;
            ms.insert_many(poly, mult);
            skip(&mut pos);
            if pos == bytes.len() {
                return Ok(ms);
            }
            if bytes[pos] != b'+' {
                return Err(err(pos, "expected `+`"));
            }
            pos += 1;
        }
    }
}

impl fmt::Display for PolyMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(String, u64)> = self
            .counts
            .iter()
            .map(|(p, &c)| (p.to_string(), c))
            .collect();
        terms.sort();
        for (i, (p, c)) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if *c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "q^{{{p}}}")?;
        }
        Ok(())
    }
}

impl FromIterator<Poly> for PolyMultiset {
    fn from_iter<I: IntoIterator<Item = Poly>>(iter: I) -> Self {
        let mut ms = PolyMultiset::new();
        for p in iter {
            ms.insert(p);
        }
        ms
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(text: &str) -> Poly {
        Poly::parse(Kind::Quandle, text).unwrap()
    }

    fn b(text: &str) -> Poly {
        Poly::parse(Kind::Biquandle, text).unwrap()
    }

    #[test]
    fn like_terms_merge() {
        assert_eq!(q("2s^2t").add(&q("s^2t")).unwrap(), q("3s^2t"));
    }

    #[test]
    fn distinct_monomials_stay_apart() {
        let p = q("s^4t^4").add(&q("s^2t^2")).unwrap();
        assert_eq!(p.to_string(), "s^4t^4+s^2t^2");
    }

    #[test]
    fn four_copies_sum() {
        let one = q("s^2t^2");
        let mut acc = Poly::zero(Kind::Quandle);
        for _ in 0..4 {
            acc = acc.add(&one).unwrap();
        }
        assert_eq!(acc.to_string(), "4s^2t^2");
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(Poly::zero(Kind::Quandle).to_string(), "0");
        assert_eq!(q("5st + 5s^5t").to_string(), "5s^5t+5st");
        assert_eq!(q("4s^{4}t^{4}").to_string(), "4s^4t^4");
        assert_eq!(q("3").to_string(), "3");
        assert_eq!(q("t - s").to_string(), "-s+t");
        assert_eq!(q("s^10t^10").to_string(), "s^10t^10");
    }

    #[test]
    fn biquandle_printing_interleaves_variables() {
        let p = b("2s_1s_2t_3t_4 + s_1t_1^3s_2t_2^3s_3^3t_3s_4^3t_4");
        assert_eq!(p.to_string(), "s_1t_1^3s_2t_2^3s_3^3t_3s_4^3t_4+2s_1s_2t_3t_4");
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = q("3st").add(&q("-3st")).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn mode_mismatch_is_an_error() {
        assert!(matches!(q("s").add(&b("s_1")), Err(Error::KindMismatch(_))));
        assert!(Poly::parse(Kind::Quandle, "s_1").is_err());
        assert!(Poly::parse(Kind::Biquandle, "s").is_err());
    }

    #[test]
    fn overflow_is_checked() {
        let big = Poly::constant(Kind::Quandle, i64::MAX);
        assert_eq!(big.add(&Poly::constant(Kind::Quandle, 1)), Err(Error::Overflow("polynomial coefficient")));
    }

    #[test]
    fn specialization() {
        assert_eq!(q("4s^2t^2").evaluate(&[(Var::S, 1), (Var::T, 1)]).unwrap(), 4);
        assert_eq!(q("2s^2t + st^3").specialize(&[(Var::S, 2)]).unwrap(), q("8t + 2t^3"));
        assert_eq!(Poly::zero(Kind::Quandle).evaluate(&[(Var::S, 5), (Var::T, 7)]).unwrap(), 0);
        assert!(q("st").evaluate(&[(Var::S, 1)]).is_err());
    }

    #[test]
    fn substitute_projects_biquandle_to_quandle() {
        let p = b("2s_1s_2^3t_3t_2 + s_2t_2");
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
        assert_eq!(p.substitute(Kind::Quandle, &map).unwrap(), q("2s^3t+st"));
    }

    #[test]
    fn parse_errors_carry_position() {
        match Poly::parse(Kind::Quandle, "3s^2 + x") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 8),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Poly::parse(Kind::Quandle, "").is_err());
        assert!(Poly::parse(Kind::Quandle, "s^").is_err());
    }

    #[test]
    fn multiset_rendering_and_equality() {
        let mut ms = PolyMultiset::new();
        ms.insert(q("s^3t"));
        assert_eq!(ms.render(), "q^{s^3t}");
        let mut a = PolyMultiset::new();
        a.insert_many(q("st"), 2);
        a.insert(q("s^2t"));
        let mut c = PolyMultiset::new();
        c.insert(q("st"));
        c.insert_many(q("s^2t"), 2);
        assert_ne!(a, c);
        assert_eq!(PolyMultiset::parse(Kind::Quandle, &a.render()).unwrap(), a);
        assert_eq!(PolyMultiset::new().render(), "0");
    }

    #[test]
    fn serde_round_trip() {
        let p = b("2s_1^2t_1^4s_2^2t_2^4t_3^4t_4^4+2s_1^2t_1^4s_2^2t_2^4s_3^4t_3^4s_4^4t_4^4");
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.starts_with(r#"{"kind":"biquandle","terms":[[[2,2,4,4,4,4,4,4],2]"#), "{json}");
        let back: Poly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    fn arb_poly(kind: Kind) -> impl Strategy<Value = Poly> {
        let vars = kind.variable_count();
        prop::collection::vec(
            (prop::collection::vec(0u32..6, vars), -50i64..50),
            0..8,
        )
        .prop_map(move |terms| {
            let mut p = Poly::zero(kind);
            for (e, c) in terms {
                p.add_term(Monomial::new(e), c).unwrap();
            }
            p
        })
    }

    fn arb_any() -> impl Strategy<Value = Poly> {
        prop_oneof![arb_poly(Kind::Quandle), arb_poly(Kind::Biquandle)]
    }

    proptest! {
        #[test]
        fn addition_commutes(a in arb_poly(Kind::Quandle), b in arb_poly(Kind::Quandle)) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        }

        #[test]
        fn addition_associates(
            a in arb_poly(Kind::Biquandle),
            b in arb_poly(Kind::Biquandle),
            c in arb_poly(Kind::Biquandle),
        ) {
            prop_assert_eq!(
                a.add(&b).unwrap().add(&c).unwrap(),
                a.add(&b.add(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn canonical_string_round_trips(p in arb_any()) {
            let text = p.canonical_string();
            prop_assert_eq!(Poly::parse(p.kind(), &text).unwrap(), p);
        }

        #[test]
        fn all_ones_is_coefficient_sum(p in arb_poly(Kind::Biquandle)) {
            let ones: Vec<(Var, i64)> =
                (1..=4).flat_map(|i| [(Var::Si(i), 1), (Var::Ti(i), 1)]).collect();
            prop_assert_eq!(p.evaluate(&ones).unwrap(), p.coefficient_sum().unwrap());
        }
    }
}
