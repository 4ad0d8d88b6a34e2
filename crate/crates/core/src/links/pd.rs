//! Signed PD codes.
//!
//! A crossing is written `X+[a,b,c,d]` or `X-[a,b,c,d]`. Labels run
//! counterclockwise starting from the incoming under-strand, so `a` enters
//! under and `c` leaves under. At a positive crossing the over-strand
//! enters at `d` and leaves at `b`; at a negative one it enters at `b` and
//! leaves at `d`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: Sign,
    pub labels: [u32; 4],
}

impl Crossing {
    pub fn under_in(&self) -> u32 {
        self.labels[0]
    }

    pub fn under_out(&self) -> u32 {
        self.labels[2]
    }

    pub fn over_in(&self) -> u32 {
        match self.sign {
            Sign::Positive => self.labels[3],
            Sign::Negative => self.labels[1],
        }
    }

    pub fn over_out(&self) -> u32 {
        match self.sign {
            Sign::Positive => self.labels[1],
            Sign::Negative => self.labels[3],
        }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.labels;
        write!(f, "X{}[{a},{b},{c},{d}]", self.sign)
    }
}

/// A validated oriented link diagram. `free_loops` counts crossingless
/// unknotted components (the unknot is one free loop and no crossings).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl PdCode {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(Error::Diagram("diagram has no crossings and no loops".into()));
        }
        check_labels(&crossings, |i| format!("crossing {}", i + 1))?;
        Ok(PdCode {
            crossings,
            free_loops,
        })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Distinct labels in increasing order.
    pub fn labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.crossings.iter().flat_map(|c| c.labels).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Label following `label` along its component.
    pub fn successor(&self, label: u32) -> u32 {
        for c in &self.crossings {
            if c.under_in() == label {
                return c.under_out();
            }
            if c.over_in() == label {
                return c.over_out();
            }
        }
        panic!("label {label} is not in the diagram")
    }

    pub fn component_count(&self) -> usize {
        let mut seen = BTreeMap::new();
        let mut count = 0;
        for l in self.labels() {
            if seen.contains_key(&l) {
                continue;
            }
            count += 1;
            let mut cur = l;
            while seen.insert(cur, ()).is_none() {
                cur = self.successor(cur);
            }
        }
        count + self.free_loops
    }

    /// The mirror image: every crossing changes sign, keeping the strands
    /// and orientation.
    pub fn mirror(&self) -> PdCode {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                // rotate so the new under-strand is the old over-strand
                let [a, b, c4, d] = c.labels;
                let labels = match c.sign {
                    Sign::Positive => [d, a, b, c4],
                    Sign::Negative => [b, c4, d, a],
                };
                Crossing {
                    sign: c.sign.flip(),
                    labels,
                }
            })
            .collect();
        PdCode {
            crossings,
            free_loops: self.free_loops,
        }
    }

    /// Closure of a braid on `strands` strands. Generator `i` is `σ_i`,
    /// `-i` is its inverse. In a positive `σ_i` the strand at position
    /// `i + 1` passes under the strand at position `i`.
    ///
    /// Labels are renumbered consecutively along each component.
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parameter("a braid needs at least one strand".into()));
        }
        let mut cur: Vec<u32> = (1..=strands as u32).collect();
        let mut next = strands as u32 + 1;
        let mut raw = Vec::with_capacity(word.len());
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= strands {
                return Err(Error::Parameter(format!(
                    "generator {g} does not act on {strands} strands"
                )));
            }
            let (left, right) = (cur[i - 1], cur[i]);
            let (new_left, new_right) = (next, next + 1);
            next += 2;
            let (sign, labels) = if g > 0 {
                (Sign::Positive, [right, new_right, new_left, left])
            } else {
                (Sign::Negative, [left, right, new_right, new_left])
            };
            raw.push(Crossing { sign, labels });
            cur[i - 1] = new_left;
            cur[i] = new_right;
        }
        // close up: the final label at each position is the initial one
        let mut close: BTreeMap<u32, u32> = BTreeMap::new();
        for (p, &l) in cur.iter().enumerate() {
            close.insert(l, p as u32 + 1);
        }
        for c in &mut raw {
            for l in &mut c.labels {
                *l = close.get(l).copied().unwrap_or(*l);
            }
        }
        // positions never touched by a generator are free loops
        let touched: std::collections::BTreeSet<u32> =
            raw.iter().flat_map(|c| c.labels).collect();
        let free_loops = (1..=strands as u32).filter(|p| !touched.contains(p)).count();
        let unlabelled = PdCode {
            crossings: raw,
            free_loops,
        };
        check_labels(&unlabelled.crossings, |i| format!("generator {}", i + 1))?;
        Ok(unlabelled.renumbered())
    }

    /// Renumbers labels `1..` walking each component in turn, starting each
    /// one from its first label in crossing order.
    pub fn renumbered(&self) -> PdCode {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        let mut next = 1;
        for c in &self.crossings {
            for &start in &c.labels {
                if map.contains_key(&start) {
                    continue;
                }
                let mut cur = start;
                while !map.contains_key(&cur) {
                    map.insert(cur, next);
                    next += 1;
                    cur = self.successor(cur);
                }
            }
        }
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                sign: c.sign,
                labels: c.labels.map(|l| map[&l]),
            })
            .collect();
        PdCode {
            crossings,
            free_loops: self.free_loops,
        }
    }

    pub fn to_json(&self) -> String {
        let doc = PdJson {
            crossings: self
                .crossings
                .iter()
                .map(|c| CrossingJson {
                    sign: c.sign,
                    tuple: c.labels,
                })
                .collect(),
            free_loops: self.free_loops,
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PdJson = serde_json::from_str(text)
            .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
        let crossings: Vec<Crossing> = doc
            .crossings
            .into_iter()
            .map(|c| Crossing {
                sign: c.sign,
                labels: c.tuple,
            })
            .collect();
        if crossings.iter().any(|c| c.labels.contains(&0)) {
            return Err(Error::Diagram("labels must be positive integers".into()));
        }
        PdCode::new(crossings, doc.free_loops)
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.crossings.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct CrossingJson {
    sign: Sign,
    tuple: [u32; 4],
}

#[derive(Serialize, Deserialize)]
struct PdJson {
    crossings: Vec<CrossingJson>,
    #[serde(default)]
    free_loops: usize,
}

/// Every label must enter exactly one crossing and leave exactly one.
fn check_labels(crossings: &[Crossing], place: impl Fn(usize) -> String) -> Result<()> {
    let mut ins: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    let mut outs: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, c) in crossings.iter().enumerate() {
        ins.entry(c.under_in()).or_default().push(i);
        ins.entry(c.over_in()).or_default().push(i);
        outs.entry(c.under_out()).or_default().push(i);
        outs.entry(c.over_out()).or_default().push(i);
    }
    let labels: std::collections::BTreeSet<u32> = ins.keys().chain(outs.keys()).copied().collect();
    for l in labels {
        let i = ins.get(&l).map_or(&[][..], Vec::as_slice);
        let o = outs.get(&l).map_or(&[][..], Vec::as_slice);
        if i.len() + o.len() != 2 {
            let at = i.iter().chain(o).min().copied().unwrap_or(0);
            return Err(Error::Diagram(format!(
                "label {l} appears {} times (first at {}), expected 2",
                i.len() + o.len(),
                place(at)
            )));
        }
        if i.len() != 1 {
            let at = i.iter().chain(o).min().copied().unwrap_or(0);
            return Err(Error::Diagram(format!(
                "label {l} is {} at both ends (first at {}); strands must be oriented consistently",
                if i.len() == 2 { "incoming" } else { "outgoing" },
                place(at)
            )));
        }
    }
    Ok(())
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_space(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.column, msg)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_space();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{want}`, found end of input"))),
        }
    }

    fn label(&mut self) -> Result<u32> {
        self.skip_space();
        let (line, column) = (self.line, self.column);
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(self.err("expected a positive integer label"));
        }
        match digits.parse::<u32>() {
            Ok(0) => Err(Error::parse(line, column, "labels must be positive")),
            Ok(v) => Ok(v),
            Err(_) => Err(Error::parse(line, column, "label too large")),
        }
    }
}

/// Parses whitespace-separated `X±[a,b,c,d]` terms. Lines starting with
/// `#` are comments.
pub fn parse_pd(text: &str) -> Result<PdCode> {
    let stripped: String = text
        .lines()
        .map(|l| if l.trim_start().starts_with('#') { "" } else { l })
        .collect::<Vec<_>>()
        .join("\n");
    let mut cur = Cursor {
        chars: stripped.chars().peekable(),
        line: 1,
        column: 1,
    };
    let mut crossings = Vec::new();
    loop {
        cur.skip_space();
        let Some(c) = cur.peek() else { break };
        if c != 'X' {
            return Err(cur.err(format!("expected `X+[` or `X-[`, found `{c}`")));
        }
        cur.bump();
        let sign = match cur.bump() {
            Some('+') => Sign::Positive,
            Some('-') => Sign::Negative,
            Some(other) => {
                return Err(Error::parse(
                    cur.line,
                    cur.column - 1,
                    format!("unknown crossing sign `{other}`"),
                ))
            }
            None => return Err(cur.err("missing crossing sign")),
        };
        cur.expect('[')?;
        let mut labels = Vec::with_capacity(4);
        loop {
            labels.push(cur.label()?);
            cur.skip_space();
            match cur.peek() {
                Some(',') => {
                    cur.bump();
                }
                Some(']') => {
                    cur.bump();
                    break;
                }
                Some(c) => return Err(cur.err(format!("expected `,` or `]`, found `{c}`"))),
                None => return Err(cur.err("unterminated crossing")),
            }
        }
        if labels.len() != 4 {
            return Err(cur.err(format!(
                "a crossing has 4 labels, found {}",
                labels.len()
            )));
        }
        crossings.push(Crossing {
            sign,
            labels: [labels[0], labels[1], labels[2], labels[3]],
        });
    }
    if crossings.is_empty() {
        return Err(Error::parse(
            1,
            1,
            "empty diagram; use builtin:unknot for the crossingless knot",
        ));
    }
    PdCode::new(crossings, 0)
}

pub const BUILTIN_NAMES: [&str; 8] = [
    "unknot",
    "hopf",
    "trefoil",
    "figure8",
    "knot_5_1",
    "knot_6_1",
    "trefoil_r1",
    "trefoil_r2",
];

/// Named diagrams. All but `knot_6_1` are braid closures.
pub fn builtin_diagram(name: &str) -> Result<PdCode> {
    let (strands, word): (usize, &[i32]) = match name {
        "unknot" => return PdCode::new(Vec::new(), 1),
        "hopf" => (2, &[1, 1]),
        "trefoil" => (2, &[1, 1, 1]),
        "figure8" => (3, &[1, -2, 1, -2]),
        "knot_5_1" => (2, &[1, 1, 1, 1, 1]),
        "knot_6_1" => {
            return parse_pd(
                "X+[1,7,2,6] X-[3,10,4,11] X+[5,3,6,2] X+[7,1,8,12] X-[9,4,10,5] X+[11,9,12,8]",
            )
        }
        // stabilised: one extra strand and a kink
        "trefoil_r1" => (3, &[1, 1, 1, 2]),
        // a cancelling σ_1 σ_1^{-1} pair inserted
        "trefoil_r2" => (2, &[1, 1, -1, 1, 1]),
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    PdCode::from_braid(strands, word)
}
